import json

import pytest
from numpy.testing import assert_array_equal

from antileibniz.algebra import Algebra
from antileibniz.bialgebra import Bialgebra, Coalgebra
from antileibniz.core import get_field
from antileibniz.errors import ParseError, SchemaError
from antileibniz.rotabaxter import WeightedRB
from antileibniz.serialization import (
    canonicalize,
    dumps,
    from_document,
    infer_kind,
    load,
    loads,
    save,
)
from antileibniz.tensorconstruct import LeibnizBialgebra, catalog


def _text(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


LAMBDA21 = {
    "dim": 2,
    "field": "Q",
    "kind": "algebra",
    "products": [{"i": 1, "j": 1, "out": ["0", "1"]}],
}


def test_scalars_are_reduced():
    doc = dict(LAMBDA21, products=[{"i": 1, "j": 1, "out": [0, "2/4"]}])
    saved = json.loads(dumps(loads(_text(doc))))
    assert saved["products"][0]["out"] == ["0", "1/2"]


def test_canonical_text_is_stable():
    text = _text(LAMBDA21)
    assert canonicalize(text) == text
    assert dumps(loads(text)) == text


def test_canonical_drops_zero_entries():
    doc = dict(LAMBDA21, products=[
        {"i": 1, "j": 1, "out": ["0", "1"]},
        {"i": 2, "j": 2, "out": ["0", "0"]},
    ])
    assert canonicalize(_text(doc)) == _text(LAMBDA21)


def test_prime_field_scalars():
    doc = dict(LAMBDA21, field="GF(3)", products=[{"i": 1, "j": 1, "out": [0, 4]}])
    A = loads(_text(doc))
    assert A.field is get_field("GF(3)")
    saved = json.loads(dumps(A))
    assert saved["field"] == "GF(3)"
    assert saved["products"][0]["out"] == ["0 mod 3", "1 mod 3"]


def test_mixed_field_scalar():
    doc = dict(LAMBDA21, products=[{"i": 1, "j": 1, "out": ["0", "1 mod 3"]}])
    with pytest.raises(SchemaError) as err:
        loads(_text(doc))
    assert err.value.field == "products[0].out[1]"


@pytest.mark.parametrize(("products", "where"), [
    ([{"i": 3, "j": 1, "out": ["0", "1"]}], "products[0].i"),
    ([{"i": 1, "out": ["0", "1"]}], "products[0].j"),
    ([{"i": 1, "j": 1, "out": ["1"]}], "products[0].out"),
    ([{"i": 1, "j": 1, "out": ["0", 0.5]}], "products[0].out[1]"),
    ([{"i": 1, "j": 1, "out": ["0", "1"]}, {"i": 1, "j": 1, "out": ["1", "0"]}],
     "products[1]"),
])
def test_schema_errors_name_the_field(products, where):
    with pytest.raises(SchemaError) as err:
        loads(_text(dict(LAMBDA21, products=products)))
    assert err.value.field == where


def test_unknown_field_and_kind():
    with pytest.raises(SchemaError) as err:
        loads(_text(dict(LAMBDA21, field="R")))
    assert err.value.field == "field"
    with pytest.raises(SchemaError) as err:
        loads(_text(dict(LAMBDA21, kind="lie")))
    assert err.value.field == "kind"


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        loads('{"dim": 2,\n"field": }')
    assert err.value.line == 2
    assert err.value.col == 10


def test_infer_kind():
    assert infer_kind({"products": [], "coproducts": []}) == "bialgebra"
    assert infer_kind({"products": [], "gram": []}) == "quadratic"
    assert infer_kind({"products": [], "r": []}) == "rmatrix"
    assert infer_kind({"R": []}) == "rb"
    assert infer_kind({"A": {}, "B": {}}) == "matched_pair"
    assert infer_kind({"r": []}) == "r"
    with pytest.raises(SchemaError):
        infer_kind({"dim": 2})


def test_bialgebra_document_serves_as_algebra(lambda21_bialgebra):
    text = dumps(lambda21_bialgebra)
    assert isinstance(loads(text), Bialgebra)
    assert loads(text, "algebra") == lambda21_bialgebra.alg
    C = loads(text, "coalgebra")
    assert isinstance(C, Coalgebra)
    assert_array_equal(C.cc, lambda21_bialgebra.coa.cc)
    with pytest.raises(SchemaError):
        loads(_text(LAMBDA21), "coalgebra")


def test_leibniz_bialgebra_keeps_kind_and_labels():
    B = catalog("L3_bialgebra")
    doc = json.loads(dumps(B))
    assert doc["kind"] == "leibniz_bialgebra"
    assert doc["labels"] == list(B.alg.labels)
    again = loads(dumps(B))
    assert isinstance(again, LeibnizBialgebra)
    assert again.alg.labels == B.alg.labels


def test_structures_survive_a_file(tmp_path, double_r):
    path = save(double_r, tmp_path / "double.json")
    again = load(path)
    assert again.algebra == double_r.algebra
    assert_array_equal(again.r.coeff, double_r.r.coeff)
    assert path.read_text(encoding="utf-8") == dumps(again)


def test_rb_document(lambda21):
    R = WeightedRB(lambda21, [[-1, 0], [0, -1]], 1)
    again = from_document(json.loads(dumps(R)))
    assert isinstance(again, WeightedRB)
    assert_array_equal(again.R.matrix, R.R.matrix)
    assert again.weight == 1


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load(tmp_path / "absent.json")


def test_unparsable_scalar():
    doc = {"kind": "bialgebra", "field": "Q", "dim": 1,
           "products": [], "coproducts": [{"k": 1, "out": [{"i": 1, "j": 1, "c": "x"}]}]}
    with pytest.raises(SchemaError):
        loads(_text(doc))


def test_algebra_labels_round_trip():
    A = Algebra.from_products(2, {(1, 1): {2: 1}}, labels=["u", "v"])
    doc = json.loads(dumps(A))
    assert doc["labels"] == ["u", "v"]
    assert loads(dumps(A)).labels == ("u", "v")
