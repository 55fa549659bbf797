import pytest

from antileibniz.algebra import (
    Algebra,
    check_anti_leibniz,
    check_leibniz,
    check_right_leibniz,
)
from antileibniz.algebra.forms import BilinearForm
from antileibniz.bialgebra import Coalgebra, check_bialgebra, check_coalgebra
from antileibniz.core import QQ
from antileibniz.errors import (
    BadParameter,
    DimensionMismatch,
    PreconditionViolated,
    UnknownFixture,
)
from antileibniz.tensorconstruct import (
    AS_QUOTED,
    FIXTURES,
    OPPOSITE,
    QUOTED_TABLES,
    LeibnizBialgebra,
    QuadraticAA,
    aa_policy_report,
    catalog,
    check_leibniz_bialgebra,
    check_leibniz_coalgebra,
    check_quadratic_aa,
    induced_bialgebra,
    list_fixtures,
    product_coproduct_defect,
    quadratic_dual_coalgebra,
    quoted_induced_table,
    shipped_in_quoted_labels,
    tensor_algebra,
    tensor_coalgebra,
)

INDUCED = {
    "induced_L1": 4,
    "induced_L3": 4,
    "induced_leibniz3_a": 6,
    "induced_leibniz3_b": 6,
    "induced_leibniz3_c": 6,
}
LEIBNIZ_BIALGEBRAS = [
    "L1_bialgebra",
    "L3_bialgebra",
    "leibniz3_a_bialgebra",
    "leibniz3_b_bialgebra",
    "leibniz3_c_bialgebra",
]


@pytest.mark.parametrize("name", ["L1", "L2", "L3"])
def test_left_leibniz_fixtures(name):
    assert check_leibniz(catalog(name)).holds


def test_l3_orientations():
    # both fail at the triple (x2, x2, x2) in the other orientation
    left, right = catalog("L3"), catalog("L3_right")
    assert check_right_leibniz(right).holds
    assert not check_leibniz(right).holds
    assert not check_right_leibniz(left).holds


def test_aa2_policy():
    report = aa_policy_report(catalog("AA2").alg)
    assert report.holds
    assert "literal anti-commutativity: False" in report.notes


def test_aa_policy_rejects_noncommutative3(noncommutative3):
    report = aa_policy_report(noncommutative3)
    assert not report.holds
    assert report.first_failure.name == "anti-commutative (off-diagonal)"
    assert report.witness == (1, 2)


def test_quadratic_form_must_be_invariant():
    Q = QuadraticAA(catalog("AA2").alg, BilinearForm([[1, 0], [0, 1]]))
    report = check_quadratic_aa(Q)
    assert not report.holds
    assert not report.clause("form invariant").holds
    assert report.clause("form symmetric").holds
    assert report.clause("form nondegenerate").holds
    with pytest.raises(PreconditionViolated):
        quadratic_dual_coalgebra(Q)


def test_quadratic_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        QuadraticAA(catalog("AA2").alg, BilinearForm([[1]]))


def test_quadratic_dual_coalgebra_of_aa2():
    Q = catalog("AA2")
    assert check_quadratic_aa(Q).holds
    C = quadratic_dual_coalgebra(Q)
    expected = QQ.zeros((2, 2, 2))
    expected[0, 1, 1] = QQ.one()
    assert (C.cc == expected).all()
    assert QQ.is_zero(product_coproduct_defect(Q))


def test_tensor_algebra_of_l1_and_aa2():
    A = tensor_algebra(catalog("L1"), catalog("AA2").alg)
    assert A.dim == 4
    assert check_anti_leibniz(A).holds
    # (x1 (x) e1)(x1 (x) e1) = x2 (x) e2 and nothing else
    expected = QQ.zeros((4, 4, 4))
    expected[0, 0, 3] = QQ.one()
    assert (A.sc == expected).all()


def test_tensor_algebra_needs_left_leibniz():
    with pytest.raises(PreconditionViolated):
        tensor_algebra(catalog("L3_right"), catalog("AA2").alg)


def test_tensor_algebra_needs_aa_factor(noncommutative3):
    with pytest.raises(PreconditionViolated):
        tensor_algebra(catalog("L1"), noncommutative3)


def test_tensor_coalgebra_of_l1_and_aa2():
    C = tensor_coalgebra(catalog("L1_bialgebra").coa,
                         quadratic_dual_coalgebra(catalog("AA2")))
    assert C.dim == 4
    assert check_coalgebra(C).holds
    expected = QQ.zeros((4, 4, 4))
    expected[0, 3, 3] = QQ.one()
    assert (C.cc == expected).all()


@pytest.mark.parametrize("name", LEIBNIZ_BIALGEBRAS)
def test_leibniz_bialgebra_fixtures(name):
    B = catalog(name)
    assert check_leibniz_coalgebra(B.coa).holds
    assert check_leibniz_bialgebra(B).holds


def test_leibniz_coalgebra_failure():
    C = Coalgebra.from_coproducts(1, {1: {(1, 1): 1}})
    report = check_leibniz_coalgebra(C)
    assert not report.holds
    assert report.witness == (1,)


def test_leibniz_bialgebra_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        LeibnizBialgebra(catalog("L1"), Coalgebra.zero(3))


@pytest.mark.parametrize(("name", "dim"), INDUCED.items())
def test_induced_bialgebras(name, dim):
    B = catalog(name)
    assert B.dim == dim
    assert check_bialgebra(B).holds


def test_induced_bialgebra_scaled():
    B = induced_bialgebra(catalog("L3_bialgebra", k=3), catalog("AA2"))
    assert check_bialgebra(B).holds


def test_catalog_errors():
    with pytest.raises(UnknownFixture):
        catalog("Lambda9")
    with pytest.raises(BadParameter):
        catalog("Lambda2_1", k=2)
    with pytest.raises(BadParameter):
        catalog("Lambda2_2", a=0, b=1)
    with pytest.raises(BadParameter):
        catalog("lambda21_bialgebra", k="x")


def test_list_fixtures():
    frame = list_fixtures()
    assert list(frame.columns) == ["name", "kind", "parameters", "description"]
    assert len(frame) == len(FIXTURES)
    row = frame.set_index("name").loc["lambda21_bialgebra"]
    assert row["kind"] == "bialgebra"
    assert row["parameters"] == "k=1"


def _quoted_bracket(stem):
    record = QUOTED_TABLES[stem]
    return Algebra.from_products(len(record.relabel) // 2, record.bracket)


def _params(stem):
    # distinct values so k and l terms cannot be confused
    defaults = FIXTURES[f"induced_{stem}"].defaults
    return {name: value for name, value in {"k": 2, "l": 3}.items() if name in defaults}


@pytest.mark.parametrize("stem", sorted(QUOTED_TABLES))
def test_quoted_bracket_orientation(stem):
    record = QUOTED_TABLES[stem]
    quoted = _quoted_bracket(stem)
    shipped = catalog(f"{stem}_bialgebra").alg
    assert check_leibniz(shipped).holds
    if record.orientation == AS_QUOTED:
        assert check_leibniz(quoted).holds
        assert shipped == quoted
    else:
        assert record.orientation == OPPOSITE
        assert not check_leibniz(quoted).holds
        assert shipped != quoted


def test_leibniz3_a_ships_the_opposite_bracket():
    quoted = _quoted_bracket("leibniz3_a")
    assert check_right_leibniz(quoted).holds
    assert check_leibniz(quoted).witness == (1, 3, 3)
    assert catalog("leibniz3_a_bialgebra").alg == quoted.opposite()


def test_l3_quoted_bracket_satisfies_neither_identity():
    quoted = _quoted_bracket("L3")
    assert not check_leibniz(quoted).holds
    assert not check_right_leibniz(quoted).holds
    assert catalog("L3").opposite() == catalog("L3_right")


@pytest.mark.parametrize("stem", sorted(QUOTED_TABLES))
def test_induced_table_matches_quoted(stem):
    alg, coa = shipped_in_quoted_labels(stem, **_params(stem))
    expected_alg, expected_coa = quoted_induced_table(stem, **_params(stem))
    assert alg == expected_alg
    assert coa == expected_coa


@pytest.mark.parametrize("stem", sorted(QUOTED_TABLES))
def test_corrections_are_the_only_differences(stem):
    record = QUOTED_TABLES[stem]
    alg, _ = shipped_in_quoted_labels(stem)
    verbatim = Algebra.from_products(len(record.relabel), record.products)
    assert (alg == verbatim) is not bool(record.product_corrections)
    for k, terms in record.coproduct_corrections.items():
        assert terms != record.coproducts[k]


def test_leibniz3_a_induced_products():
    # shipped order: a1 = x1 (x) e1, a5 = x3 (x) e1, a2 = x1 (x) e2, a4 = x2 (x) e2
    A = catalog("induced_leibniz3_a").alg
    expected = Algebra.from_products(6, {(5, 1): {2: 1, 4: 1}, (5, 5): {2: 1}})
    assert A == expected


def test_quoted_table_errors():
    with pytest.raises(UnknownFixture):
        quoted_induced_table("L2")
    with pytest.raises(BadParameter):
        quoted_induced_table("L1", k="x")
