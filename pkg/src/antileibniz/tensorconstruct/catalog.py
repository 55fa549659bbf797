"""
Built-in fixtures: small algebras, coalgebras and bialgebras with every
certificate verified when the fixture is built.

Fixtures are rebuilt on every call, so callers may mutate certificates
freely. Rational parameters (k, l, a, b) are accepted as ints, Fractions or
strings such as "2/3".

QUOTED_TABLES records, for the Leibniz bialgebras, the bracket and induced
table as usually quoted and how the shipped fixture relates to them.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Tuple

import numpy as np
import pandas as pd

from ..algebra.algebra import Algebra, ProductTable
from ..algebra.checks import check_anti_leibniz, check_leibniz, check_right_leibniz
from ..algebra.forms import BilinearForm
from ..bialgebra.bialgebra import Bialgebra, check_bialgebra
from ..bialgebra.coalgebra import Coalgebra
from ..core.field import QQ
from ..errors import AntiLeibnizError, BadParameter, PreconditionViolated, UnknownFixture
from ..report import Report
from ..yangbaxter.double import double_bialgebra
from ..yangbaxter.rmatrix import Tensor2
from .construct import QuadraticAA, check_quadratic_aa, induced_bialgebra
from .leibniz import LeibnizBialgebra, check_leibniz_bialgebra

logger = logging.getLogger(__name__)

LEIBNIZ_LABELS = ("x1", "x2", "x3")


@dataclass
class RMatrixFixture:
    algebra: Algebra
    r: Tensor2


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    description: str
    build: Callable[..., Any]
    defaults: Dict[str, Any] = field(default_factory=dict)


def _verified(
        value: Any,
        report: Report,
        name: str
) -> Any:
    if not report.holds:
        failed = report.first_failure
        logger.error(f"Fixture {name}: {failed.name} fails at {failed.witness}")
        raise PreconditionViolated(f"fixture {name} fails {failed.name}")
    return value


def _scalar(value: Any, name: str):
    try:
        return QQ.element(value)
    except (AntiLeibnizError, ValueError, TypeError) as e:
        logger.error(f"Invalid value for parameter {name}: {value!r}")
        raise BadParameter(f"parameter {name} must be rational, got {value!r}") from e


def lambda21() -> Algebra:
    A = Algebra.from_products(2, {(1, 1): {2: 1}})
    return _verified(A, check_anti_leibniz(A), "Lambda2_1")


def lambda22(a: Any = 1, b: Any = 1) -> Algebra:
    a, b = _scalar(a, "a"), _scalar(b, "b")
    if a == 0 or b == 0:
        logger.error(f"Lambda2_2 needs nonzero parameters, got a={a}, b={b}")
        raise BadParameter("Lambda2_2 needs a != 0 and b != 0")
    A = Algebra.from_products(2, {
        (1, 1): [-a, -a * a / b],
        (1, 2): [b, a],
        (2, 1): [b, a],
        (2, 2): [-b * b / a, -b],
    })
    return _verified(A, check_anti_leibniz(A), "Lambda2_2")


def noncommutative3() -> Algebra:
    A = Algebra.from_products(3, {(1, 2): {3: 1}, (2, 2): {3: 1}})
    return _verified(A, check_anti_leibniz(A), "noncommutative3")


def _leibniz(
        dim: int,
        products: Dict[Tuple[int, int], Any],
        name: str,
        right: bool = False
) -> Algebra:
    L = Algebra.from_products(dim, products, labels=LEIBNIZ_LABELS[:dim])
    return _verified(L, check_right_leibniz(L) if right else check_leibniz(L), name)


def leibniz_L1() -> Algebra:
    return _leibniz(2, {(1, 1): {2: 1}}, "L1")


def leibniz_L2() -> Algebra:
    return _leibniz(2, {(1, 2): {2: 1}, (2, 1): {2: -1}}, "L2")


def leibniz_L3() -> Algebra:
    """[x2, x1] = x1 = [x2, x2], the left Leibniz orientation."""
    return _leibniz(2, {(2, 1): {1: 1}, (2, 2): {1: 1}}, "L3")


def leibniz_L3_right() -> Algebra:
    """[x1, x2] = x1 = [x2, x2] as usually quoted; a right Leibniz algebra."""
    return _leibniz(2, {(1, 2): {1: 1}, (2, 2): {1: 1}}, "L3_right", right=True)


def aa2() -> Algebra:
    return Algebra.from_products(2, {(1, 1): {2: 1}})


def quadratic_aa2() -> QuadraticAA:
    Q = QuadraticAA(aa2(), BilinearForm([[0, 1], [1, 0]]))
    return _verified(Q, check_quadratic_aa(Q), "AA2")


def lambda21_bialgebra(k: Any = 1) -> Bialgebra:
    k = _scalar(k, "k")
    B = Bialgebra(lambda21(), Coalgebra.from_coproducts(2, {1: {(2, 2): k}}))
    return _verified(B, check_bialgebra(B), "lambda21_bialgebra")


def lambda21_symmetric_r() -> RMatrixFixture:
    """The symmetric solution e1 (x) e2 + e2 (x) e1 on Lambda2_1."""
    return RMatrixFixture(lambda21(), Tensor2.from_terms(2, {(1, 2): 1, (2, 1): 1}))


def lambda21_double() -> Bialgebra:
    result = double_bialgebra(lambda21_bialgebra())
    return _verified(result.double, result.report, "lambda21_double")


def lambda21_double_r() -> RMatrixFixture:
    """The factorizable r = e1 (x) f1 + e2 (x) f2 on the double."""
    result = double_bialgebra(lambda21_bialgebra())
    return RMatrixFixture(result.double.alg, result.rtilde)


def square_zero3_bialgebra(k: Any = 1) -> Bialgebra:
    """e2 e2 = e1 = e3 e3 with D(e2) = k e1 (x) e1."""
    k = _scalar(k, "k")
    A = Algebra.from_products(3, {(2, 2): {1: 1}, (3, 3): {1: 1}})
    B = Bialgebra(A, Coalgebra.from_coproducts(3, {2: {(1, 1): k}}))
    return _verified(B, check_bialgebra(B), "square_zero3_bialgebra")


def _leibniz_bialgebra(
        L: Algebra,
        coproducts: Dict[int, Dict[Tuple[int, int], Any]],
        name: str
) -> LeibnizBialgebra:
    C = Coalgebra.from_coproducts(L.dim, coproducts, labels=L.labels)
    LB = LeibnizBialgebra(L, C)
    return _verified(LB, check_leibniz_bialgebra(LB), name)


def L1_bialgebra(k: Any = 1) -> LeibnizBialgebra:
    k = _scalar(k, "k")
    return _leibniz_bialgebra(leibniz_L1(), {1: {(2, 2): k}}, "L1_bialgebra")


def L3_bialgebra(k: Any = 1) -> LeibnizBialgebra:
    k = _scalar(k, "k")
    skew = {(1, 2): k, (2, 1): -k}
    return _leibniz_bialgebra(leibniz_L3(), {1: skew, 2: dict(skew)}, "L3_bialgebra")


def leibniz3_a_bialgebra(k: Any = 1, l: Any = 1) -> LeibnizBialgebra:  # noqa: E741
    """[x3, x1] = x1 + x2, [x3, x3] = x1."""
    k, l = _scalar(k, "k"), _scalar(l, "l")  # noqa: E741
    L = _leibniz(3, {(3, 1): {1: 1, 2: 1}, (3, 3): {1: 1}}, "leibniz3_a")
    coproduct = {3: {(1, 1): k, (2, 1): k, (1, 2): l, (2, 2): l}}
    return _leibniz_bialgebra(L, coproduct, "leibniz3_a_bialgebra")


def leibniz3_b_bialgebra(k: Any = 1, l: Any = 1) -> LeibnizBialgebra:  # noqa: E741
    """[x2, x3] = x2 = -[x3, x2], [x3, x3] = x1."""
    k, l = _scalar(k, "k"), _scalar(l, "l")  # noqa: E741
    L = _leibniz(3, {(2, 3): {2: 1}, (3, 2): {2: -1}, (3, 3): {1: 1}}, "leibniz3_b")
    coproduct = {2: {(1, 2): k}, 3: {(1, 1): k, (1, 2): -l}}
    return _leibniz_bialgebra(L, coproduct, "leibniz3_b_bialgebra")


def leibniz3_c_bialgebra(k: Any = 1) -> LeibnizBialgebra:
    """[x2, x2] = x1 = [x3, x3]."""
    k = _scalar(k, "k")
    L = _leibniz(3, {(2, 2): {1: 1}, (3, 3): {1: 1}}, "leibniz3_c")
    return _leibniz_bialgebra(L, {2: {(1, 1): k}}, "leibniz3_c_bialgebra")


def _induced(builder: Callable[..., LeibnizBialgebra]) -> Callable[..., Bialgebra]:
    def build(**params: Any) -> Bialgebra:
        return induced_bialgebra(builder(**params), quadratic_aa2())
    build.__doc__ = f"{builder.__name__} tensored with AA2."
    return build


FIXTURES: Dict[str, Fixture] = {
    fixture.name: fixture for fixture in (
        Fixture("Lambda2_1", "algebra", "e1e1 = e2", lambda21),
        Fixture("Lambda2_2", "algebra",
                "e1e1 = -a e1 - (a^2/b) e2, e1e2 = e2e1 = b e1 + a e2, "
                "e2e2 = -(b^2/a) e1 - b e2", lambda22, {"a": 1, "b": 1}),
        Fixture("noncommutative3", "algebra", "e1e2 = e3 = e2e2", noncommutative3),
        Fixture("L1", "leibniz", "[x1, x1] = x2", leibniz_L1),
        Fixture("L2", "leibniz", "[x1, x2] = -[x2, x1] = x2", leibniz_L2),
        Fixture("L3", "leibniz", "[x2, x1] = x1 = [x2, x2]", leibniz_L3),
        Fixture("L3_right", "right_leibniz", "[x1, x2] = x1 = [x2, x2]",
                leibniz_L3_right),
        Fixture("AA2", "quadratic", "e1e1 = e2 with w(e1, e2) = w(e2, e1) = 1",
                quadratic_aa2),
        Fixture("lambda21_bialgebra", "bialgebra", "Lambda2_1 with D(e1) = k e2 (x) e2",
                lambda21_bialgebra, {"k": 1}),
        Fixture("lambda21_symmetric_r", "rmatrix",
                "Lambda2_1 with r = e1 (x) e2 + e2 (x) e1", lambda21_symmetric_r),
        Fixture("lambda21_double", "bialgebra", "double of lambda21_bialgebra",
                lambda21_double),
        Fixture("lambda21_double_r", "rmatrix",
                "double of lambda21_bialgebra with r = e1 (x) f1 + e2 (x) f2",
                lambda21_double_r),
        Fixture("square_zero3_bialgebra", "bialgebra",
                "e2e2 = e1 = e3e3 with D(e2) = k e1 (x) e1",
                square_zero3_bialgebra, {"k": 1}),
        Fixture("L1_bialgebra", "leibniz_bialgebra", "L1 with d(x1) = k x2 (x) x2",
                L1_bialgebra, {"k": 1}),
        Fixture("L3_bialgebra", "leibniz_bialgebra",
                "L3 with d(x1) = d(x2) = k (x1 (x) x2 - x2 (x) x1)",
                L3_bialgebra, {"k": 1}),
        Fixture("leibniz3_a_bialgebra", "leibniz_bialgebra",
                "[x3, x1] = x1 + x2, [x3, x3] = x1 with "
                "d(x3) = k (x1 (x) x1 + x2 (x) x1) + l (x1 (x) x2 + x2 (x) x2)",
                leibniz3_a_bialgebra, {"k": 1, "l": 1}),
        Fixture("leibniz3_b_bialgebra", "leibniz_bialgebra",
                "[x2, x3] = x2 = -[x3, x2], [x3, x3] = x1 with d(x2) = k x1 (x) x2, "
                "d(x3) = k x1 (x) x1 - l x1 (x) x2",
                leibniz3_b_bialgebra, {"k": 1, "l": 1}),
        Fixture("leibniz3_c_bialgebra", "leibniz_bialgebra",
                "[x2, x2] = x1 = [x3, x3] with d(x2) = k x1 (x) x1",
                leibniz3_c_bialgebra, {"k": 1}),
        Fixture("induced_L1", "bialgebra", "L1_bialgebra (x) AA2",
                _induced(L1_bialgebra), {"k": 1}),
        Fixture("induced_L3", "bialgebra", "L3_bialgebra (x) AA2",
                _induced(L3_bialgebra), {"k": 1}),
        Fixture("induced_leibniz3_a", "bialgebra", "leibniz3_a_bialgebra (x) AA2",
                _induced(leibniz3_a_bialgebra), {"k": 1, "l": 1}),
        Fixture("induced_leibniz3_b", "bialgebra", "leibniz3_b_bialgebra (x) AA2",
                _induced(leibniz3_b_bialgebra), {"k": 1, "l": 1}),
        Fixture("induced_leibniz3_c", "bialgebra", "leibniz3_c_bialgebra (x) AA2",
                _induced(leibniz3_c_bialgebra), {"k": 1}),
    )
}


def catalog(name: str, **params: Any) -> Any:
    """
    Builds a named fixture.

    param: name; Fixture name, see ``list_fixtures``. (str)
    param: params; Fixture parameters such as k, l, a, b. (Any)
    :return: Algebra, QuadraticAA, Bialgebra, LeibnizBialgebra or
     RMatrixFixture depending on the fixture kind.
    """
    fixture = FIXTURES.get(name)
    if fixture is None:
        logger.error(f"Unknown fixture '{name}'")
        raise UnknownFixture(f"unknown fixture '{name}' (known: {', '.join(FIXTURES)})")
    unknown = set(params) - set(fixture.defaults)
    if unknown:
        logger.error(f"Fixture {name} got unknown parameters {sorted(unknown)}")
        raise BadParameter(f"fixture {name} takes {sorted(fixture.defaults) or 'no'} "
                           f"parameters, got {sorted(unknown)}")
    logger.debug(f"Building fixture {name} with {params}")
    return fixture.build(**params)


def list_fixtures() -> pd.DataFrame:
    """Name, kind, parameters and description of every fixture."""
    rows = [
        {
            "name": fixture.name,
            "kind": fixture.kind,
            "parameters": ", ".join(f"{k}={v}" for k, v in fixture.defaults.items()),
            "description": fixture.description,
        }
        for fixture in FIXTURES.values()
    ]
    return pd.DataFrame(rows, columns=["name", "kind", "parameters", "description"])


AS_QUOTED, OPPOSITE = "as quoted", "opposite bracket"

CoproductTable = Dict[int, Dict[Tuple[int, int], str]]


@dataclass(frozen=True)
class QuotedTable:
    """
    A Leibniz bialgebra and the induced table it is usually quoted with,
     next to what the catalog ships.

    ``relabel[i]`` is the quoted label of shipped induced basis vector i + 1;
    the shipped order is x1 (x) e1, x1 (x) e2, x2 (x) e1, ... Coproduct
    coefficients name a parameter with an optional sign ("k", "-l").
    Corrections replace quoted entries that contradict the rest of the quoted
    table, whole coproducts at a time.
    """
    stem: str
    bracket: ProductTable
    orientation: str
    reason: str
    products: ProductTable
    coproducts: CoproductTable
    relabel: Tuple[int, ...]
    product_corrections: ProductTable = field(default_factory=dict)
    coproduct_corrections: CoproductTable = field(default_factory=dict)


QUOTED_TABLES: Dict[str, QuotedTable] = {
    record.stem: record for record in (
        QuotedTable(
            "L1", {(1, 1): {2: 1}}, AS_QUOTED,
            "left Leibniz as quoted; the quoted induced basis lists x2 (x) e2 second",
            products={(1, 1): {2: 1}},
            coproducts={1: {(2, 2): "k"}},
            relabel=(1, 4, 3, 2),
        ),
        QuotedTable(
            "L3", {(1, 2): {1: 1}, (2, 1): {1: 1}}, OPPOSITE,
            "the quoted bracket [x1, x2] = x1 = [x2, x1] satisfies neither Leibniz "
            "identity; the quoted induced products are those of L3_right, "
            "[x1, x2] = x1 = [x2, x2], whose opposite is shipped. The quoted "
            "coproduct names a2 where a3 = x1 (x) e2 is meant",
            products={(1, 2): {3: 1}, (2, 2): {3: 1}},
            coproducts={1: {(2, 4): "k", (4, 2): "-k"}, 2: {(2, 4): "k", (4, 2): "-k"}},
            relabel=(1, 3, 2, 4),
            coproduct_corrections={1: {(3, 4): "k", (4, 3): "-k"},
                                   2: {(3, 4): "k", (4, 3): "-k"}},
        ),
        QuotedTable(
            "leibniz3_a", {(1, 3): {1: 1, 2: 1}, (3, 3): {1: 1}}, OPPOSITE,
            "the quoted bracket is right Leibniz and fails the left identity, first "
            "at (x1, x3, x3); its opposite is shipped. The quoted coproduct names a1 "
            "where a2 = x1 (x) e2 is meant",
            products={(1, 5): {2: 1, 4: 1}, (5, 5): {2: 1}},
            coproducts={5: {(2, 2): "k", (4, 2): "k", (1, 4): "l", (4, 4): "l"}},
            relabel=(1, 2, 3, 4, 5, 6),
            coproduct_corrections={5: {(2, 2): "k", (4, 2): "k", (2, 4): "l", (4, 4): "l"}},
        ),
        QuotedTable(
            "leibniz3_b", {(2, 3): {2: 1}, (3, 2): {2: -1}, (3, 3): {1: 1}}, AS_QUOTED,
            "left Leibniz as quoted; the quoted a5 a5 = a3 contradicts a3 a5 = a4, "
            "since [x3, x3] = x1 gives x1 (x) e2 = a2",
            products={(3, 5): {4: 1}, (5, 3): {4: -1}, (5, 5): {3: 1}},
            coproducts={3: {(2, 4): "k"}, 5: {(2, 2): "k", (2, 4): "-l"}},
            relabel=(1, 2, 3, 4, 5, 6),
            product_corrections={(5, 5): {2: 1}},
        ),
        QuotedTable(
            "leibniz3_c", {(2, 2): {1: 1}, (3, 3): {1: 1}}, AS_QUOTED,
            "left Leibniz as quoted",
            products={(3, 3): {2: 1}, (5, 5): {2: 1}},
            coproducts={3: {(2, 2): "k"}},
            relabel=(1, 2, 3, 4, 5, 6),
        ),
    )
}


def _quoted_record(stem: str) -> QuotedTable:
    record = QUOTED_TABLES.get(stem)
    if record is None:
        logger.error(f"No quoted table for '{stem}'")
        raise UnknownFixture(f"no quoted table for '{stem}' (known: {', '.join(QUOTED_TABLES)})")
    return record


def _parameters(stem: str, params: Dict[str, Any]) -> Dict[str, Any]:
    defaults = FIXTURES[f"induced_{stem}"].defaults
    return {name: _scalar(params.get(name, value), name) for name, value in defaults.items()}


def _coefficient(text: str, values: Dict[str, Any]):
    sign = -1 if text.startswith("-") else 1
    return sign * values[text.lstrip("-")]


def quoted_induced_table(stem: str, **params: Any) -> Tuple[Algebra, Coalgebra]:
    """
    The quoted induced product and coproduct of a QUOTED_TABLES entry, with
     its corrections applied, in the quoted labels.
    """
    record = _quoted_record(stem)
    values = _parameters(stem, params)
    dim = len(record.relabel)
    products = {**record.products, **record.product_corrections}
    coproducts = {**record.coproducts, **record.coproduct_corrections}
    alg = Algebra.from_products(dim, products)
    coa = Coalgebra.from_coproducts(dim, {
        k: {pair: _coefficient(text, values) for pair, text in terms.items()}
        for k, terms in coproducts.items()
    })
    return alg, coa


def shipped_in_quoted_labels(stem: str, **params: Any) -> Tuple[Algebra, Coalgebra]:
    """
    The shipped induced bialgebra of a QUOTED_TABLES entry, relabelled to the
     quoted basis, with the opposite product when the bracket was flipped.
    """
    record = _quoted_record(stem)
    B = catalog(f"induced_{stem}", **params)
    order = np.argsort(np.asarray(record.relabel))
    index = np.ix_(order, order, order)
    alg = Algebra(B.alg.sc[index], B.field)
    if record.orientation == OPPOSITE:
        alg = alg.opposite()
    return alg, Coalgebra(B.coa.cc[index], B.field)
