"""
Z-graded commutative algebras with one-dimensional homogeneous pieces
C_i = k t^i, the Laurent polynomials being the motivating case.

The product is t^i t^j = c(i, j) t^(i+j) and the symmetric form pairs
degree i with degree -i: w(t^i, t^j) = w_i when i + j = 0, else 0. The
coproduct dual to the product under w is

    D(t^k) = sum_{i+j=k} c(-i, -j) w_k / (w_i w_j) t^i (x) t^j.

For Laurent polynomials c = w = 1, so w(t^i, t^j) is 1 exactly when
i + j = 0 and D(t^k) = sum_i t^i (x) t^(k-i). The Kronecker pairing
w(t^i, t^j) = [i = j] is not invariant and is not used.
"""
import logging
from typing import Any, Callable, Optional, Tuple, Union

from ..core.field import Field, get_field
from ..errors import BadParameter, DivisionByZero, FieldMismatch
from ..report import Report

logger = logging.getLogger(__name__)


class GradedLine:
    def __init__(
            self,
            field: Union[Field, str] = "Q",
            product: Optional[Callable[[int, int], Any]] = None,
            pairing: Optional[Callable[[int], Any]] = None,
            name: str = "Laurent polynomials"
    ):
        """
        param: field; Scalar field. Default is "Q". (Field or str)
        param: product; c(i, j) with t^i t^j = c(i, j) t^(i+j). Default is 1.
         (Callable)
        param: pairing; w_i = w(t^i, t^-i), nonzero and even in i. Default
         is 1. (Callable)
        param: name; Display name. (str)
        """
        self.field = get_field(field)
        self._product = product or (lambda i, j: 1)
        self._pairing = pairing or (lambda i: 1)
        self.name = name

    def product(
            self,
            i: int,
            j: int
    ) -> Tuple[int, Any]:
        """(degree, coefficient) of t^i t^j."""
        return i + j, self.field.element(self._product(i, j))

    def coefficient(self, i: int, j: int):
        return self.field.element(self._product(i, j))

    def pairing(self, i: int):
        value = self.field.element(self._pairing(i))
        if value == 0:
            logger.error(f"{self.name}: degree {i} pairs to zero")
            raise DivisionByZero(f"the form of {self.name} is degenerate in degree {i}")
        return value

    def form(
            self,
            i: int,
            j: int
    ):
        return self.pairing(i) if i + j == 0 else self.field.zero()

    def coproduct(
            self,
            k: int,
            i: int,
            j: int
    ):
        """Coefficient of t^i (x) t^j in D(t^k)."""
        if i + j != k:
            return self.field.zero()
        field = self.field
        return (self.coefficient(-i, -j) * self.pairing(k)
                * field.inverse(self.pairing(i) * self.pairing(j)))

    def __repr__(self) -> str:
        return f"GradedLine({self.name}, field={self.field.name})"


LAURENT = GradedLine()


def graded_for(
        field: Union[Field, str],
        graded: Optional[GradedLine] = None
) -> GradedLine:
    """Laurent polynomials over the given field unless a graded algebra is supplied."""
    field = get_field(field)
    if graded is None:
        return LAURENT if field is LAURENT.field else GradedLine(field)
    if graded.field is not field:
        logger.error(f"{graded} paired with a base over {field}")
        raise FieldMismatch(f"{graded.name} lives over {graded.field}, not {field}")
    return graded


def laurent_form(
        i: int,
        j: int
) -> Any:
    """w(t^i, t^j) for Laurent polynomials: 1 iff i + j = 0."""
    return LAURENT.form(i, j)


def laurent_dual_coproduct(
        k: int,
        i: int,
        j: int
) -> Any:
    """Coefficient of t^i (x) t^j in D(t^k): 1 iff i + j = k."""
    return LAURENT.coproduct(k, i, j)


def _window(window: int) -> range:
    if window < 1:
        logger.error(f"Window {window} is not positive")
        raise BadParameter(f"window must be >= 1, got {window}")
    return range(-window, window + 1)


def is_invariant_form(
        form: Callable[[int, int], Any],
        C: GradedLine,
        window: int
) -> bool:
    """
    Brute-force w(t^a t^b, t^c) = w(t^a, t^b t^c) for a, b, c in the window.

    param: form; Candidate form on degrees. (Callable)
    param: C; Graded algebra supplying the product. (GradedLine)
    param: window; Degrees -window..window. (int)
    :return: Whether the form is invariant on the window. (bool)
    """
    field = C.field
    degrees = _window(window)
    for a in degrees:
        for b in degrees:
            for c in degrees:
                ab, c_ab = C.product(a, b)
                bc, c_bc = C.product(b, c)
                if c_ab * field.element(form(ab, c)) != c_bc * field.element(form(a, bc)):
                    logger.debug(f"Form fails invariance at degrees {(a, b, c)}")
                    return False
    return True


def check_graded_line_window(
        C: GradedLine,
        window: int
) -> Report:
    """
    Checks the structure of C on every probe inside the window:
     commutativity, associativity, invariance of the form, cocommutativity
     and coassociativity of the coproduct, and the duality
     w(D(t^k), t^a (x) t^b) = w(t^k, t^a t^b).

    Probes whose intermediate degrees leave the window are skipped.

    param: C; Graded algebra. (GradedLine)
    param: window; Degrees -window..window. (int)
    :return: Report with one clause per identity; witnesses are degree
     tuples. (Report)
    """
    degrees = _window(window)
    inside = set(degrees)
    report = Report(f"{C.name} on window {window}")
    failures = {}
    probes = 0

    def record(name, holds, witness):
        if not holds and name not in failures:
            failures[name] = witness

    with report.timed():
        for a in degrees:
            for b in degrees:
                record("commutative", C.coefficient(a, b) == C.coefficient(b, a), (a, b))
                for c in degrees:
                    if not {a + b, b + c, a + b + c} <= inside:
                        continue
                    probes += 1
                    lhs = C.coefficient(a, b) * C.coefficient(a + b, c)
                    rhs = C.coefficient(b, c) * C.coefficient(a, b + c)
                    record("associative", lhs == rhs, (a, b, c))
                    record("form invariant",
                           C.coefficient(a, b) * C.form(a + b, c)
                           == C.coefficient(b, c) * C.form(a, b + c), (a, b, c))
                    # D(t^k) probed at t^a (x) t^b (x) t^c with k = a + b + c
                    k = a + b + c
                    left = C.coproduct(k, a + b, c) * C.coproduct(a + b, a, b)
                    right = C.coproduct(k, a, b + c) * C.coproduct(b + c, b, c)
                    record("coassociative", left == right, (k, a, b, c))
                k = a + b
                if k in inside:
                    record("cocommutative",
                           C.coproduct(k, a, b) == C.coproduct(k, b, a), (k, a, b))
                    for m in degrees:
                        lhs = C.coproduct(m, -a, -b) * C.pairing(a) * C.pairing(b)
                        rhs = C.coefficient(a, b) * C.form(m, a + b)
                        record("duality", lhs == rhs, (m, a, b))
        for name in ("commutative", "associative", "form invariant", "cocommutative",
                     "coassociative", "duality"):
            report.add(name, f"graded {name}", name not in failures, failures.get(name))
    report.notes.append(f"{probes} degree triples inside window {window}")
    return report
