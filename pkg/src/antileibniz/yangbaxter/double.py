import logging
from dataclasses import dataclass

from ..bialgebra.bialgebra import (
    Bialgebra,
    check_bialgebra,
    dual_bialgebra,
    is_bialgebra_homomorphism,
    require_bialgebra,
)
from ..pairs.matched import standard_manin_triple
from ..report import Report
from .rmatrix import Tensor2, delta_r, is_invariant, ybe_bracket

logger = logging.getLogger(__name__)


@dataclass
class DoubleResult:
    double: Bialgebra
    rtilde: Tensor2
    report: Report


def double_bialgebra(B: Bialgebra) -> DoubleResult:
    """
    Builds the double (A + A*, *, Delta_r~) of a bialgebra with
     r~ = sum_i e_i (x) f_i, A coordinates first.

    The report records the bracket of r~, invariance of its skew part, the
    bialgebra check of the double and both canonical injections being
    bialgebra homomorphisms (A* carrying the dual bialgebra structure).

    param: B; Anti-Leibniz bialgebra. (Bialgebra)
    :return: The double, r~ and the report. (DoubleResult)
    """
    require_bialgebra(B, "double_bialgebra")
    field, n = B.field, B.dim
    total = standard_manin_triple(B.alg, B.coa).total
    coeff = field.zeros((2 * n, 2 * n))
    coeff[:n, n:] = field.eye(n)
    rtilde = Tensor2(coeff, field)
    double = Bialgebra(total, delta_r(total, rtilde))

    report = Report("double bialgebra")
    with report.timed():
        report.add("Yang-Baxter solution", "Yang-Baxter equation",
                   field.is_zero(ybe_bracket(total, rtilde)))
        report.add("skew part invariant", "invariant tensor",
                   is_invariant(total, rtilde.skew_part()))
        report.extend(check_bialgebra(double), prefix="double ")
        inject_a = field.zeros((2 * n, n))
        inject_a[:n] = field.eye(n)
        inject_dual = field.zeros((2 * n, n))
        inject_dual[n:] = field.eye(n)
        report.add("A injection", "bialgebra homomorphism",
                   is_bialgebra_homomorphism(inject_a, B, double))
        report.add("A* injection", "bialgebra homomorphism",
                   is_bialgebra_homomorphism(inject_dual, dual_bialgebra(B), double))
    if not report.holds:
        logger.warning(f"double_bialgebra: {report.first_failure.name} fails")
    return DoubleResult(double, rtilde, report)
