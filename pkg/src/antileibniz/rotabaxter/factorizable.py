"""
The two-way correspondence between factorizable r and skew-quadratic
Rota-Baxter operators of nonzero weight, and the bialgebra it induces on the
descendent algebra.

Matrix conventions: with X the coefficient matrix of r, r# = X.T,
tau(r)# = X and I = X.T - X. The form B_I(a1, a2) = <I^-1 a1, a2> has Gram
matrix (I^-1).T and R = weight * X I^-1.
"""
import logging
from dataclasses import dataclass
from typing import Any, Union

from ..algebra.algebra import Algebra
from ..algebra.forms import BilinearForm
from ..bialgebra.bialgebra import Bialgebra, check_bialgebra, is_bialgebra_homomorphism
from ..bialgebra.coalgebra import Coalgebra, dual_coalgebra
from ..core.linalg import solve_invert
from ..core.tensors import act_on_axis
from ..errors import NotFactorizable, ZeroWeight
from ..report import Report
from ..yangbaxter.classify import classify_r
from ..yangbaxter.rmatrix import Tensor2, coefficients, dual_product_r
from .operators import (
    SkewQuadraticRB,
    check_skew_quadratic,
    descendent_product,
    require_skew_quadratic,
)

logger = logging.getLogger(__name__)


def _nonzero_weight(
        A: Algebra,
        weight: Any,
        operation: str
):
    weight = A.field.element(weight)
    if weight == 0:
        logger.error(f"{operation}: weight must be nonzero")
        raise ZeroWeight(f"{operation} needs a nonzero weight")
    return weight


def _factorizable_inverse(
        A: Algebra,
        r: Union[Tensor2, Any],
        operation: str
):
    x = coefficients(A, r)
    classification = classify_r(A, x)
    if not classification.factorizable:
        logger.error(f"{operation}: r is not factorizable")
        raise NotFactorizable(
            f"{operation} needs a factorizable r (quasi-triangular="
            f"{classification.quasi_triangular})"
        )
    return x, solve_invert(A.field, x.T - x)


def factorizable_to_rb(
        A: Algebra,
        r: Union[Tensor2, Any],
        weight: Any
) -> SkewQuadraticRB:
    """
    Builds (A, ., B_I, R = weight tau(r)# I^-1) from a factorizable r.

    param: A; Anti-Leibniz algebra. (Algebra)
    param: r; Factorizable 2-tensor. (Tensor2 or matrix)
    param: weight; Nonzero weight lambda. (scalar)
    :return: Skew-quadratic Rota-Baxter algebra of that weight.
     (SkewQuadraticRB)
    """
    weight = _nonzero_weight(A, weight, "factorizable_to_rb")
    x, inverse = _factorizable_inverse(A, r, "factorizable_to_rb")
    form = BilinearForm(inverse.T.copy(), A.field)
    return SkewQuadraticRB(A, (x @ inverse) * weight, weight, form)


def rb_to_factorizable(X: SkewQuadraticRB) -> Tensor2:
    """
    Recovers r from a skew-quadratic Rota-Baxter algebra of nonzero weight
     through r# = (1/weight)(R + weight id) I_B, where <I_B^-1 a1, a2> = B(a1, a2).

    param: X; Certified quadruple. (SkewQuadraticRB)
    :return: The factorizable 2-tensor. (Tensor2)
    """
    A, field = X.algebra, X.field
    weight = _nonzero_weight(A, X.weight, "rb_to_factorizable")
    require_skew_quadratic(X, "rb_to_factorizable")
    cal_i = solve_invert(field, X.form.gram.T)
    shifted = X.R.matrix + field.eye(A.dim) * weight
    sharp = (shifted @ cal_i) * field.inverse(weight)
    return Tensor2(sharp.T.copy(), field)


@dataclass
class DescendentBialgebra:
    descendent: Algebra
    coalgebra: Coalgebra
    iso_check: bool
    report: Report


def delta_I_bialgebra(
        A: Algebra,
        r: Union[Tensor2, Any],
        weight: Any
) -> DescendentBialgebra:
    """
    The bialgebra (A, ._R, Delta_I) attached to a factorizable r, where
     Delta_I is dual to xi1 . xi2 = -(1/weight) I^-1(I xi1 I xi2).

    ``iso_check`` confirms that (1/weight) I is an isomorphism of bialgebras
    from (A*, ._r, Delta_A*) to (A, ._R, Delta_I). The report also holds the
    bialgebra check of the result and the check that -weight id - R is a
    Rota-Baxter operator of the same weight adjoint to B_I.

    param: A; Anti-Leibniz algebra. (Algebra)
    param: r; Factorizable 2-tensor. (Tensor2 or matrix)
    param: weight; Nonzero weight. (scalar)
    :return: Descendent algebra, Delta_I, the isomorphism flag and the report.
     (DescendentBialgebra)
    """
    weight = _nonzero_weight(A, weight, "delta_I_bialgebra")
    x, inverse = _factorizable_inverse(A, r, "delta_I_bialgebra")
    field = A.field
    n = A.dim
    operator = factorizable_to_rb(A, x, weight)
    descendent = descendent_product(operator)

    cal_i = x.T - x
    scale = -field.inverse(weight)
    # products I f_i . I f_j, pulled back through I^-1
    images = act_on_axis(act_on_axis(A.sc, cal_i.T, 0), cal_i.T, 1)
    dual_sc = act_on_axis(images, inverse, 2) * scale
    coalgebra = Coalgebra(dual_sc.transpose(2, 0, 1).copy(), field, A.labels)

    report = Report("factorizable descendent bialgebra")
    with report.timed():
        iso = cal_i * field.inverse(weight)
        source = Bialgebra(dual_product_r(A, x), dual_coalgebra(A))
        target = Bialgebra(descendent, coalgebra)
        iso_check = is_bialgebra_homomorphism(iso, source, target)
        report.add("bialgebra isomorphism", "scaled skew map is a bialgebra isomorphism",
                   iso_check)
        report.extend(check_bialgebra(target), prefix="descendent ")
        complement = SkewQuadraticRB(
            A, -(field.eye(n) * weight + operator.R.matrix), weight, operator.form
        )
        report.extend(check_skew_quadratic(complement), prefix="complementary ")
    return DescendentBialgebra(descendent, coalgebra, iso_check, report)
