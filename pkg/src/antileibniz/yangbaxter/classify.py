import logging
from dataclasses import dataclass
from typing import Any, Optional, Tuple, Union

import numpy as np

from ..algebra.algebra import Algebra
from ..algebra.checks import check_anti_leibniz, require_anti_leibniz
from ..algebra.maps import LinearMap, is_homomorphism
from ..bialgebra.bialgebra import Bialgebra, check_bialgebra
from ..core.linalg import is_invertible, rank, solve_invert
from ..errors import NotFactorizable, PreconditionViolated
from ..report import Report
from .rmatrix import Tensor2, coefficients, delta_r, dual_product_r, is_invariant, ybe_bracket

logger = logging.getLogger(__name__)


@dataclass
class RClassification:
    """
    Flags of a 2-tensor r on an anti-Leibniz algebra.

    ``sharp`` and ``tau_sharp`` are the maps r# and tau(r)# from A* to A and
    ``cal_i`` is their difference. ``bialgebra_report`` is filled in when r
    is quasi-triangular and records the check of (A, ., Delta_r).
    """
    is_solution: bool
    is_symmetric: bool
    skew_part_invariant: bool
    quasi_triangular: bool
    triangular: bool
    factorizable: bool
    sharp: LinearMap
    tau_sharp: LinearMap
    cal_i: LinearMap
    bialgebra_report: Optional[Report] = None

    def consistent(self) -> bool:
        return (
            self.quasi_triangular == (self.is_solution and self.skew_part_invariant)
            and self.triangular == (self.is_solution and self.is_symmetric)
            and (not self.factorizable or self.quasi_triangular)
        )


def classify_r(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> RClassification:
    """
    Decides whether r solves the Yang-Baxter equation and which of the
     quasi-triangular, triangular and factorizable classes it falls into.

    When r is quasi-triangular the induced bialgebra (A, ., Delta_r) is
    checked as well and the result is kept on the classification.

    param: A; Anti-Leibniz algebra. (Algebra)
    param: r; 2-tensor on A. (Tensor2 or matrix)
    :return: The classification. (RClassification)
    """
    require_anti_leibniz(A, "classify_r")
    field = A.field
    x = coefficients(A, r)
    skew = x - x.T
    is_solution = field.is_zero(ybe_bracket(A, x))
    is_symmetric = field.is_zero(skew)
    skew_invariant = is_invariant(A, skew)
    quasi_triangular = is_solution and skew_invariant
    cal_i = x.T - x
    result = RClassification(
        is_solution=is_solution,
        is_symmetric=is_symmetric,
        skew_part_invariant=skew_invariant,
        quasi_triangular=quasi_triangular,
        triangular=is_solution and is_symmetric,
        factorizable=quasi_triangular and is_invertible(field, cal_i),
        sharp=LinearMap(x.T.copy(), field),
        tau_sharp=LinearMap(x.copy(), field),
        cal_i=LinearMap(cal_i, field),
    )
    if quasi_triangular:
        result.bialgebra_report = check_bialgebra(Bialgebra(A, delta_r(A, x)))
        if not result.bialgebra_report.holds:
            logger.warning(
                f"classify_r: quasi-triangular r but Delta_r fails "
                f"{result.bialgebra_report.first_failure.name}"
            )
    logger.debug(f"classify_r: solution={is_solution}, symmetric={is_symmetric}, "
                 f"skew invariant={skew_invariant}")
    return result


@dataclass
class HomomorphismCriteria:
    is_solution: bool
    sharp_homo: bool
    tau_sharp_homo: bool
    dual_anti_leibniz: bool

    def agree(self) -> bool:
        return (self.is_solution == (self.dual_anti_leibniz and self.sharp_homo)
                == (self.dual_anti_leibniz and self.tau_sharp_homo))


def homomorphism_criteria(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> HomomorphismCriteria:
    """
    For r with invariant skew part, evaluates whether (A*, ._r) is
     anti-Leibniz and whether r# and tau(r)# are homomorphisms from it to A.

    param: A; Anti-Leibniz algebra. (Algebra)
    param: r; 2-tensor whose skew part is invariant. (Tensor2 or matrix)
    :return: The three flags and the direct bracket test. (HomomorphismCriteria)
    """
    require_anti_leibniz(A, "homomorphism_criteria")
    x = coefficients(A, r)
    if not is_invariant(A, x - x.T):
        logger.error("homomorphism_criteria: r - tau(r) is not invariant")
        raise PreconditionViolated("homomorphism_criteria needs r - tau(r) invariant")
    dual = dual_product_r(A, x)
    return HomomorphismCriteria(
        is_solution=A.field.is_zero(ybe_bracket(A, x)),
        sharp_homo=is_homomorphism(x.T, dual, A),
        tau_sharp_homo=is_homomorphism(x, dual, A),
        dual_anti_leibniz=check_anti_leibniz(dual).holds,
    )


def skew_part_intertwines(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> bool:
    """I (l* - r*)(a) = r(a) I for every basis a, with I = r# - tau(r)#."""
    x = coefficients(A, r)
    cal_i = x.T - x
    for k in range(A.dim):
        lm, rm = A.left_mult(k), A.right_mult(k)
        if not A.field.is_zero(cal_i @ (lm - rm).T - rm @ cal_i):
            return False
    return True


def _require_factorizable(
        A: Algebra,
        x: np.ndarray,
        operation: str
) -> None:
    classification = classify_r(A, x)
    if not classification.factorizable:
        logger.error(f"{operation}: r is not factorizable")
        raise NotFactorizable(
            f"{operation} needs a factorizable r (quasi-triangular="
            f"{classification.quasi_triangular})"
        )


def factorization_decompose(
        A: Algebra,
        r: Union[Tensor2, Any],
        a: Any
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Splits a = a_plus + a_minus with a_plus = r#(I^-1 a) in the image of r#
     and a_minus = -tau(r)#(I^-1 a) in the image of tau(r)#.

    param: A; Anti-Leibniz algebra. (Algebra)
    param: r; Factorizable 2-tensor. (Tensor2 or matrix)
    param: a; Vector of A. (array-like)
    :return: (a_plus, a_minus). (tuple)
    """
    x = coefficients(A, r)
    _require_factorizable(A, x, "factorization_decompose")
    a = A.vector(a)
    xi = solve_invert(A.field, x.T - x) @ a
    return x.T @ xi, -(x @ xi)


@dataclass
class FactorizationImage:
    homomorphism: bool
    subalgebra: bool
    injective: bool


def factorization_image(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> FactorizationImage:
    """
    Examines xi -> (r# xi, tau(r)# xi) from (A*, ._r) into A + A.

    param: A; Anti-Leibniz algebra. (Algebra)
    param: r; 2-tensor on A. (Tensor2 or matrix)
    :return: Whether the map is multiplicative, whether its image is closed
     under the product of A + A, and whether it is injective.
     (FactorizationImage)
    """
    require_anti_leibniz(A, "factorization_image")
    field = A.field
    x = coefficients(A, r)
    n = A.dim
    stacked = field.zeros((2 * n, n))
    stacked[:n] = x.T
    stacked[n:] = x
    total = A.direct_sum(A)
    span = rank(field, stacked)
    closed = True
    for i in range(n):
        for j in range(n):
            product = total.multiply(stacked[:, i], stacked[:, j])
            extended = field.zeros((2 * n, n + 1))
            extended[:, :n] = stacked
            extended[:, n] = product
            if rank(field, extended) != span:
                closed = False
                break
        if not closed:
            break
    return FactorizationImage(
        homomorphism=is_homomorphism(stacked, dual_product_r(A, x), total),
        subalgebra=closed,
        injective=span == n,
    )
