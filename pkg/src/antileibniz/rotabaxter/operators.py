"""
Rota-Baxter operators: relative ones against a bimodule, weighted ones on the
algebra itself, and weighted ones adjoint to a skew-symmetric invariant form.
"""
import logging
from typing import Any, Union

import numpy as np

from ..algebra.algebra import Algebra
from ..algebra.checks import check_anti_leibniz, require_anti_leibniz
from ..algebra.forms import BilinearForm, form_properties
from ..algebra.maps import LinearMap, as_matrix, homomorphism_defect
from ..core.tensors import act_on_axis
from ..errors import DimensionMismatch, FieldMismatch, PreconditionViolated
from ..pairs.bimodule import Bimodule, check_bimodule
from ..report import Report

logger = logging.getLogger(__name__)

RELATIVE_RB = "relative Rota-Baxter operator"
WEIGHTED_RB = "Rota-Baxter operator of weight"
SKEW_QUADRATIC = "skew-quadratic Rota-Baxter algebra"


def _pair_witness(field, defect: np.ndarray):
    mask = field.nonzero_mask(defect).any(axis=2)
    hits = np.argwhere(mask)
    return tuple(int(i) + 1 for i in hits[0]) if hits.size else None


class RelativeRB:
    def __init__(
            self,
            bimodule: Bimodule,
            R: Union[LinearMap, Any]
    ):
        """
        param: bimodule; Bimodule (M, l, r) over A. (Bimodule)
        param: R; Map M -> A, shape (dim A, dim M). (LinearMap or matrix)
        """
        self.bimodule = bimodule
        self.field = bimodule.field
        matrix = as_matrix(R, self.field)
        if matrix.shape != (bimodule.base.dim, bimodule.mdim):
            logger.error(f"Operator of shape {matrix.shape} for module dim {bimodule.mdim}")
            raise DimensionMismatch(
                f"R must have shape ({bimodule.base.dim}, {bimodule.mdim}), got {matrix.shape}"
            )
        self.R = LinearMap(matrix, self.field)

    def __repr__(self) -> str:
        return f"RelativeRB({self.bimodule!r}, R={self.R!r})"


def relative_rb_defect(X: RelativeRB) -> np.ndarray:
    """R(m_i)R(m_j) - R(l(R m_i)m_j + r(R m_j)m_i), indexed [i, j, out]."""
    M, P = X.bimodule, X.R.matrix
    A = M.base
    out = X.field.zeros((M.mdim, M.mdim, A.dim))
    for i in range(M.mdim):
        left_i = M.left_op(P[:, i])
        for j in range(M.mdim):
            inner = left_i[:, j] + M.right_op(P[:, j])[:, i]
            out[i, j] = A.multiply(P[:, i], P[:, j]) - P @ inner
    return out


def check_relative_rb(X: RelativeRB) -> Report:
    """
    Checks the relative Rota-Baxter identity on all module basis pairs.

    param: X; Operator with its bimodule. (RelativeRB)
    :return: Report; witness (i, j) of the first failing module pair. (Report)
    """
    bimodule_report = check_bimodule(X.bimodule)
    if not bimodule_report.holds:
        logger.error(f"check_relative_rb: bimodule fails {bimodule_report.first_failure.name}")
        raise PreconditionViolated(
            f"check_relative_rb needs a bimodule; {bimodule_report.first_failure.name} "
            f"fails at {bimodule_report.witness}"
        )
    report = Report(RELATIVE_RB)
    with report.timed():
        defect = relative_rb_defect(X)
        report.add(RELATIVE_RB, "relative Rota-Baxter identity",
                   X.field.is_zero(defect), _pair_witness(X.field, defect))
    return report


class WeightedRB:
    def __init__(
            self,
            algebra: Algebra,
            R: Union[LinearMap, Any],
            weight: Any = 0
    ):
        """
        param: algebra; Anti-Leibniz algebra. (Algebra)
        param: R; Operator A -> A. (LinearMap or matrix)
        param: weight; The weight lambda. Default is 0. (scalar)
        """
        self.algebra = algebra
        self.field = algebra.field
        matrix = as_matrix(R, self.field)
        if matrix.shape != (algebra.dim, algebra.dim):
            logger.error(f"Operator of shape {matrix.shape} on dimension {algebra.dim}")
            raise DimensionMismatch(
                f"R must be {algebra.dim}x{algebra.dim}, got {matrix.shape}"
            )
        self.R = LinearMap(matrix, self.field)
        self.weight = self.field.element(weight)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedRB):
            return NotImplemented
        return (self.algebra == other.algebra and self.R == other.R
                and self.weight == other.weight)

    __hash__ = None

    def __repr__(self) -> str:
        return f"WeightedRB(weight={self.field.format(self.weight)}, R={self.R!r})"


def descendent_constants(X: WeightedRB) -> np.ndarray:
    """Structure constants of a1 ._R a2 = R(a1)a2 + a1R(a2) + weight a1a2."""
    sc, matrix = X.algebra.sc, X.R.matrix
    return (act_on_axis(sc, matrix.T, 0) + act_on_axis(sc, matrix.T, 1)
            + sc * X.weight)


def check_rb_weight(X: WeightedRB) -> Report:
    """
    Checks R(a1)R(a2) = R(R(a1)a2 + a1R(a2) + weight a1a2) on basis pairs.

    param: X; Weighted operator. (WeightedRB)
    :return: Report; witness (i, j) of the first failing pair. (Report)
    """
    require_anti_leibniz(X.algebra, "check_rb_weight")
    report = Report(f"{WEIGHTED_RB} {X.field.format(X.weight)}")
    with report.timed():
        descendent = Algebra(descendent_constants(X), X.field)
        defect = homomorphism_defect(X.R, descendent, X.algebra)
        report.add("Rota-Baxter identity", "weighted Rota-Baxter identity",
                   X.field.is_zero(defect), _pair_witness(X.field, defect))
    return report


def descendent_product(X: WeightedRB) -> Algebra:
    """
    The descendent algebra (A, ._R).

    A passing ``check_rb_weight`` makes it anti-Leibniz and R a homomorphism
    from it to (A, .); the result is certified when that is confirmed.
    """
    require_anti_leibniz(X.algebra, "descendent_product")
    descendent = Algebra(descendent_constants(X), X.field, X.algebra.labels)
    if check_rb_weight(X).holds:
        check_anti_leibniz(descendent)
    return descendent


class SkewQuadraticRB(WeightedRB):
    def __init__(
            self,
            algebra: Algebra,
            R: Union[LinearMap, Any],
            weight: Any,
            form: BilinearForm
    ):
        """
        param: algebra; Anti-Leibniz algebra. (Algebra)
        param: R; Operator A -> A. (LinearMap or matrix)
        param: weight; The weight lambda. (scalar)
        param: form; Skew-symmetric invariant form on A. (BilinearForm)
        """
        super().__init__(algebra, R, weight)
        if form.field is not self.field:
            raise FieldMismatch("form and algebra live over different fields")
        if form.dim != algebra.dim:
            raise DimensionMismatch(f"form dimension {form.dim} != {algebra.dim}")
        self.form = form

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewQuadraticRB):
            return NotImplemented
        return super().__eq__(other) and self.form == other.form

    __hash__ = None

    def __repr__(self) -> str:
        return f"SkewQuadraticRB(weight={self.field.format(self.weight)}, " \
               f"R={self.R!r}, form={self.form!r})"


def adjointness_defect(X: SkewQuadraticRB) -> np.ndarray:
    """B(R a1, a2) + B(a1, R a2) + weight B(a1, a2) as a matrix."""
    gram, matrix = X.form.gram, X.R.matrix
    return matrix.T @ gram + gram @ matrix + gram * X.weight


def check_skew_quadratic(X: SkewQuadraticRB) -> Report:
    """
    Verifies the Rota-Baxter identity, the three form conditions and the
     adjointness of R with the form.

    param: X; Candidate quadruple. (SkewQuadraticRB)
    :return: Report with one clause per condition. (Report)
    """
    require_anti_leibniz(X.algebra, "check_skew_quadratic")
    report = Report(SKEW_QUADRATIC)
    with report.timed():
        report.extend(check_rb_weight(X))
        props = form_properties(X.algebra, X.form)
        report.add("form nondegenerate", "nondegenerate form", props.nondegenerate)
        report.add("form skew-symmetric", "skew-symmetric form", props.skew_symmetric)
        report.add("form invariant", "skew-style invariance", props.invariant_skew_style)
        adjoint = adjointness_defect(X)
        hits = np.argwhere(X.field.nonzero_mask(adjoint))
        report.add("adjoint with weight", "form adjointness",
                   not hits.size, tuple(int(i) + 1 for i in hits[0]) if hits.size else None)
    return report


def require_skew_quadratic(
        X: SkewQuadraticRB,
        operation: str
) -> None:
    report = check_skew_quadratic(X)
    if not report.holds:
        failed = report.first_failure
        logger.error(f"{operation}: {failed.name} fails")
        raise PreconditionViolated(
            f"{operation} needs a skew-quadratic Rota-Baxter algebra; {failed.name} fails"
        )


def rb_involution(X: SkewQuadraticRB) -> SkewQuadraticRB:
    """(A, ., -B, -(weight id + R)); applying it twice returns X."""
    require_skew_quadratic(X, "rb_involution")
    field = X.field
    matrix = -(field.eye(X.algebra.dim) * X.weight + X.R.matrix)
    return SkewQuadraticRB(X.algebra, matrix, X.weight, -X.form)
