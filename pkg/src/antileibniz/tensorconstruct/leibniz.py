"""
Leibniz coalgebras and Leibniz bialgebras, the inputs of the tensor-product
bialgebra construction.

A Leibniz coalgebra satisfies
(d (x) id)d + (tau (x) id)(id (x) d)d - (id (x) d)d = 0, the dual of the left
Leibniz identity. A Leibniz bialgebra couples it with a left Leibniz algebra
through

    tau(r(y) (x) id)d(x) = (r(x) (x) id)d(y)
    d([x, y]) = (id (x) r(y) - (l + r)(y) (x) id)(id + tau)d(x)
                + (id (x) l(x) + l(x) (x) id)d(y)
"""
import logging
from typing import Dict, Tuple

import numpy as np

from ..algebra.algebra import Algebra
from ..algebra.checks import require_leibniz
from ..bialgebra.coalgebra import Coalgebra, iterated_coproducts
from ..core.tensors import first_nonzero, one_based
from ..errors import DimensionMismatch, FieldMismatch, PreconditionViolated
from ..report import Report

logger = logging.getLogger(__name__)

LEIBNIZ_COALGEBRA = "Leibniz coalgebra"
LEIBNIZ_BIALGEBRA = "Leibniz bialgebra"


def leibniz_coalgebra_defect(C: Coalgebra) -> np.ndarray:
    left, right = iterated_coproducts(C)
    return left + right.transpose(0, 2, 1, 3) - right


def check_leibniz_coalgebra(C: Coalgebra) -> Report:
    """
    Evaluates the Leibniz co-identity on each basis vector.

    param: C; Coalgebra to check. (Coalgebra)
    :return: Report whose witness is the first failing basis index, 1-based.
     (Report)
    """
    report = Report(LEIBNIZ_COALGEBRA)
    with report.timed():
        defect = leibniz_coalgebra_defect(C)
        mask = C.field.nonzero_mask(defect).reshape(C.dim, -1).any(axis=1)
        report.add(LEIBNIZ_COALGEBRA, "Leibniz co-identity", not mask.any(),
                   one_based(first_nonzero(None, mask)))
    if report.holds:
        C.certify(LEIBNIZ_COALGEBRA)
    return report


class LeibnizBialgebra:
    def __init__(
            self,
            alg: Algebra,
            coa: Coalgebra
    ):
        """
        param: alg; Left Leibniz algebra. (Algebra)
        param: coa; Leibniz coalgebra on the same space. (Coalgebra)
        """
        if alg.field is not coa.field:
            logger.error(f"Leibniz bialgebra over {alg.field} and {coa.field}")
            raise FieldMismatch("algebra and coalgebra must share one field")
        if alg.dim != coa.dim:
            logger.error(f"Leibniz bialgebra of dimensions {alg.dim} and {coa.dim}")
            raise DimensionMismatch(
                f"algebra dimension {alg.dim} != coalgebra dimension {coa.dim}"
            )
        self.alg = alg
        self.coa = coa
        self.field = alg.field
        self.dim = alg.dim
        self.certificates: Dict[str, str] = {}

    def digest(self) -> str:
        return self.alg.digest() + self.coa.digest()

    def certify(self, law: str) -> None:
        self.certificates[law] = self.digest()

    def is_certified(self, law: str) -> bool:
        return self.certificates.get(law) == self.digest()

    def __repr__(self) -> str:
        return f"LeibnizBialgebra({self.alg!r}, {self.coa!r})"


def leibniz_compatibility_defects(B: LeibnizBialgebra) -> Tuple[np.ndarray, np.ndarray]:
    """
    Residuals of the two Leibniz bialgebra equations for (x, y) = (e_s, e_t),
     indexed [s, t, p, q].
    """
    A, C, field = B.alg, B.coa, B.field
    n = A.dim
    lefts, rights = A.left_stack(), A.right_stack()
    products = (A.sc.reshape(n * n, n) @ C.cc.reshape(n, n * n)).reshape(n, n, n, n)
    symmetry, bracket = field.zeros((n, n, n, n)), field.zeros((n, n, n, n))
    for s in range(n):
        ds = C.cc[s]
        both = ds + ds.T
        for t in range(n):
            dt = C.cc[t]
            symmetry[s, t] = (rights[t] @ ds).T - rights[s] @ dt
            bracket[s, t] = (products[s, t] - both @ rights[t].T
                             + (lefts[t] + rights[t]) @ both
                             - dt @ lefts[s].T - lefts[s] @ dt)
    return symmetry, bracket


def _pair_witness(field, defect: np.ndarray):
    mask = field.nonzero_mask(defect).reshape(defect.shape[0], defect.shape[1], -1)
    hits = np.argwhere(mask.any(axis=2))
    return tuple(int(x) + 1 for x in hits[0]) if hits.size else None


def check_leibniz_bialgebra(B: LeibnizBialgebra) -> Report:
    """
    Verifies both Leibniz bialgebra equations on basis pairs.

    param: B; Leibniz algebra with a Leibniz coalgebra. (LeibnizBialgebra)
    :return: Report; witness (s, t) of the first failing pair. (Report)
    """
    require_leibniz(B.alg, "check_leibniz_bialgebra")
    require_leibniz_coalgebra(B.coa, "check_leibniz_bialgebra")
    report = Report(LEIBNIZ_BIALGEBRA)
    with report.timed():
        symmetry, bracket = leibniz_compatibility_defects(B)
        report.add("right-multiplication symmetry", "Leibniz right-multiplication symmetry",
                   B.field.is_zero(symmetry), _pair_witness(B.field, symmetry))
        report.add("coproduct of a bracket", "Leibniz coproduct of a bracket",
                   B.field.is_zero(bracket), _pair_witness(B.field, bracket))
    if report.holds:
        B.certify(LEIBNIZ_BIALGEBRA)
    return report


def require_leibniz_coalgebra(
        C: Coalgebra,
        operation: str
) -> None:
    if C.is_certified(LEIBNIZ_COALGEBRA):
        return
    report = check_leibniz_coalgebra(C)
    if not report.holds:
        logger.error(f"{operation}: not a Leibniz coalgebra (witness {report.witness})")
        raise PreconditionViolated(
            f"{operation} needs a Leibniz coalgebra; co-identity fails at {report.witness}"
        )


def require_leibniz_bialgebra(
        B: LeibnizBialgebra,
        operation: str
) -> None:
    if B.is_certified(LEIBNIZ_BIALGEBRA):
        return
    report = check_leibniz_bialgebra(B)
    if not report.holds:
        failed = report.first_failure
        logger.error(f"{operation}: {failed.name} fails at {failed.witness}")
        raise PreconditionViolated(
            f"{operation} needs a Leibniz bialgebra; {failed.name} fails at "
            f"{failed.witness}"
        )
