"""
Checkers for the algebra classes used throughout the package.

All laws are multilinear, so they are evaluated on basis tuples only. The
triple products e_i(e_j e_k) and (e_i e_j)e_k are computed once as 4-tensors
indexed [i, j, k, out] and every law is a signed sum of their transposes.
"""
import logging
from typing import Tuple

import numpy as np

from ..core.tensors import first_nonzero, one_based
from ..errors import PreconditionViolated
from ..report import Report
from .algebra import Algebra

logger = logging.getLogger(__name__)

ANTI_LEIBNIZ = "anti-Leibniz"
RIGHT_ANTI_LEIBNIZ = "right anti-Leibniz"
MOCK_LIE = "mock-Lie"
LEIBNIZ = "Leibniz"
ANTICOMM_ANTIASSOC = "anti-commutative anti-associative"


def triple_products(A: Algebra) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns (D1, D2) with D1[i, j, k] = e_i(e_j e_k) and D2[i, j, k] = (e_i e_j)e_k.
    """
    n = A.dim
    flat = A.sc.reshape(n * n, n)
    d1 = (flat @ A.sc.transpose(1, 0, 2).reshape(n, n * n))
    d1 = d1.reshape(n, n, n, n).transpose(2, 0, 1, 3)
    d2 = (flat @ A.sc.reshape(n, n * n)).reshape(n, n, n, n)
    return d1, d2


def anti_leibniz_defect(A: Algebra) -> np.ndarray:
    """a1(a2a3) + (a1a2)a3 + a2(a1a3) on basis triples."""
    d1, d2 = triple_products(A)
    return d1 + d2 + d1.transpose(1, 0, 2, 3)


def _triple_witness(A: Algebra, defect: np.ndarray):
    mask = A.field.nonzero_mask(defect).any(axis=-1)
    return one_based(first_nonzero(None, mask))


def _law_report(
        A: Algebra,
        title: str,
        anchor: str,
        defect: np.ndarray
) -> Report:
    report = Report(title)
    with report.timed():
        report.add(title, anchor, A.field.is_zero(defect), _triple_witness(A, defect))
    if report.holds:
        A.certify(title)
    return report


def check_anti_leibniz(A: Algebra) -> Report:
    """
    Tests a1(a2a3) + (a1a2)a3 + a2(a1a3) = 0 on every basis triple.

    param: A; Algebra to check. (Algebra)
    :return: Report whose witness is the first failing (i, j, k), 1-based.
     (Report)
    """
    return _law_report(A, ANTI_LEIBNIZ, "anti-Leibniz identity",
                       anti_leibniz_defect(A))


def check_right_anti_leibniz(A: Algebra) -> Report:
    d1, d2 = triple_products(A)
    return _law_report(A, RIGHT_ANTI_LEIBNIZ, "right anti-Leibniz identity",
                       d1 + d2 + d2.transpose(0, 2, 1, 3))


def _commutator_report(
        A: Algebra,
        report: Report,
        name: str,
        anchor: str,
        sign: int
) -> None:
    swapped = A.sc.transpose(1, 0, 2)
    defect = A.sc - swapped if sign > 0 else A.sc + swapped
    mask = A.field.nonzero_mask(defect).any(axis=-1)
    report.add(name, anchor, not mask.any(), one_based(first_nonzero(None, mask)))


def check_mock_lie(A: Algebra) -> Report:
    """Commutativity plus the Jacobi identity."""
    report = Report(MOCK_LIE)
    with report.timed():
        _commutator_report(A, report, "commutative", "commutativity", +1)
        d1, _ = triple_products(A)
        jacobi = d1 + d1.transpose(2, 0, 1, 3) + d1.transpose(1, 2, 0, 3)
        report.add("Jacobi", "Jacobi identity", A.field.is_zero(jacobi),
                   _triple_witness(A, jacobi))
    if report.holds:
        A.certify(MOCK_LIE)
    return report


def check_leibniz(A: Algebra) -> Report:
    """Left Leibniz: [x1,[x2,x3]] = [[x1,x2],x3] + [x2,[x1,x3]]."""
    d1, d2 = triple_products(A)
    return _law_report(A, LEIBNIZ, "left Leibniz identity",
                       d1 - d2 - d1.transpose(1, 0, 2, 3))


def check_right_leibniz(A: Algebra) -> Report:
    """Right Leibniz: [[x1,x2],x3] = [[x1,x3],x2] + [x1,[x2,x3]]."""
    d1, d2 = triple_products(A)
    return _law_report(A, "right Leibniz", "right Leibniz identity",
                       d2 - d2.transpose(0, 2, 1, 3) - d1)


def check_anticomm_antiassoc(
        A: Algebra,
        policy: str = "literal"
) -> Report:
    """
    Anti-commutativity b1b2 = -b2b1 and anti-associativity b1(b2b3) = -(b1b2)b3.

    Over a field of characteristic other than 2 the literal anti-commutative
    law forces e_i e_i = 0. The "off_diagonal" policy only asks it for distinct
    basis indices; the other reading is attached to the report as a note.

    param: A; Algebra to check. (Algebra)
    param: policy; "literal" or "off_diagonal". Default is "literal". (str)
    :return: Report with anti-commutative and anti-associative clauses.
     (Report)
    """
    if policy not in {"literal", "off_diagonal"}:
        raise ValueError("policy must be 'literal' or 'off_diagonal'")
    report = Report(ANTICOMM_ANTIASSOC)
    with report.timed():
        defect = A.field.nonzero_mask(A.sc + A.sc.transpose(1, 0, 2)).any(axis=-1)
        off_diagonal = defect & ~np.eye(A.dim, dtype=bool)
        literal_ok, off_ok = not defect.any(), not off_diagonal.any()
        if policy == "literal":
            report.add("anti-commutative", "anti-commutativity", literal_ok,
                       one_based(first_nonzero(None, defect)))
            report.notes.append(f"off-diagonal anti-commutativity: {off_ok}")
        else:
            report.add("anti-commutative (off-diagonal)", "anti-commutativity",
                       off_ok, one_based(first_nonzero(None, off_diagonal)))
            report.notes.append(f"literal anti-commutativity: {literal_ok}")
        d1, d2 = triple_products(A)
        report.add("anti-associative", "anti-associativity",
                   A.field.is_zero(d1 + d2), _triple_witness(A, d1 + d2))
    if report.holds:
        A.certify(f"{ANTICOMM_ANTIASSOC} ({policy})")
    return report


def left_triple_collapse_check(A: Algebra) -> bool:
    """
    Asserts the consequence (a1a2)a3 = (a2a1)a3 of the anti-Leibniz law.

    param: A; Algebra certified (or checkable) as anti-Leibniz. (Algebra)
    :return: True when the identity holds on every basis triple. (bool)
    """
    require_anti_leibniz(A, "left_triple_collapse_check")
    _, d2 = triple_products(A)
    return A.field.is_zero(d2 - d2.transpose(1, 0, 2, 3))


def require_anti_leibniz(
        A: Algebra,
        operation: str
) -> None:
    """Raises PreconditionViolated unless A is anti-Leibniz."""
    if A.is_certified(ANTI_LEIBNIZ):
        return
    report = check_anti_leibniz(A)
    if not report.holds:
        logger.error(
            f"{operation}: algebra is not anti-Leibniz (witness {report.witness})"
        )
        raise PreconditionViolated(
            f"{operation} needs an anti-Leibniz algebra; identity fails at "
            f"{report.witness}"
        )


def require_leibniz(
        A: Algebra,
        operation: str
) -> None:
    if A.is_certified(LEIBNIZ):
        return
    report = check_leibniz(A)
    if not report.holds:
        logger.error(f"{operation}: algebra is not Leibniz (witness {report.witness})")
        raise PreconditionViolated(
            f"{operation} needs a Leibniz algebra; identity fails at {report.witness}"
        )
