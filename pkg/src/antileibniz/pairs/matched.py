"""
Matched pairs, crossed products and standard Manin triples.

In a matched pair (A, B, lA, rA, lB, rB) the stacks ``lA``/``rA`` hold the
actions of A's basis on B and ``lB``/``rB`` the actions of B's basis on A.
The crossed product lives on A + B with A coordinates first:

    (a, 0)(0, b) = (rB(b)a, lA(a)b),  (0, b)(a, 0) = (lB(b)a, rA(a)b).
"""
import logging
from dataclasses import dataclass
from typing import Any, Tuple

import numpy as np

from ..algebra.algebra import Algebra, freeze
from ..algebra.checks import check_anti_leibniz, require_anti_leibniz
from ..algebra.forms import BilinearForm, form_properties
from ..errors import DimensionMismatch, FieldMismatch, PreconditionViolated
from ..report import Report
from .bimodule import add_bimodule_clauses

logger = logging.getLogger(__name__)

MATCHED_PAIR = "matched pair"


class MatchedPairData:
    def __init__(
            self,
            A: Algebra,
            B: Algebra,
            lA: Any,
            rA: Any,
            lB: Any,
            rB: Any
    ):
        """
        param: A; First algebra. (Algebra)
        param: B; Second algebra. (Algebra)
        param: lA; Left actions of A on B, shape (dim A, dim B, dim B).
         (array-like)
        param: rA; Right actions of A on B, same shape. (array-like)
        param: lB; Left actions of B on A, shape (dim B, dim A, dim A).
         (array-like)
        param: rB; Right actions of B on A, same shape. (array-like)
        """
        if A.field is not B.field:
            logger.error(f"Matched pair over {A.field} and {B.field}")
            raise FieldMismatch("both algebras must share one field")
        self.A, self.B, self.field = A, B, A.field
        n, m = A.dim, B.dim
        stacks = []
        for name, value, shape in (("lA", lA, (n, m, m)), ("rA", rA, (n, m, m)),
                                   ("lB", lB, (m, n, n)), ("rB", rB, (m, n, n))):
            value = self.field.array(value)
            if value.shape != shape:
                logger.error(f"{name} has shape {value.shape}, expected {shape}")
                raise DimensionMismatch(f"{name} must have shape {shape}, got {value.shape}")
            stacks.append(freeze(value))
        self.lA, self.rA, self.lB, self.rB = stacks

    def swapped(self) -> "MatchedPairData":
        return MatchedPairData(self.B, self.A, self.lB, self.rB, self.lA, self.rA)

    @classmethod
    def trivial(
            cls,
            A: Algebra,
            B: Algebra
    ) -> "MatchedPairData":
        field = A.field
        n, m = A.dim, B.dim
        return cls(A, B, field.zeros((n, m, m)), field.zeros((n, m, m)),
                   field.zeros((m, n, n)), field.zeros((m, n, n)))


def _combine(stack: np.ndarray, vector: np.ndarray) -> np.ndarray:
    k, d = stack.shape[0], stack.shape[1]
    return (vector @ stack.reshape(k, d * d)).reshape(d, d)


def matched_pair_defects(
        A: Algebra,
        B: Algebra,
        lA: np.ndarray,
        rA: np.ndarray,
        lB: np.ndarray,
        rB: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    The three B-valued compatibility residuals, each indexed [i, j, k, out] for
     a = e_i in A and b1 = f_j, b2 = f_k in B:

    - rA(a)(b1b2) + b1(rA(a)b2) + b2(rA(a)b1) + rA(lB(b2)a)b1 + rA(lB(b1)a)b2
    - lA(a)(b1b2) + (lA(a)b1)b2 + b1(lA(a)b2) + lA(rB(b1)a)b2 + rA(rB(b2)a)b1
    - (lA(a)b1)b2 + lA(rB(b1)a)b2 - (rA(a)b1)b2 - lA(lB(b1)a)b2
    """
    field = A.field
    n, m = A.dim, B.dim
    left_b, right_b = B.left_stack(), B.right_stack()
    first, second, third = (field.zeros((n, m, m, m)) for _ in range(3))
    for i in range(n):
        for j in range(m):
            rA_lB_j = _combine(rA, lB[j][:, i])
            lA_rB_j = _combine(lA, rB[j][:, i])
            lA_lB_j = _combine(lA, lB[j][:, i])
            for k in range(m):
                rA_lB_k = _combine(rA, lB[k][:, i])
                rA_rB_k = _combine(rA, rB[k][:, i])
                first[i, j, k] = (rA[i] @ B.sc[j, k]
                                  + left_b[j] @ rA[i][:, k]
                                  + left_b[k] @ rA[i][:, j]
                                  + rA_lB_k[:, j]
                                  + rA_lB_j[:, k])
                second[i, j, k] = (lA[i] @ B.sc[j, k]
                                   + right_b[k] @ lA[i][:, j]
                                   + left_b[j] @ lA[i][:, k]
                                   + lA_rB_j[:, k]
                                   + rA_rB_k[:, j])
                third[i, j, k] = (right_b[k] @ lA[i][:, j]
                                  + lA_rB_j[:, k]
                                  - right_b[k] @ rA[i][:, j]
                                  - lA_lB_j[:, k])
    return first, second, third


def _first_index(field, defect: np.ndarray):
    mask = field.nonzero_mask(defect).reshape(defect.shape[:3] + (-1,)).any(axis=3)
    hits = np.argwhere(mask)
    return tuple(int(x) + 1 for x in hits[0]) if hits.size else None


def check_matched_pair(
        D: MatchedPairData,
        strict: bool = False
) -> Report:
    """
    Verifies the six matched-pair equations, together with the component
     conditions they presuppose.

    The B algebra and both bimodules are reported as clauses; with
    ``strict=True`` a failing component raises PreconditionViolated instead.

    param: D; Matched-pair data. (MatchedPairData)
    param: strict; Raise on failing components. Default is False. (bool)
    :return: Report; equation clauses are numbered 1-6 in their name.
     (Report)
    """
    require_anti_leibniz(D.A, "check_matched_pair")
    report = Report(MATCHED_PAIR)
    with report.timed():
        b_report = check_anti_leibniz(D.B)
        report.add("B anti-Leibniz", "anti-Leibniz identity",
                   b_report.holds, b_report.witness)
        add_bimodule_clauses(report, D.A, D.lA, D.rA, label="A on B ")
        add_bimodule_clauses(report, D.B, D.lB, D.rB, label="B on A ")
        if strict and not report.holds:
            failed = report.first_failure
            logger.error(f"Matched pair component fails: {failed.name}")
            raise PreconditionViolated(f"matched pair component fails: {failed.name}")
        anchors = ("right action on products", "left action on products",
                   "left-right action balance")
        forward = matched_pair_defects(D.A, D.B, D.lA, D.rA, D.lB, D.rB)
        backward = matched_pair_defects(D.B, D.A, D.lB, D.rB, D.lA, D.rA)
        for number, (anchor, defect) in enumerate(zip(anchors * 2, forward + backward),
                                                  start=1):
            report.add(f"matched pair equation {number}", anchor,
                       D.field.is_zero(defect), _first_index(D.field, defect))
    return report


def crossed_product(D: MatchedPairData) -> Algebra:
    """Algebra on A + B; a pass of check_anti_leibniz on it matches check_matched_pair."""
    field = D.field
    n, m = D.A.dim, D.B.dim
    sc = field.zeros((n + m, n + m, n + m))
    sc[:n, :n, :n] = D.A.sc
    sc[n:, n:, n:] = D.B.sc
    for i in range(n):
        for j in range(m):
            sc[i, n + j, :n] = D.rB[j][:, i]
            sc[i, n + j, n:] = D.lA[i][:, j]
            sc[n + j, i, :n] = D.lB[j][:, i]
            sc[n + j, i, n:] = D.rA[i][:, j]
    return Algebra(sc, field, D.A.labels + D.B.labels)


def coregular_pair(
        A: Algebra,
        C: Any
) -> MatchedPairData:
    """
    The pair (A, A*, l*, l* - r*, l*_{A*}, l*_{A*} - r*_{A*}) with A* the dual
     algebra of a coalgebra structure on A.

    param: A; Algebra. (Algebra)
    param: C; Coalgebra on the same space. (Coalgebra)
    :return: Matched-pair data. (MatchedPairData)
    """
    from ..bialgebra.coalgebra import dual_algebra

    if C.dim != A.dim:
        raise DimensionMismatch(f"coalgebra dimension {C.dim} != algebra dimension {A.dim}")
    dual = dual_algebra(C)
    left, right = A.left_stack(), A.right_stack()
    dleft, dright = dual.left_stack(), dual.right_stack()
    return MatchedPairData(
        A, dual,
        left.transpose(0, 2, 1).copy(), (left - right).transpose(0, 2, 1).copy(),
        dleft.transpose(0, 2, 1).copy(), (dleft - dright).transpose(0, 2, 1).copy(),
    )


def pairing_form(field, n: int) -> BilinearForm:
    """Gram matrix of ((a1, x1), (a2, x2)) -> <x1, a2> - <x2, a1>."""
    gram = field.zeros((2 * n, 2 * n))
    eye = field.eye(n)
    gram[:n, n:] = -eye
    gram[n:, :n] = eye
    return BilinearForm(gram, field)


@dataclass
class ManinTriple:
    total: Algebra
    form: BilinearForm
    report: Report


def standard_manin_triple(
        A: Algebra,
        C: Any,
        strict: bool = False
) -> ManinTriple:
    """
    Builds A + A* with the crossed-product multiplication and the canonical
     skew pairing, and reports the Manin triple conditions.

    param: A; Anti-Leibniz algebra. (Algebra)
    param: C; Coalgebra whose dual algebra is A*. (Coalgebra)
    param: strict; Raise when the dual algebra is not anti-Leibniz.
     Default is False. (bool)
    :return: Total algebra, form and report. (ManinTriple)
    """
    from ..bialgebra.coalgebra import dual_algebra

    require_anti_leibniz(A, "standard_manin_triple")
    n, field = A.dim, A.field
    dual_report = check_anti_leibniz(dual_algebra(C))
    if strict and not dual_report.holds:
        logger.error("standard_manin_triple: dual algebra is not anti-Leibniz")
        raise PreconditionViolated("the dual algebra of C is not anti-Leibniz")
    total = crossed_product(coregular_pair(A, C))
    form = pairing_form(field, n)
    report = Report("standard Manin triple")
    with report.timed():
        report.add("dual algebra anti-Leibniz", "anti-Leibniz identity",
                   dual_report.holds, dual_report.witness)
        total_report = check_anti_leibniz(total)
        report.add("total anti-Leibniz", "anti-Leibniz identity",
                   total_report.holds, total_report.witness)
        report.add("A subalgebra", "subalgebra", field.is_zero(total.sc[:n, :n, n:]))
        report.add("A* subalgebra", "subalgebra", field.is_zero(total.sc[n:, n:, :n]))
        props = form_properties(total, form)
        report.add("pairing nondegenerate", "nondegenerate form", props.nondegenerate)
        report.add("pairing skew-symmetric", "skew-symmetric form", props.skew_symmetric)
        report.add("pairing invariant", "skew-style invariance",
                   props.invariant_skew_style)
    report.notes.append(
        "the canonical pairing is skew-symmetric; it is checked for skew-style "
        "invariance"
    )
    return ManinTriple(total, form, report)
