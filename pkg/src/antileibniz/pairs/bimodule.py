"""
Bimodules over anti-Leibniz algebras and their semidirect products.

Actions are stored as stacks of matrices acting on column vectors:
``lact[i] @ m`` is l(e_i)m and ``ract[i] @ m`` is r(e_i)m.
"""
import logging
from typing import Any, Optional

import numpy as np

from ..algebra.algebra import Algebra, freeze
from ..algebra.checks import require_anti_leibniz
from ..algebra.forms import BilinearForm, form_properties
from ..errors import DimensionMismatch, FieldMismatch
from ..report import Report

logger = logging.getLogger(__name__)

BIMODULE = "bimodule"


class Bimodule:
    def __init__(
            self,
            base: Algebra,
            lact: Any,
            ract: Any
    ):
        """
        param: base; Acting algebra. (Algebra)
        param: lact; Left actions, shape (dim, mdim, mdim). (array-like)
        param: ract; Right actions, same shape. (array-like)
        """
        self.base = base
        self.field = base.field
        lact, ract = self.field.array(lact), self.field.array(ract)
        if lact.ndim != 3 or lact.shape != ract.shape or lact.shape[0] != base.dim \
                or lact.shape[1] != lact.shape[2]:
            logger.error(f"Action stacks of shapes {lact.shape} and {ract.shape}")
            raise DimensionMismatch(
                f"actions must both have shape ({base.dim}, m, m); got "
                f"{lact.shape} and {ract.shape}"
            )
        self.lact = freeze(lact)
        self.ract = freeze(ract)
        self.mdim = lact.shape[1]

    def left_op(self, a: Any) -> np.ndarray:
        """l(a) for an arbitrary base vector."""
        a = self.base.vector(a)
        m = self.mdim
        return (a @ self.lact.reshape(self.base.dim, m * m)).reshape(m, m)

    def right_op(self, a: Any) -> np.ndarray:
        a = self.base.vector(a)
        m = self.mdim
        return (a @ self.ract.reshape(self.base.dim, m * m)).reshape(m, m)

    def swapped(self) -> "Bimodule":
        return Bimodule(self.base, self.ract, self.lact)

    def __repr__(self) -> str:
        return f"Bimodule(base dim={self.base.dim}, module dim={self.mdim}, " \
               f"field={self.field.name})"


def action_products(
        A: Algebra,
        lact: np.ndarray
) -> np.ndarray:
    """l(e_s e_t) for all (s, t), indexed [s, t, row, col]."""
    n, m = A.dim, lact.shape[1]
    return (A.sc.reshape(n * n, n) @ lact.reshape(n, m * m)).reshape(n, n, m, m)


def bimodule_defects(
        A: Algebra,
        lact: np.ndarray,
        ract: np.ndarray
) -> tuple:
    """
    Residuals of the three bimodule identities, each indexed [s, t, row, col].

    - l(e_s e_t) + l(e_s)l(e_t) + l(e_t)l(e_s)
    - l(e_s)r(e_t) + r(e_t)l(e_s) + r(e_s e_t)
    - r(e_s e_t) + r(e_t)r(e_s) + l(e_s)r(e_t)
    """
    field = A.field
    n, m = A.dim, lact.shape[1]
    lprod, rprod = action_products(A, lact), action_products(A, ract)
    first, second, third = (field.zeros((n, n, m, m)) for _ in range(3))
    for s in range(n):
        for t in range(n):
            first[s, t] = lprod[s, t] + lact[s] @ lact[t] + lact[t] @ lact[s]
            second[s, t] = lact[s] @ ract[t] + ract[t] @ lact[s] + rprod[s, t]
            third[s, t] = rprod[s, t] + ract[t] @ ract[s] + lact[s] @ ract[t]
    return first, second, third


def add_bimodule_clauses(
        report: Report,
        A: Algebra,
        lact: np.ndarray,
        ract: np.ndarray,
        label: str = ""
) -> None:
    names = ("left identity", "mixed identity", "right identity")
    for name, defect in zip(names, bimodule_defects(A, lact, ract)):
        mask = A.field.nonzero_mask(defect).reshape(A.dim, A.dim, -1).any(axis=2)
        hits = np.argwhere(mask)
        witness = tuple(int(i) + 1 for i in hits[0]) if hits.size else None
        report.add(f"{label}bimodule {name}", f"bimodule {name}",
                   not mask.any(), witness)


def check_bimodule(M: Bimodule) -> Report:
    """
    Verifies the three bimodule identities on all basis pairs (e_s, e_t).

    param: M; Bimodule over an anti-Leibniz algebra. (Bimodule)
    :return: Report; the witness of a failing clause is (s, t), 1-based.
     (Report)
    """
    require_anti_leibniz(M.base, "check_bimodule")
    report = Report(BIMODULE)
    with report.timed():
        add_bimodule_clauses(report, M.base, M.lact, M.ract)
    return report


def regular_bimodule(A: Algebra) -> Bimodule:
    require_anti_leibniz(A, "regular_bimodule")
    return Bimodule(A, A.left_stack(), A.right_stack())


def dual_bimodule(M: Bimodule) -> Bimodule:
    """(M*, l*, l* - r*) with l*(a) the transpose of l(a)."""
    require_anti_leibniz(M.base, "dual_bimodule")
    lt = M.lact.transpose(0, 2, 1)
    rt = M.ract.transpose(0, 2, 1)
    return Bimodule(M.base, lt.copy(), lt - rt)


def coregular_bimodule(A: Algebra) -> Bimodule:
    return dual_bimodule(regular_bimodule(A))


def check_bimodule_consequence(M: Bimodule) -> bool:
    """r(a1)(r(a2)m) = r(a1)(l(a2)m) for all basis a1, a2."""
    for s in range(M.base.dim):
        for t in range(M.base.dim):
            if not M.field.is_zero(M.ract[s] @ M.ract[t] - M.ract[s] @ M.lact[t]):
                return False
    return True


def semidirect_product(M: Bimodule) -> Algebra:
    """
    The algebra A + M with (a1, m1)(a2, m2) = (a1a2, l(a1)m2 + r(a2)m1).

    param: M; Bimodule, certified or not. (Bimodule)
    :return: Algebra of dimension dim A + dim M, A coordinates first. (Algebra)
    """
    A, field = M.base, M.field
    n, m = A.dim, M.mdim
    sc = field.zeros((n + m, n + m, n + m))
    sc[:n, :n, :n] = A.sc
    for i in range(n):
        sc[i, n:, n:] = M.lact[i].T
        sc[n:, i, n:] = M.ract[i].T
    labels = A.labels + tuple(f"m{j + 1}" for j in range(m))
    return Algebra(sc, field, labels)


def form_bimodule_isomorphism(
        A: Algebra,
        B: BilinearForm
) -> Report:
    """
    Compares skew-style invariance of a form with the statement that
     phi: A -> A*, <phi(a1), a2> = B(a1, a2), intertwines the regular and
     coregular bimodules.

    param: A; Anti-Leibniz algebra. (Algebra)
    param: B; Nondegenerate skew-symmetric form. (BilinearForm)
    :return: Report with the invariance flag, the intertwining flags and
     their agreement. (Report)
    """
    require_anti_leibniz(A, "form_bimodule_isomorphism")
    if B.field is not A.field:
        raise FieldMismatch("form and algebra live over different fields")
    props = form_properties(A, B)
    report = Report("form bimodule isomorphism")
    with report.timed():
        report.add("nondegenerate", "nondegenerate form", props.nondegenerate)
        report.add("skew-symmetric", "skew-symmetric form", props.skew_symmetric)
        phi = B.gram.T
        left_ok = right_ok = True
        for i in range(A.dim):
            lm, rm = A.left_mult(i), A.right_mult(i)
            left_ok &= A.field.is_zero(phi @ lm - lm.T @ phi)
            right_ok &= A.field.is_zero(phi @ rm - (lm - rm).T @ phi)
        intertwines = bool(left_ok and right_ok)
        report.add("intertwines regular and coregular", "bimodule isomorphism",
                   intertwines)
        report.add("invariant agrees with intertwining", "invariance criterion",
                   intertwines == props.invariant_skew_style,
                   {"invariant": props.invariant_skew_style,
                    "intertwines": intertwines})
    report.notes.append(f"invariant (skew style): {props.invariant_skew_style}")
    return report


def random_bimodule(
        A: Algebra,
        mdim: int,
        rng: np.random.Generator,
        density: Optional[float] = 0.25
) -> Bimodule:
    """Bimodule candidate with sparse entries in {-1, 0, 1}."""
    weights = [density / 2, 1 - density, density / 2]
    lact = A.field.random(rng, (A.dim, mdim, mdim), weights=weights)
    ract = A.field.random(rng, (A.dim, mdim, mdim), weights=weights)
    return Bimodule(A, lact, ract)
