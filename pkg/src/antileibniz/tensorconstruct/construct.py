"""
Tensor-product constructions of anti-Leibniz (co/bi)algebras.

A left Leibniz algebra L tensored with an anti-commutative anti-associative
algebra B is anti-Leibniz under (x (x) b)(x' (x) b') = [x, x'] (x) bb'. The
coalgebra and bialgebra versions follow the same pattern with the coproduct
of B dual to its product under a symmetric invariant form.

The basis of L (x) B is ordered with L major: x_i (x) e_j sits at position
i * dim(B) + j.

Over a field of characteristic other than 2, literal anti-commutativity
forces b b = 0, which the two-dimensional algebra e1 e1 = e2 violates. The
construction only needs the triple identities, so B is accepted when
anti-commutativity holds for distinct basis elements, anti-associativity
holds, and b1(b2b3) + b2(b1b3) = 0. The report says whether the literal law
holds as well.
"""
import logging
from typing import Dict

import numpy as np

from ..algebra.algebra import Algebra, digest
from ..algebra.checks import (
    ANTICOMM_ANTIASSOC,
    check_anti_leibniz,
    require_leibniz,
    triple_products,
)
from ..algebra.forms import BilinearForm, form_properties
from ..bialgebra.bialgebra import Bialgebra, check_bialgebra
from ..bialgebra.coalgebra import Coalgebra, check_coalgebra, dual_algebra
from ..core.linalg import solve_invert
from ..core.tensors import act_on_axis, first_nonzero, interleave, one_based
from ..errors import DimensionMismatch, FieldMismatch, PreconditionViolated
from ..report import Report
from .leibniz import (
    LeibnizBialgebra,
    require_leibniz_bialgebra,
    require_leibniz_coalgebra,
)

logger = logging.getLogger(__name__)

AA_POLICY = f"{ANTICOMM_ANTIASSOC} (tensor policy)"
QUADRATIC_AA = "quadratic anti-commutative anti-associative algebra"


def aa_policy_report(B: Algebra) -> Report:
    """
    Certifies B as an admissible anti-commutative anti-associative factor.

    param: B; Candidate algebra. (Algebra)
    :return: Report with the off-diagonal anti-commutativity,
     anti-associativity and triple symmetry clauses; a note records whether
     literal anti-commutativity holds. (Report)
    """
    field = B.field
    report = Report(AA_POLICY)
    with report.timed():
        flip = field.nonzero_mask(B.sc + B.sc.transpose(1, 0, 2)).any(axis=-1)
        off_diagonal = flip & ~np.eye(B.dim, dtype=bool)
        report.add("anti-commutative (off-diagonal)", "anti-commutativity",
                   not off_diagonal.any(), one_based(first_nonzero(None, off_diagonal)))
        d1, d2 = triple_products(B)
        for name, anchor, defect in (
                ("anti-associative", "anti-associativity", d1 + d2),
                ("triple symmetry", "triple symmetry",
                 d1 + d1.transpose(1, 0, 2, 3)),
        ):
            mask = field.nonzero_mask(defect).any(axis=-1)
            report.add(name, anchor, not mask.any(), one_based(first_nonzero(None, mask)))
        report.notes.append(f"literal anti-commutativity: {not flip.any()}")
    if report.holds:
        B.certify(AA_POLICY)
    return report


def require_aa(
        B: Algebra,
        operation: str
) -> None:
    if B.is_certified(AA_POLICY):
        return
    report = aa_policy_report(B)
    if not report.holds:
        failed = report.first_failure
        logger.error(f"{operation}: {failed.name} fails at {failed.witness}")
        raise PreconditionViolated(
            f"{operation} needs an anti-commutative anti-associative algebra; "
            f"{failed.name} fails at {failed.witness}"
        )


def coalgebra_policy_report(C: Coalgebra) -> Report:
    """The dual statement for coalgebras, checked on the dual algebra."""
    report = Report("anti-cocommutative anti-coassociative coalgebra (tensor policy)")
    report.extend(aa_policy_report(dual_algebra(C)))
    return report


class QuadraticAA:
    def __init__(
            self,
            alg: Algebra,
            form: BilinearForm
    ):
        """
        param: alg; Anti-commutative anti-associative algebra. (Algebra)
        param: form; Symmetric invariant nondegenerate form. (BilinearForm)
        """
        if form.field is not alg.field:
            logger.error(f"Form over {form.field} on an algebra over {alg.field}")
            raise FieldMismatch("form and algebra live over different fields")
        if form.dim != alg.dim:
            raise DimensionMismatch(f"form dimension {form.dim} != {alg.dim}")
        self.alg = alg
        self.form = form
        self.field = alg.field
        self.dim = alg.dim
        self.certificates: Dict[str, str] = {}

    def digest(self) -> str:
        return digest(self.field, self.alg.sc, self.form.gram)

    def certify(self, law: str) -> None:
        self.certificates[law] = self.digest()

    def is_certified(self, law: str) -> bool:
        return self.certificates.get(law) == self.digest()

    def __repr__(self) -> str:
        return f"QuadraticAA({self.alg!r}, {self.form!r})"


def check_quadratic_aa(Q: QuadraticAA) -> Report:
    report = Report(QUADRATIC_AA)
    with report.timed():
        report.extend(aa_policy_report(Q.alg))
        props = form_properties(Q.alg, Q.form)
        report.add("form symmetric", "symmetric form", props.symmetric)
        report.add("form invariant", "associative-style invariance",
                   props.invariant_sym_style)
        report.add("form nondegenerate", "nondegenerate form", props.nondegenerate)
    if report.holds:
        Q.certify(QUADRATIC_AA)
    return report


def require_quadratic_aa(
        Q: QuadraticAA,
        operation: str
) -> None:
    if Q.is_certified(QUADRATIC_AA):
        return
    report = check_quadratic_aa(Q)
    if not report.holds:
        failed = report.first_failure
        logger.error(f"{operation}: {failed.name} fails")
        raise PreconditionViolated(
            f"{operation} needs a quadratic anti-commutative anti-associative "
            f"algebra; {failed.name} fails"
        )


def _product_labels(left, right):
    return [f"{x}{b}" for x in left for b in right]


def tensor_algebra(
        L: Algebra,
        B: Algebra
) -> Algebra:
    """
    The anti-Leibniz algebra induced on L (x) B.

    param: L; Left Leibniz algebra. (Algebra)
    param: B; Anti-commutative anti-associative algebra. (Algebra)
    :return: Certified anti-Leibniz algebra of dimension dim L * dim B.
     (Algebra)
    """
    if L.field is not B.field:
        raise FieldMismatch("both factors must live over one field")
    require_leibniz(L, "tensor_algebra")
    require_aa(B, "tensor_algebra")
    A = Algebra(interleave(L.sc, B.sc), L.field, _product_labels(L.labels, B.labels))
    report = check_anti_leibniz(A)
    if not report.holds:
        logger.error(f"tensor_algebra: product fails at {report.witness}")
        raise PreconditionViolated(
            f"the factors do not induce an anti-Leibniz algebra (witness {report.witness})"
        )
    logger.debug(f"tensor_algebra: built dimension {A.dim}")
    return A


def tensor_coalgebra(
        L: Coalgebra,
        B: Coalgebra
) -> Coalgebra:
    """
    (x (x) b) -> d(x) . D(b), legs interleaved.

    param: L; Leibniz coalgebra. (Coalgebra)
    param: B; Anti-cocommutative anti-coassociative coalgebra. (Coalgebra)
    :return: Anti-Leibniz coalgebra on L (x) B. (Coalgebra)
    """
    if L.field is not B.field:
        raise FieldMismatch("both factors must live over one field")
    require_leibniz_coalgebra(L, "tensor_coalgebra")
    policy = coalgebra_policy_report(B)
    if not policy.holds:
        failed = policy.first_failure
        logger.error(f"tensor_coalgebra: {failed.name} fails at {failed.witness}")
        raise PreconditionViolated(
            f"tensor_coalgebra needs an anti-cocommutative anti-coassociative "
            f"coalgebra; {failed.name} fails at {failed.witness}"
        )
    C = Coalgebra(interleave(L.cc, B.cc), L.field, _product_labels(L.labels, B.labels))
    check_coalgebra(C)
    return C


def quadratic_dual_coalgebra(Q: QuadraticAA) -> Coalgebra:
    """
    The coproduct D with w(D(b1), b2 (x) b3) = w(b1, b2b3).

    D(e_k) = G^-T P_k G^-1 where P_k[p, q] = w(e_k, e_p e_q).

    param: Q; Quadratic anti-commutative anti-associative algebra.
     (QuadraticAA)
    :return: The coalgebra (B, D). (Coalgebra)
    """
    require_quadratic_aa(Q, "quadratic_dual_coalgebra")
    field = Q.field
    gram = Q.form.gram
    inverse_t = solve_invert(field, gram).T
    pairings = act_on_axis(Q.alg.sc, gram, 2).transpose(2, 0, 1)
    cc = act_on_axis(act_on_axis(pairings, inverse_t, 1), inverse_t, 2)
    return Coalgebra(cc.copy(), field, Q.alg.labels)


def product_coproduct_defect(Q: QuadraticAA) -> np.ndarray:
    """D(b b') + sum b(1)b' (x) b(2) on basis pairs, indexed [i, j, p, q]."""
    C = quadratic_dual_coalgebra(Q)
    n = Q.dim
    sc, rights = Q.alg.sc, Q.alg.right_stack()
    products = (sc.reshape(n * n, n) @ C.cc.reshape(n, n * n)).reshape(n, n, n, n)
    out = Q.field.zeros((n, n, n, n))
    for i in range(n):
        for j in range(n):
            out[i, j] = products[i, j] + rights[j] @ C.cc[i]
    return out


def induced_bialgebra(
        LB: LeibnizBialgebra,
        Q: QuadraticAA
) -> Bialgebra:
    """
    The anti-Leibniz bialgebra on L (x) B with coproduct d(x) . D_w(b).

    param: LB; Leibniz bialgebra. (LeibnizBialgebra)
    param: Q; Quadratic anti-commutative anti-associative algebra.
     (QuadraticAA)
    :return: Certified anti-Leibniz bialgebra. (Bialgebra)
    """
    if LB.field is not Q.field:
        raise FieldMismatch("both factors must live over one field")
    require_leibniz_bialgebra(LB, "induced_bialgebra")
    algebra = tensor_algebra(LB.alg, Q.alg)
    coproduct = quadratic_dual_coalgebra(Q)
    coalgebra = Coalgebra(interleave(LB.coa.cc, coproduct.cc), Q.field, algebra.labels)
    B = Bialgebra(algebra, coalgebra)
    report = check_bialgebra(B)
    if not report.holds:
        failed = report.first_failure
        logger.error(f"induced_bialgebra: {failed.name} fails at {failed.witness}")
        raise PreconditionViolated(
            f"the factors do not induce an anti-Leibniz bialgebra ({failed.name})"
        )
    return B

