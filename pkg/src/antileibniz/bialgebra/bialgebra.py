import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple, Union

import numpy as np

from ..algebra.algebra import Algebra
from ..algebra.checks import require_anti_leibniz
from ..algebra.maps import LinearMap, as_matrix, is_homomorphism
from ..errors import DimensionMismatch, FieldMismatch, PreconditionViolated
from ..pairs.matched import check_matched_pair, coregular_pair, standard_manin_triple
from ..report import Report
from .coalgebra import (
    Coalgebra,
    check_coalgebra,
    dual_algebra,
    dual_coalgebra,
)

logger = logging.getLogger(__name__)

BIALGEBRA = "anti-Leibniz bialgebra"


class Bialgebra:
    def __init__(
            self,
            alg: Algebra,
            coa: Coalgebra
    ):
        """
        param: alg; Algebra part. (Algebra)
        param: coa; Coalgebra on the same space. (Coalgebra)
        """
        if alg.field is not coa.field:
            logger.error(f"Bialgebra over {alg.field} and {coa.field}")
            raise FieldMismatch("algebra and coalgebra must share one field")
        if alg.dim != coa.dim:
            logger.error(f"Bialgebra of dimensions {alg.dim} and {coa.dim}")
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

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bialgebra):
            return NotImplemented
        return self.alg == other.alg and self.coa == other.coa

    def __hash__(self) -> int:
        return hash(self.digest())

    def __repr__(self) -> str:
        return f"Bialgebra({self.alg!r}, {self.coa!r})"


def compatibility_defects(
        A: Algebra,
        C: Coalgebra
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Residuals of the two compatibility conditions for every basis pair
     (a1, a2) = (e_s, e_t), each indexed [s, t, p, q].

    The first residual is computed from the operator form
    D(a1a2) + (id (x) r(a2) - r(a2) (x) id + l(a2) (x) id)(id - tau)D(a1)
    + (id (x) l(a1) + l(a1) (x) id)D(a2), the third from its expansion into
    nine separate terms; the two must coincide. The second residual is
    (r(a1) (x) id)D(a2) - tau((r(a2) (x) id)D(a1)).
    """
    field = A.field
    n = A.dim
    lefts, rights = A.left_stack(), A.right_stack()
    products = (A.sc.reshape(n * n, n) @ C.cc.reshape(n, n * n)).reshape(n, n, n, n)
    first, second, expanded = (field.zeros((n, n, n, n)) for _ in range(3))
    for s in range(n):
        d = C.cc[s]
        w = d - d.T
        for t in range(n):
            dt = C.cc[t]
            lt, rt, ls, rs = lefts[t], rights[t], lefts[s], rights[s]
            first[s, t] = (products[s, t] + w @ rt.T - rt @ w + lt @ w
                           + dt @ ls.T + ls @ dt)
            expanded[s, t] = (products[s, t] + d @ rt.T + dt @ ls.T + ls @ dt
                              - (rt @ d).T + lt @ d - (d @ lt.T).T
                              - rt @ d + (d @ rt.T).T)
            second[s, t] = rs @ dt - (rt @ d).T
    return first, second, expanded


def _pair_witness(field, defect: np.ndarray):
    mask = field.nonzero_mask(defect).reshape(defect.shape[0], defect.shape[1], -1)
    hits = np.argwhere(mask.any(axis=2))
    return tuple(int(x) + 1 for x in hits[0]) if hits.size else None


def check_bialgebra(
        B: Bialgebra,
        strict: bool = False
) -> Report:
    """
    Evaluates both compatibility conditions on every basis pair.

    The coalgebra is reported as a clause; with ``strict=True`` a failing
    coalgebra raises PreconditionViolated instead.

    param: B; Candidate bialgebra. (Bialgebra)
    param: strict; Raise on a failing coalgebra. Default is False. (bool)
    :return: Report; the witness of a failing condition is (s, t), 1-based.
     (Report)
    """
    require_anti_leibniz(B.alg, "check_bialgebra")
    report = Report(BIALGEBRA)
    with report.timed():
        coalgebra = check_coalgebra(B.coa)
        if strict and not coalgebra.holds:
            logger.error(f"check_bialgebra: coalgebra fails at {coalgebra.witness}")
            raise PreconditionViolated("the coalgebra is not anti-Leibniz")
        report.add("coalgebra", "anti-Leibniz co-identity", coalgebra.holds,
                   coalgebra.witness)
        first, second, expanded = compatibility_defects(B.alg, B.coa)
        report.add("left compatibility", "coproduct of a product",
                   B.field.is_zero(first), _pair_witness(B.field, first))
        report.add("right compatibility", "right-multiplication symmetry",
                   B.field.is_zero(second), _pair_witness(B.field, second))
        report.add("expanded form agreement", "coproduct of a product, expanded",
                   B.field.is_zero(first - expanded),
                   _pair_witness(B.field, first - expanded))
    if report.holds:
        B.certify(BIALGEBRA)
    return report


def require_bialgebra(
        B: Bialgebra,
        operation: str
) -> None:
    if B.is_certified(BIALGEBRA):
        return
    report = check_bialgebra(B)
    if not report.holds:
        failed = report.first_failure
        logger.error(f"{operation}: not a bialgebra ({failed.name} at {failed.witness})")
        raise PreconditionViolated(
            f"{operation} needs an anti-Leibniz bialgebra; {failed.name} fails at "
            f"{failed.witness}"
        )


def dual_bialgebra(B: Bialgebra) -> Bialgebra:
    """(A*, Delta*, dual of the multiplication)."""
    require_bialgebra(B, "dual_bialgebra")
    return Bialgebra(dual_algebra(B.coa), dual_coalgebra(B.alg))


def coproduct_intertwining_defect(
        f: Union[LinearMap, Any],
        C1: Coalgebra,
        C2: Coalgebra
) -> np.ndarray:
    """(f (x) f)Delta1(e_k) - Delta2(f e_k), indexed [k, p, q]."""
    matrix = as_matrix(f, C1.field)
    if matrix.shape != (C2.dim, C1.dim):
        raise DimensionMismatch(f"map shape {matrix.shape} does not match coalgebras")
    field = C1.field
    out = field.zeros((C1.dim, C2.dim, C2.dim))
    for k in range(C1.dim):
        out[k] = matrix @ C1.cc[k] @ matrix.T - C2.apply(matrix[:, k])
    return out


def is_bialgebra_homomorphism(
        f: Union[LinearMap, Any],
        B1: Bialgebra,
        B2: Bialgebra
) -> bool:
    """f is multiplicative and (f (x) f)Delta1 = Delta2 f."""
    return (is_homomorphism(f, B1.alg, B2.alg)
            and B1.field.is_zero(coproduct_intertwining_defect(f, B1.coa, B2.coa)))


@dataclass
class CrosscheckResult:
    bialgebra: bool
    matched_pair: bool
    manin: bool
    reports: Dict[str, Report] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.bialgebra == self.matched_pair == self.manin

    def as_tuple(self) -> Tuple[bool, bool, bool]:
        return self.bialgebra, self.matched_pair, self.manin


def equivalence_crosscheck(
        A: Algebra,
        C: Coalgebra,
        workers: int = 3
) -> CrosscheckResult:
    """
    Decides the bialgebra, matched-pair and Manin-triple conditions for (A, C)
     independently of each other.

    param: A; Anti-Leibniz algebra. (Algebra)
    param: C; Coalgebra on the same space. (Coalgebra)
    param: workers; Threads used for the three branches. Default is 3. (int)
    :return: The three verdicts and their reports. (CrosscheckResult)
    """
    require_anti_leibniz(A, "equivalence_crosscheck")
    branches = {
        "bialgebra": lambda: check_bialgebra(Bialgebra(A, C)),
        "matched_pair": lambda: check_matched_pair(coregular_pair(A, C)),
        "manin": lambda: standard_manin_triple(A, C).report,
    }
    reports: Dict[str, Report] = {}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(task): name for name, task in branches.items()}
        for future in as_completed(futures):
            name = futures[future]
            try:
                reports[name] = future.result()
            except Exception as e:
                logger.error(f"Crosscheck branch '{name}' failed: {e}")
                raise
    result = CrosscheckResult(
        reports["bialgebra"].holds,
        reports["matched_pair"].holds,
        reports["manin"].holds,
        reports,
    )
    if not result.agree:
        logger.warning(f"Crosscheck branches disagree: {result.as_tuple()}")
    return result
