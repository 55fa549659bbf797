"""
Brute-force searches over GF(p): anti-Leibniz structures of small dimension,
their isomorphism classes, and symmetric solutions of the Yang-Baxter
equation of a fixed algebra.

Candidates are numbered so that their numeric order is the lexicographic
order of the free structure constants read in row-major order. Chunks of
candidates are screened with integer arithmetic mod p, survivors are
rebuilt as certified ``Algebra`` objects, and every survivor is checked a
second time by a plain-loop verifier sharing no code with the first pass.

Statements about characteristic zero do not transfer to GF(p); summaries of
these searches are labelled accordingly.
"""
import itertools
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from ..algebra.algebra import Algebra
from ..algebra.checks import check_anti_leibniz, require_anti_leibniz
from ..bialgebra.bialgebra import Bialgebra, check_bialgebra
from ..core.field import Field, PrimeField, get_field
from ..errors import BadParameter, BudgetExceeded
from ..report import Report
from ..yangbaxter.rmatrix import Tensor2, delta_r, ybe_bracket

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 7
BUDGET_ENV = "ALEIB_BUDGET"
EXTRAPOLATION_NOTE = ("finite-field result: a consistency check of statements "
                      "proved in characteristic zero, not a proof or refutation")


def default_budget() -> int:
    """The candidate budget, from ALEIB_BUDGET when set."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as e:
        logger.error(f"{BUDGET_ENV}={raw!r} is not an integer")
        raise BadParameter(f"{BUDGET_ENV} must be a positive integer, got {raw!r}") from e
    if value < 1:
        raise BadParameter(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def _prime_field(field: Union[Field, str, int]) -> PrimeField:
    field = get_field(field)
    if not isinstance(field, PrimeField):
        logger.error(f"Search requested over {field}")
        raise BadParameter(f"searches run over GF(p), not {field}")
    return field


def _as_ints(values: np.ndarray) -> np.ndarray:
    return np.asarray(values.view(np.ndarray), dtype=np.int64)


def independent_anti_leibniz(
        sc: Sequence,
        p: int
) -> bool:
    """
    Second-pass verifier on nested lists of residues, written with explicit
     loops and its own loop order.
    """
    n = len(sc)
    for out in range(n):
        for c in range(n):
            for b in range(n):
                for a in range(n):
                    total = 0
                    for m in range(n):
                        total += (sc[b][c][m] * sc[a][m][out]
                                  + sc[a][b][m] * sc[m][c][out]
                                  + sc[a][c][m] * sc[b][m][out])
                    if total % p:
                        return False
    return True


@dataclass
class SearchResult:
    field: PrimeField
    dim: int
    candidates: int
    algebras: List[Algebra]
    indices: List[int]
    second_pass: bool
    elapsed: float = 0.0
    notes: List[str] = field(default_factory=list)

    def summary(self) -> pd.DataFrame:
        rows = [
            {
                "index": index,
                "commutative": A.is_commutative(),
                "products": len(list(A.products())),
                "algebra": repr(A),
            }
            for index, A in zip(self.indices, self.algebras)
        ]
        return pd.DataFrame(rows, columns=["index", "commutative", "products", "algebra"])

    def report(self) -> Report:
        report = Report(f"anti-Leibniz structures of dimension {self.dim} over "
                        f"{self.field.name}", elapsed=self.elapsed)
        report.add("second-pass agreement", "anti-Leibniz identity, independent loop check",
                   self.second_pass)
        report.notes.append(f"{len(self.algebras)} of {self.candidates} candidates survive")
        report.notes.extend(self.notes)
        return report


class StructureSearcher:
    def __init__(
            self,
            field: Union[Field, str, int],
            dim: int,
            budget: Optional[int] = None,
            workers: int = 4,
            mask: Optional[Any] = None,
            chunk_size: int = 4096
    ):
        """
        param: field; A prime field, e.g. "GF(2)". (Field, str or int)
        param: dim; Dimension of the algebras. (int)
        param: budget; Largest admissible candidate count. Default is
         ALEIB_BUDGET or 10**7. (int)
        param: workers; Threads screening chunks. Default is 4. (int)
        param: mask; Boolean (dim, dim, dim) array of structure constants
         allowed to be nonzero. Default is all. (array-like)
        param: chunk_size; Candidates per chunk. Default is 4096. (int)
        """
        self.field = _prime_field(field)
        self.p = self.field.p
        if dim < 1:
            raise BadParameter(f"dimension must be positive, got {dim}")
        self.dim = int(dim)
        self.budget = default_budget() if budget is None else int(budget)
        if self.budget < 1:
            raise BadParameter(f"budget must be positive, got {self.budget}")
        self.workers = max(1, int(workers))
        self.chunk_size = max(1, int(chunk_size))
        shape = (self.dim,) * 3
        if mask is None:
            self.mask = np.ones(shape, dtype=bool)
        else:
            self.mask = np.asarray(mask, dtype=bool)
            if self.mask.shape != shape:
                raise BadParameter(f"mask must have shape {shape}, got {self.mask.shape}")
        self.free = np.flatnonzero(self.mask.reshape(-1))
        self.logger = logging.getLogger(__name__)

    @property
    def candidate_count(self) -> int:
        return self.p ** len(self.free)

    def _check_budget(self, count: int, what: str) -> None:
        if count > self.budget:
            self.logger.error(f"{what}: {count} candidates exceed the budget {self.budget}")
            raise BudgetExceeded(
                f"{what} needs {count} candidates, budget is {self.budget}; "
                f"restrict the mask or raise the budget"
            )

    def decode(self, indices: np.ndarray) -> np.ndarray:
        """Structure constants of the numbered candidates, shape (len, n, n, n)."""
        n, free = self.dim, len(self.free)
        powers = self.p ** np.arange(free - 1, -1, -1, dtype=np.int64)
        digits = (indices[:, None] // powers[None, :]) % self.p
        flat = np.zeros((len(indices), n ** 3), dtype=np.int64)
        flat[:, self.free] = digits
        return flat.reshape(len(indices), n, n, n)

    def _screen(self, start: int, stop: int) -> List[Tuple[int, np.ndarray]]:
        indices = np.arange(start, stop, dtype=np.int64)
        sc = self.decode(indices)
        d1 = np.einsum("bjkm,bimo->bijko", sc, sc)
        d2 = np.einsum("bijm,bmko->bijko", sc, sc)
        defect = (d1 + d2 + d1.transpose(0, 2, 1, 3, 4)) % self.p
        alive = ~defect.reshape(len(indices), -1).any(axis=1)
        return [(int(indices[b]), sc[b]) for b in np.flatnonzero(alive)]

    def search(self) -> SearchResult:
        """
        Enumerates every candidate in parallel chunks and verifies the survivors
         twice.

        :return: Survivors in lexicographic order with the verifier verdict.
         (SearchResult)
        """
        total = self.candidate_count
        self._check_budget(total, "enumerate_structures")
        started = time.perf_counter()
        bounds = [(start, min(start + self.chunk_size, total))
                  for start in range(0, total, self.chunk_size)]
        found: List[Tuple[int, np.ndarray]] = []
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures = {executor.submit(self._screen, lo, hi): (lo, hi) for lo, hi in bounds}
            for done, future in enumerate(as_completed(futures), start=1):
                found.extend(future.result())
                if done % 64 == 0 or done == len(futures):
                    self.logger.info(f"Screened {done}/{len(futures)} chunks, "
                                     f"{len(found)} survivors so far")
        found.sort(key=lambda item: item[0])

        algebras, second_pass = [], True
        for index, sc in found:
            A = Algebra(self.field.array(sc), self.field)
            if not check_anti_leibniz(A).holds:
                self.logger.error(f"Candidate {index} passed the screen but not the checker")
                second_pass = False
            if not independent_anti_leibniz(sc.tolist(), self.p):
                self.logger.error(f"Candidate {index} fails the second-pass verifier")
                second_pass = False
            algebras.append(A)
        result = SearchResult(self.field, self.dim, total, algebras,
                              [index for index, _ in found], second_pass,
                              time.perf_counter() - started, [EXTRAPOLATION_NOTE])
        self.logger.info(f"{len(algebras)} anti-Leibniz structures of dimension {self.dim} "
                         f"over {self.field.name} among {total} candidates")
        return result

    def enumerate_structures(self) -> List[Algebra]:
        return self.search().algebras

    def orbit_classify(self, algebras: Sequence[Algebra]) -> List[Algebra]:
        return orbit_classify(algebras, self.field, budget=self.budget)

    def find_symmetric_solutions(self, A: Algebra) -> List[Tensor2]:
        return find_symmetric_solutions(A, budget=self.budget)


def enumerate_structures(
        field: Union[Field, str, int],
        dim: int,
        mask: Optional[Any] = None,
        budget: Optional[int] = None,
        workers: int = 4
) -> List[Algebra]:
    """
    All anti-Leibniz structure constants over GF(p) in lexicographic order.

    param: field; Prime field. (Field, str or int)
    param: dim; Dimension. (int)
    param: mask; Entries allowed to be nonzero. (array-like)
    param: budget; Candidate budget. (int)
    param: workers; Screening threads. (int)
    :return: Certified algebras. (List[Algebra])
    """
    return StructureSearcher(field, dim, budget=budget, workers=workers,
                             mask=mask).enumerate_structures()


def general_linear_group(
        field: Union[Field, str, int],
        dim: int,
        budget: Optional[int] = None
) -> List[Tuple[np.ndarray, np.ndarray]]:
    """
    Every invertible matrix over GF(p) with its inverse, as integer arrays.

    param: field; Prime field. (Field, str or int)
    param: dim; Matrix size. (int)
    param: budget; Largest number of matrices to test. (int)
    :return: [(g, g^-1)] in lexicographic order of g. (list)
    """
    field = _prime_field(field)
    budget = default_budget() if budget is None else budget
    count = field.p ** (dim * dim)
    if count > budget:
        logger.error(f"GL({dim}, {field.p}) needs {count} matrices, budget {budget}")
        raise BudgetExceeded(f"enumerating GL({dim}, {field.p}) needs {count} candidates")
    group = []
    for entries in itertools.product(range(field.p), repeat=dim * dim):
        g = field.gf(np.array(entries, dtype=np.int64).reshape(dim, dim))
        if int(np.linalg.det(g)) == 0:
            continue
        group.append((_as_ints(g), _as_ints(np.linalg.inv(g))))
    return group


def act(
        g: np.ndarray,
        g_inverse: np.ndarray,
        sc: np.ndarray,
        p: int
) -> np.ndarray:
    """Structure constants in the basis given by the columns of g, mod p."""
    return np.einsum("ai,bj,abc,kc->ijk", g, g, sc, g_inverse) % p


def canonical_form(
        sc: np.ndarray,
        group: Sequence[Tuple[np.ndarray, np.ndarray]],
        p: int
) -> Tuple[int, ...]:
    """The lexicographically least flattening over the orbit of sc."""
    return min(tuple(act(g, gi, sc, p).reshape(-1).tolist()) for g, gi in group)


def orbit_classify(
        algebras: Sequence[Algebra],
        field: Union[Field, str, int],
        budget: Optional[int] = None
) -> List[Algebra]:
    """
    Partitions algebras into isomorphism classes under basis change and returns
     the lexicographically least member of each orbit, sorted.

    param: algebras; Algebras of one dimension over GF(p). (Sequence[Algebra])
    param: field; Prime field. (Field, str or int)
    param: budget; Candidate budget for the group. (int)
    :return: Orbit representatives. (List[Algebra])
    """
    field = _prime_field(field)
    if not algebras:
        return []
    dims = {A.dim for A in algebras}
    if len(dims) != 1:
        raise BadParameter(f"algebras of several dimensions: {sorted(dims)}")
    group = general_linear_group(field, dims.pop(), budget)
    shape = algebras[0].sc.shape
    keys = sorted({canonical_form(_as_ints(A.sc), group, field.p) for A in algebras})
    logger.info(f"{len(algebras)} algebras fall into {len(keys)} orbits")
    return [Algebra(field.array(np.array(key, dtype=np.int64).reshape(shape)), field)
            for key in keys]


def orbit_table(representatives: Sequence[Algebra]) -> pd.DataFrame:
    """One row per orbit representative with its commutativity flag."""
    rows = [
        {"orbit": i + 1, "commutative": A.is_commutative(), "algebra": repr(A)}
        for i, A in enumerate(representatives)
    ]
    return pd.DataFrame(rows, columns=["orbit", "commutative", "algebra"])


def orbit_report(
        representatives: Sequence[Algebra],
        field: Union[Field, str, int]
) -> Report:
    """
    Flags orbits with a noncommutative representative; over Q every
     two-dimensional anti-Leibniz algebra is commutative.
    """
    field = get_field(field)
    report = Report(f"orbit classification over {field.name}")
    noncommutative = [i + 1 for i, A in enumerate(representatives) if not A.is_commutative()]
    report.add("representatives commutative", "commutativity in small dimension",
               not noncommutative, noncommutative or None,
               note="" if not noncommutative else "differs from the characteristic-zero case")
    report.notes.append(f"{len(representatives)} orbits")
    report.notes.append(EXTRAPOLATION_NOTE)
    return report


def find_symmetric_solutions(
        A: Algebra,
        budget: Optional[int] = None
) -> List[Tensor2]:
    """
    Every symmetric r over GF(p) with vanishing Yang-Baxter bracket, in
     lexicographic order of the upper-triangular coefficients.

    param: A; Anti-Leibniz algebra over a prime field. (Algebra)
    param: budget; Candidate budget. (int)
    :return: The solutions. (List[Tensor2])
    """
    field = _prime_field(A.field)
    require_anti_leibniz(A, "find_symmetric_solutions")
    budget = default_budget() if budget is None else budget
    n = A.dim
    upper = [(i, j) for i in range(n) for j in range(i, n)]
    count = field.p ** len(upper)
    if count > budget:
        logger.error(f"find_symmetric_solutions: {count} candidates, budget {budget}")
        raise BudgetExceeded(f"symmetric search needs {count} candidates, budget is {budget}")
    solutions = []
    for entries in itertools.product(range(field.p), repeat=len(upper)):
        coeff = np.zeros((n, n), dtype=np.int64)
        for (i, j), c in zip(upper, entries):
            coeff[i, j] = coeff[j, i] = c
        r = Tensor2(field.array(coeff), field)
        if field.is_zero(ybe_bracket(A, r)):
            solutions.append(r)
    logger.info(f"{len(solutions)} symmetric solutions among {count} candidates")
    return solutions


def certify_symmetric_solutions(
        A: Algebra,
        solutions: Sequence[Tensor2]
) -> Report:
    """Each symmetric solution must give a bialgebra through its coboundary."""
    report = Report(f"triangular bialgebras over {A.field.name}")
    failures: Dict[int, str] = {}
    with report.timed():
        for index, r in enumerate(solutions, start=1):
            verdict = check_bialgebra(Bialgebra(A, delta_r(A, r)))
            if not verdict.holds:
                failures[index] = verdict.first_failure.name
        report.add("coboundary bialgebras", "symmetric solutions give bialgebras",
                   not failures, next(iter(failures), None))
    report.notes.append(f"{len(solutions)} solutions checked")
    report.notes.append(EXTRAPOLATION_NOTE)
    return report
