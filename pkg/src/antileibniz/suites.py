"""
Seeded random corpora and the equivalence suite run from the command line.

Random structure constants almost never satisfy the anti-Leibniz identity,
so random algebras are drawn from known anti-Leibniz algebras (padded with
an annihilating summand where needed) and moved by a random change of basis.
Coalgebras are either sparse random tensors or transported duals of random
anti-Leibniz algebras, so both verdicts occur often.
"""
import logging
from typing import Optional, Union

import numpy as np

from .algebra.algebra import Algebra
from .bialgebra.bialgebra import equivalence_crosscheck
from .bialgebra.coalgebra import Coalgebra, dual_coalgebra
from .core.field import Field, get_field
from .core.linalg import is_invertible
from .errors import BadParameter
from .report import Report

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240917


def _seeds(dim: int, field: Field):
    pool = [Algebra.zero(dim, field)]
    one = field.one()
    if dim >= 2:
        # e1 e1 = e2
        square = field.zeros((dim, dim, dim))
        square[0, 0, 1] = one
        pool.append(Algebra(square, field))
        # the two-dimensional algebra with parameters a = b = 1
        full = field.zeros((dim, dim, dim))
        full[0, 0, :2] = [-one, -one]
        full[0, 1, :2] = [one, one]
        full[1, 0, :2] = [one, one]
        full[1, 1, :2] = [-one, -one]
        pool.append(Algebra(full, field))
    if dim >= 3:
        noncommutative = field.zeros((dim, dim, dim))
        noncommutative[0, 0, 1] = one
        noncommutative[0, 2, 1] = one
        noncommutative[2, 0, 1] = -one
        pool.append(Algebra(noncommutative, field))
        both = field.zeros((dim, dim, dim))
        both[0, 0, 2] = one
        both[1, 1, 2] = one
        pool.append(Algebra(both, field))
    return pool


def random_invertible(
        field: Field,
        dim: int,
        rng: np.random.Generator,
        attempts: int = 64
) -> np.ndarray:
    """An invertible matrix with small integer entries."""
    for _ in range(attempts):
        matrix = field.random(rng, (dim, dim), values=(-1, 0, 1, 2))
        if is_invertible(field, matrix):
            return matrix
    return field.eye(dim)


def random_anti_leibniz(
        rng: np.random.Generator,
        dim: int,
        field: Union[Field, str] = "Q"
) -> Algebra:
    """
    A random anti-Leibniz algebra of dimension 1 to 3, isomorphic to one of
     a small pool of known ones.
    """
    field = get_field(field)
    if not 1 <= dim <= 3:
        raise BadParameter(f"random anti-Leibniz algebras have dimension 1..3, got {dim}")
    pool = _seeds(dim, field)
    seed = pool[int(rng.integers(len(pool)))]
    return seed.change_basis(random_invertible(field, dim, rng))


def random_coalgebra(
        rng: np.random.Generator,
        dim: int,
        field: Union[Field, str] = "Q",
        density: float = 0.1
) -> Coalgebra:
    """Half the time a sparse random tensor, otherwise a dual of an anti-Leibniz algebra."""
    field = get_field(field)
    if rng.random() < 0.5:
        weights = [density / 2, 1 - density, density / 2]
        return Coalgebra(field.random(rng, (dim, dim, dim), weights=weights), field)
    cc = dual_coalgebra(random_anti_leibniz(rng, dim, field)).cc
    return Coalgebra(cc.copy(), field)


def equivalence_suite(
        seed: int = DEFAULT_SEED,
        count: int = 200,
        field: Union[Field, str] = "Q",
        dims=(2, 3)
) -> Report:
    """
    Runs the three-way bialgebra / matched pair / Manin triple cross-check on
     seeded random pairs.

    param: seed; Generator seed. (int)
    param: count; Number of pairs. Default is 200. (int)
    param: field; Scalar field. Default is "Q". (Field or str)
    param: dims; Dimensions to draw from. (tuple)
    :return: Report with one agreement clause; the witness is the first
     disagreeing case number. (Report)
    """
    if count < 1:
        raise BadParameter(f"count must be positive, got {count}")
    field = get_field(field)
    rng = np.random.default_rng(seed)
    report = Report(f"bialgebra equivalence suite (seed {seed})")
    positives = 0
    disagreement: Optional[int] = None
    with report.timed():
        for case in range(1, count + 1):
            dim = int(rng.choice(dims))
            A = random_anti_leibniz(rng, dim, field)
            C = random_coalgebra(rng, dim, field)
            result = equivalence_crosscheck(A, C, workers=1)
            positives += result.bialgebra
            if not result.agree and disagreement is None:
                disagreement = case
                logger.warning(f"Case {case}: verdicts {result.as_tuple()} disagree")
            if case % 50 == 0:
                logger.info(f"Equivalence suite: {case}/{count} cases")
        report.add("three verdicts agree", "bialgebra, matched pair and Manin triple",
                   disagreement is None, disagreement)
    report.notes.append(f"{positives} of {count} cases are bialgebras")
    return report
