"""Dense exact linear algebra over a ``Field``."""
import logging
import math
from fractions import Fraction
from typing import List

import numpy as np

from ..errors import DimensionMismatch, NotInvertible
from .field import Field, RationalField

logger = logging.getLogger(__name__)


def _as_matrix(
        field: Field,
        matrix: np.ndarray
) -> np.ndarray:
    matrix = field.array(matrix)
    if matrix.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {matrix.shape}")
    return matrix


def rank(
        field: Field,
        matrix: np.ndarray
) -> int:
    matrix = _as_matrix(field, matrix)
    if matrix.size == 0:
        return 0
    return len(field.rref(matrix)[1])


def kernel(
        field: Field,
        matrix: np.ndarray
) -> List[np.ndarray]:
    """
    Computes an exact basis of the null space.

    One basis vector is produced per free column of the reduced row echelon
    form, with a 1 in that column.

    param: field; Scalar field of the entries. (Field)
    param: matrix; rows x cols matrix. (np.ndarray)
    :return: Basis vectors of length cols; empty iff full column rank. (list)
    """
    matrix = _as_matrix(field, matrix)
    cols = matrix.shape[1]
    if matrix.shape[0] == 0:
        return [field.eye(cols)[i] for i in range(cols)]
    reduced, pivots = field.rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vector = field.zeros(cols)
        vector[f] = field.one()
        for row, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row, f]
        basis.append(vector)
    return basis


def _integer_rows(matrix: np.ndarray) -> List[List[int]]:
    """[D M | D] with D the diagonal of per-row denominator lcms."""
    n = matrix.shape[0]
    rows = []
    for i in range(n):
        scale = math.lcm(*(Fraction(x).denominator for x in matrix[i]))
        row = [int(Fraction(x) * scale) for x in matrix[i]]
        row.extend(scale if j == i else 0 for j in range(n))
        rows.append(row)
    return rows


def _bareiss_invert(
        field: Field,
        matrix: np.ndarray
) -> np.ndarray:
    n = matrix.shape[0]
    a = _integer_rows(matrix)
    width = 2 * n
    previous = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            singular_rank = rank(field, matrix)
            logger.debug(f"Singular {n}x{n} matrix of rank {singular_rank}")
            raise NotInvertible(rank=singular_rank)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
        for i in range(k + 1, n):
            for j in range(k + 1, width):
                # exact: every entry is a minor of the scaled matrix
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
            a[i][k] = 0
        previous = a[k][k]
    inverse = field.zeros((n, n))
    for col in range(n):
        for i in reversed(range(n)):
            total = a[i][n + col] - sum(
                (a[i][j] * inverse[j, col] for j in range(i + 1, n)), Fraction(0))
            inverse[i, col] = Fraction(total) / a[i][i]
    return inverse


def solve_invert(
        field: Field,
        matrix: np.ndarray
) -> np.ndarray:
    """
    Inverts a square matrix exactly.

    Over Q the rows are cleared of denominators and [D M | D] is reduced by
    fraction-free (Bareiss) elimination in Python integers, so no
    intermediate fractions are formed; only back substitution divides. Over
    GF(p) [M | I] goes through Gauss-Jordan elimination of the field.

    param: field; Scalar field of the entries. (Field)
    param: matrix; Square matrix. (np.ndarray)
    :return: The exact inverse. (np.ndarray)
    """
    matrix = _as_matrix(field, matrix)
    n, m = matrix.shape
    if n != m:
        raise DimensionMismatch(f"cannot invert a {n}x{m} matrix")
    if n == 0:
        return field.zeros((0, 0))
    if isinstance(field, RationalField):
        return _bareiss_invert(field, matrix)
    augmented = field.zeros((n, 2 * n))
    augmented[:, :n] = matrix
    augmented[:, n:] = field.eye(n)
    reduced, pivots = field.rref(augmented)
    left_pivots = [p for p in pivots if p < n]
    if len(left_pivots) < n:
        logger.debug(f"Singular {n}x{n} matrix of rank {len(left_pivots)}")
        raise NotInvertible(rank=len(left_pivots))
    return reduced[:, n:].copy()


def is_invertible(
        field: Field,
        matrix: np.ndarray
) -> bool:
    matrix = _as_matrix(field, matrix)
    return matrix.shape[0] == matrix.shape[1] and rank(field, matrix) == matrix.shape[0]


def solve(
        field: Field,
        matrix: np.ndarray,
        rhs: np.ndarray
) -> np.ndarray:
    """Solves M x = b for invertible M."""
    return solve_invert(field, matrix) @ field.array(rhs)
