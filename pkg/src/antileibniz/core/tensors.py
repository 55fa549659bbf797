"""
Index gymnastics on dense coefficient tensors.

A 2-tensor r = sum r[i, j] e_i (x) e_j is stored as its coefficient matrix, so
(M (x) N) r is M @ r @ N.T. Higher tensors act leg by leg through
``act_on_axis``. None of these helpers assumes a particular field.
"""
from typing import Optional, Tuple

import numpy as np


def act_on_axis(
        tensor: np.ndarray,
        matrix: np.ndarray,
        axis: int
) -> np.ndarray:
    """
    Applies a linear map to one tensor leg.

    param: tensor; Coefficient tensor. (np.ndarray)
    param: matrix; Map given on column vectors, shape (out, in). (np.ndarray)
    param: axis; Leg to act on. (int)
    :return: Tensor with leg ``axis`` replaced by matrix @ leg. (np.ndarray)
    """
    moved = np.moveaxis(tensor, axis, 0)
    shape = moved.shape
    flat = moved.reshape(shape[0], -1)
    out = (matrix @ flat).reshape((matrix.shape[0],) + shape[1:])
    return np.moveaxis(out, 0, axis)


def tau(r: np.ndarray) -> np.ndarray:
    """The flip a (x) b -> b (x) a."""
    return r.T.copy()


def tau12(t: np.ndarray) -> np.ndarray:
    """The flip on the first two legs of a 3-tensor."""
    return t.transpose(1, 0, 2).copy()


def tau13(t: np.ndarray) -> np.ndarray:
    """The flip of the outer legs of a 3-tensor."""
    return t.transpose(2, 1, 0).copy()


def first_nonzero(
        values: np.ndarray,
        mask: Optional[np.ndarray] = None
) -> Optional[Tuple[int, ...]]:
    """Index of the first nonzero entry in row-major order, or None."""
    if mask is None:
        mask = np.asarray(np.asarray(values) != 0, dtype=bool)
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(i) for i in hits[0])


def one_based(index: Optional[Tuple[int, ...]]) -> Optional[Tuple[int, ...]]:
    if index is None:
        return None
    return tuple(i + 1 for i in index)


def outer(
        left: np.ndarray,
        right: np.ndarray
) -> np.ndarray:
    """Outer product of two vectors as a coefficient matrix."""
    return left.reshape(-1, 1) @ right.reshape(1, -1)


def interleave(
        left: np.ndarray,
        right: np.ndarray
) -> np.ndarray:
    """
    Tensor product of two 3-tensors on the product basis, legs interleaved.

    Position (i, j) of the product basis is i * right.shape[0] + j, so
    out[(a, c), (p, u), (q, v)] = left[a, p, q] * right[c, u, v].
    """
    n, m = left.shape[0], right.shape[0]
    flat = left.reshape(-1, 1) @ right.reshape(1, -1)
    out = flat.reshape(n, n, n, m, m, m).transpose(0, 3, 1, 4, 2, 5)
    return out.reshape(n * m, n * m, n * m)
