import logging
from typing import Any, Union

import numpy as np

from ..core.field import Field, get_field
from ..core.linalg import is_invertible, solve_invert
from ..core.tensors import act_on_axis
from ..errors import DimensionMismatch
from .algebra import Algebra, freeze

logger = logging.getLogger(__name__)


class LinearMap:
    """Linear map stored as a (target_dim x source_dim) matrix on coordinates."""

    def __init__(
            self,
            matrix: Any,
            field: Union[Field, str] = "Q"
    ):
        self.field = get_field(field)
        matrix = self.field.array(matrix)
        if matrix.ndim != 2:
            raise DimensionMismatch(f"a linear map needs a matrix, got {matrix.shape}")
        self.matrix = freeze(matrix)
        self.target_dim, self.source_dim = matrix.shape

    def __call__(self, vector: Any) -> np.ndarray:
        vector = self.field.array(vector)
        if vector.shape[0] != self.source_dim:
            raise DimensionMismatch(
                f"vector of length {vector.shape[0]} for a map from dimension "
                f"{self.source_dim}"
            )
        return self.matrix @ vector

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.target_dim != self.source_dim:
            raise DimensionMismatch("maps cannot be composed")
        return LinearMap(self.matrix @ other.matrix, self.field)

    def transpose(self) -> "LinearMap":
        return LinearMap(self.matrix.T.copy(), self.field)

    def inverse(self) -> "LinearMap":
        return LinearMap(solve_invert(self.field, self.matrix), self.field)

    def is_invertible(self) -> bool:
        return is_invertible(self.field, self.matrix)

    def is_zero(self) -> bool:
        return self.field.is_zero(self.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (other.field is self.field
                and other.matrix.shape == self.matrix.shape
                and self.field.is_zero(self.matrix - other.matrix))

    __hash__ = None

    def __repr__(self) -> str:
        return f"LinearMap({self.field.format_array(self.matrix)})"


def as_matrix(
        f: Union[LinearMap, Any],
        field: Field
) -> np.ndarray:
    if isinstance(f, LinearMap):
        return f.matrix
    return field.array(f)


def homomorphism_defect(
        f: Union[LinearMap, Any],
        A: Algebra,
        B: Algebra
) -> np.ndarray:
    """f(e_i e_j) - f(e_i) f(e_j), indexed [i, j, out]."""
    matrix = as_matrix(f, A.field)
    if matrix.shape != (B.dim, A.dim):
        logger.error(f"Map of shape {matrix.shape} between dimensions {A.dim}, {B.dim}")
        raise DimensionMismatch(
            f"map shape {matrix.shape} does not match ({B.dim}, {A.dim})"
        )
    image = act_on_axis(A.sc, matrix, 2)
    products = act_on_axis(act_on_axis(B.sc, matrix.T, 0), matrix.T, 1)
    return image - products


def is_homomorphism(
        f: Union[LinearMap, Any],
        A: Algebra,
        B: Algebra
) -> bool:
    """
    True iff f(e_i e_j) = f(e_i) f(e_j) for all basis pairs.

    param: f; Map from A to B. (LinearMap or matrix)
    param: A; Source algebra. (Algebra)
    param: B; Target algebra. (Algebra)
    :return: Whether f is multiplicative. (bool)
    """
    return A.field.is_zero(homomorphism_defect(f, A, B))
