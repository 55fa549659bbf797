import hashlib
import logging
from typing import Any, Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.field import Field, get_field
from ..core.linalg import solve_invert
from ..core.tensors import act_on_axis
from ..errors import DimensionMismatch, FieldMismatch

logger = logging.getLogger(__name__)

ProductTable = Mapping[Tuple[int, int], Union[Sequence[Any], Mapping[int, Any]]]


def freeze(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def digest(field: Field, *arrays: np.ndarray) -> str:
    """md5 of the serialized entries, used to key certificates."""
    hash_md5 = hashlib.md5()
    hash_md5.update(field.name.encode())
    for array in arrays:
        hash_md5.update(str(array.shape).encode())
        hash_md5.update("|".join(field.format(v) for v in array.reshape(-1)).encode())
    return hash_md5.hexdigest()


class Algebra:
    def __init__(
            self,
            sc: Any,
            field: Union[Field, str] = "Q",
            labels: Optional[Sequence[str]] = None
    ):
        """
        Finite-dimensional algebra given by structure constants.

        param: sc; Tensor with e_i e_j = sum_k sc[i, j, k] e_k. (array-like)
        param: field; Scalar field. Default is "Q". (Field or str)
        param: labels; Optional basis labels. (Sequence[str])
        """
        self.field = get_field(field)
        sc = self.field.array(sc)
        if sc.ndim != 3 or not (sc.shape[0] == sc.shape[1] == sc.shape[2]):
            logger.error(f"Structure constants have shape {sc.shape}")
            raise DimensionMismatch(
                f"structure constants must have shape (n, n, n), got {sc.shape}"
            )
        if sc.shape[0] < 1:
            raise DimensionMismatch("an algebra needs a positive dimension")
        self.sc = freeze(sc)
        self.dim = sc.shape[0]
        if labels is not None and len(labels) != self.dim:
            raise DimensionMismatch(f"{len(labels)} labels for dimension {self.dim}")
        self.labels = tuple(labels) if labels else tuple(
            f"e{i + 1}" for i in range(self.dim)
        )
        self._digest: Optional[str] = None
        self.certificates: Dict[str, str] = {}

    @classmethod
    def from_products(
            cls,
            dim: int,
            products: ProductTable,
            field: Union[Field, str] = "Q",
            labels: Optional[Sequence[str]] = None
    ) -> "Algebra":
        """
        Builds an algebra from a sparse table of 1-based products.

        param: dim; Dimension. (int)
        param: products; {(i, j): out} with out either a coordinate list or
         a {k: coefficient} mapping, all indices 1-based. (Mapping)
        param: field; Scalar field. (Field or str)
        :return: The algebra. (Algebra)
        """
        field = get_field(field)
        sc = field.zeros((dim, dim, dim))
        for (i, j), out in products.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise DimensionMismatch(f"product ({i}, {j}) outside dimension {dim}")
            sc[i - 1, j - 1] = _coordinates(field, dim, out)
        return cls(sc, field, labels)

    @classmethod
    def zero(
            cls,
            dim: int,
            field: Union[Field, str] = "Q"
    ) -> "Algebra":
        field = get_field(field)
        return cls(field.zeros((dim, dim, dim)), field)

    def digest(self) -> str:
        if self._digest is None:
            self._digest = digest(self.field, self.sc)
        return self._digest

    def certify(self, law: str) -> None:
        self.certificates[law] = self.digest()

    def is_certified(self, law: str) -> bool:
        return self.certificates.get(law) == self.digest()

    def basis(self, i: int) -> np.ndarray:
        """0-based basis vector."""
        vector = self.field.zeros(self.dim)
        vector[i] = self.field.one()
        return vector

    def vector(self, values: Any) -> np.ndarray:
        vector = self.field.array(values)
        if vector.shape != (self.dim,):
            raise DimensionMismatch(f"expected a vector of length {self.dim}")
        return vector

    def multiply(
            self,
            x: Any,
            y: Any
    ) -> np.ndarray:
        x, y = self.vector(x), self.vector(y)
        n = self.dim
        return y @ (x @ self.sc.reshape(n, n * n)).reshape(n, n)

    def left_mult(self, i: int) -> np.ndarray:
        """Matrix of l(e_i): column j holds e_i e_j."""
        return self.sc[i].T.copy()

    def right_mult(self, i: int) -> np.ndarray:
        """Matrix of r(e_i): column j holds e_j e_i."""
        return self.sc[:, i, :].T.copy()

    def left_op(self, a: Any) -> np.ndarray:
        """Matrix of l(a) for an arbitrary vector a."""
        a = self.vector(a)
        n = self.dim
        return (a @ self.sc.reshape(n, n * n)).reshape(n, n).T

    def right_op(self, a: Any) -> np.ndarray:
        a = self.vector(a)
        n = self.dim
        return (a @ self.sc.transpose(1, 0, 2).reshape(n, n * n)).reshape(n, n).T

    def left_stack(self) -> np.ndarray:
        """All l(e_i) stacked on axis 0."""
        return self.sc.transpose(0, 2, 1).copy()

    def right_stack(self) -> np.ndarray:
        return self.sc.transpose(1, 2, 0).copy()

    def opposite(self) -> "Algebra":
        return Algebra(self.sc.transpose(1, 0, 2).copy(), self.field, self.labels)

    def direct_sum(
            self,
            other: "Algebra"
    ) -> "Algebra":
        if other.field is not self.field:
            logger.error(f"Direct sum of {self.field} and {other.field} algebras")
            raise FieldMismatch(f"cannot add a {other.field} algebra to a {self.field} one")
        n, m = self.dim, other.dim
        sc = self.field.zeros((n + m, n + m, n + m))
        sc[:n, :n, :n] = self.sc
        sc[n:, n:, n:] = other.sc
        return Algebra(sc, self.field, self.labels + other.labels)

    def change_basis(
            self,
            matrix: Any
    ) -> "Algebra":
        """
        Rewrites the structure constants in the basis given by the columns of
         an invertible matrix.

        param: matrix; New basis vectors as columns. (array-like)
        :return: Isomorphic algebra in the new coordinates. (Algebra)
        """
        p = self.field.array(matrix)
        p_inv = solve_invert(self.field, p)
        sc = act_on_axis(act_on_axis(self.sc, p.T, 0), p.T, 1)
        return Algebra(act_on_axis(sc, p_inv, 2), self.field)

    def products(self) -> Iterator[Tuple[int, int, np.ndarray]]:
        """Yields (i, j, e_i e_j) for nonzero products, 0-based."""
        mask = self.field.nonzero_mask(self.sc).any(axis=2)
        for i, j in np.argwhere(mask):
            yield int(i), int(j), self.sc[i, j]

    def is_commutative(self) -> bool:
        return self.field.is_zero(self.sc - self.sc.transpose(1, 0, 2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.field is other.field
            and self.dim == other.dim
            and self.field.is_zero(self.sc - other.sc)
        )

    def __hash__(self) -> int:
        return hash(self.digest())

    def __repr__(self) -> str:
        rows = []
        for i, j, out in self.products():
            terms = " + ".join(
                f"{self.field.format(c)}*{self.labels[k]}"
                for k, c in enumerate(out) if c != 0
            )
            rows.append(f"{self.labels[i]}{self.labels[j]} = {terms}")
        table = "; ".join(rows) or "zero product"
        return f"Algebra(dim={self.dim}, field={self.field.name}: {table})"


def _coordinates(
        field: Field,
        dim: int,
        out: Union[Sequence[Any], Mapping[int, Any]]
) -> np.ndarray:
    if isinstance(out, Mapping):
        vector = field.zeros(dim)
        for k, c in out.items():
            if not 1 <= k <= dim:
                raise DimensionMismatch(f"basis index {k} outside dimension {dim}")
            vector[k - 1] = field.element(c)
        return vector
    vector = field.array(list(out))
    if vector.shape != (dim,):
        raise DimensionMismatch(f"expected {dim} coordinates, got {len(out)}")
    return vector
