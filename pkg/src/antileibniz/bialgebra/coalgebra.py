import logging
from typing import Any, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..algebra.algebra import Algebra, digest, freeze
from ..core.field import Field, get_field
from ..core.tensors import first_nonzero, one_based
from ..errors import DimensionMismatch, PreconditionViolated
from ..report import Report

logger = logging.getLogger(__name__)

ANTI_LEIBNIZ_COALGEBRA = "anti-Leibniz coalgebra"


class Coalgebra:
    def __init__(
            self,
            cc: Any,
            field: Union[Field, str] = "Q",
            labels: Optional[Sequence[str]] = None
    ):
        """
        Finite-dimensional coalgebra given by costructure constants.

        param: cc; Tensor with Delta(e_k) = sum_{i,j} cc[k, i, j] e_i (x) e_j.
         (array-like)
        param: field; Scalar field. Default is "Q". (Field or str)
        param: labels; Optional basis labels. (Sequence[str])
        """
        self.field = get_field(field)
        cc = self.field.array(cc)
        if cc.ndim != 3 or not (cc.shape[0] == cc.shape[1] == cc.shape[2]):
            logger.error(f"Costructure constants have shape {cc.shape}")
            raise DimensionMismatch(
                f"costructure constants must have shape (n, n, n), got {cc.shape}"
            )
        self.cc = freeze(cc)
        self.dim = cc.shape[0]
        self.labels = tuple(labels) if labels else tuple(
            f"e{i + 1}" for i in range(self.dim)
        )
        self.certificates = {}

    @classmethod
    def from_coproducts(
            cls,
            dim: int,
            coproducts: Mapping[int, Mapping[Tuple[int, int], Any]],
            field: Union[Field, str] = "Q",
            labels: Optional[Sequence[str]] = None
    ) -> "Coalgebra":
        """
        param: coproducts; {k: {(i, j): c}} with 1-based indices. (Mapping)
        """
        field = get_field(field)
        cc = field.zeros((dim, dim, dim))
        for k, terms in coproducts.items():
            for (i, j), c in terms.items():
                if not all(1 <= x <= dim for x in (k, i, j)):
                    raise DimensionMismatch(
                        f"coproduct term ({k}; {i}, {j}) outside dimension {dim}"
                    )
                cc[k - 1, i - 1, j - 1] = cc[k - 1, i - 1, j - 1] + field.element(c)
        return cls(cc, field, labels)

    @classmethod
    def zero(
            cls,
            dim: int,
            field: Union[Field, str] = "Q"
    ) -> "Coalgebra":
        field = get_field(field)
        return cls(field.zeros((dim, dim, dim)), field)

    def digest(self) -> str:
        return digest(self.field, self.cc)

    def certify(self, law: str) -> None:
        self.certificates[law] = self.digest()

    def is_certified(self, law: str) -> bool:
        return self.certificates.get(law) == self.digest()

    def coproduct(self, k: int) -> np.ndarray:
        """Delta(e_k) as a coefficient matrix, 0-based k."""
        return self.cc[k].copy()

    def apply(self, vector: Any) -> np.ndarray:
        """Delta(v) as a coefficient matrix."""
        vector = self.field.array(vector)
        n = self.dim
        return (vector @ self.cc.reshape(n, n * n)).reshape(n, n)

    def __add__(self, other: "Coalgebra") -> "Coalgebra":
        return Coalgebra(self.cc + other.cc, self.field, self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coalgebra):
            return NotImplemented
        return (other.field is self.field and other.dim == self.dim
                and self.field.is_zero(self.cc - other.cc))

    def __hash__(self) -> int:
        return hash(self.digest())

    def __repr__(self) -> str:
        rows = []
        for k in range(self.dim):
            terms = [
                f"{self.field.format(self.cc[k, i, j])}*{self.labels[i]}(x){self.labels[j]}"
                for i, j in np.argwhere(self.field.nonzero_mask(self.cc[k]))
            ]
            if terms:
                rows.append(f"D({self.labels[k]}) = {' + '.join(terms)}")
        return f"Coalgebra(dim={self.dim}, field={self.field.name}: " \
               f"{'; '.join(rows) or 'zero coproduct'})"


def iterated_coproducts(C: Coalgebra) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns ((D (x) id)D, (id (x) D)D) for every basis vector, indexed [k, p, q, s].
    """
    n = C.dim
    left = (C.cc.transpose(0, 2, 1).reshape(n * n, n) @ C.cc.reshape(n, n * n))
    left = left.reshape(n, n, n, n).transpose(0, 2, 3, 1)
    right = (C.cc.reshape(n * n, n) @ C.cc.reshape(n, n * n)).reshape(n, n, n, n)
    return left, right


def coalgebra_defect(C: Coalgebra) -> np.ndarray:
    """(D (x) id)D + (id (x) D)D + (tau (x) id)(id (x) D)D per basis vector."""
    left, right = iterated_coproducts(C)
    return left + right + right.transpose(0, 2, 1, 3)


def check_coalgebra(C: Coalgebra) -> Report:
    """
    Evaluates the anti-Leibniz coassociator on each basis vector.

    param: C; Coalgebra to check. (Coalgebra)
    :return: Report whose witness is the first failing basis index, 1-based.
     (Report)
    """
    report = Report(ANTI_LEIBNIZ_COALGEBRA)
    with report.timed():
        defect = coalgebra_defect(C)
        mask = C.field.nonzero_mask(defect).reshape(C.dim, -1).any(axis=1)
        report.add(ANTI_LEIBNIZ_COALGEBRA, "anti-Leibniz co-identity",
                   not mask.any(), one_based(first_nonzero(None, mask)))
    if report.holds:
        C.certify(ANTI_LEIBNIZ_COALGEBRA)
    return report


def check_anticocomm_anticoassoc(C: Coalgebra) -> Report:
    """tau Delta = -Delta and (id (x) Delta)Delta = -(Delta (x) id)Delta."""
    report = Report("anti-cocommutative anti-coassociative coalgebra")
    with report.timed():
        flip = C.cc + C.cc.transpose(0, 2, 1)
        mask = C.field.nonzero_mask(flip).reshape(C.dim, -1).any(axis=1)
        report.add("anti-cocommutative", "anti-cocommutativity", not mask.any(),
                   one_based(first_nonzero(None, mask)))
        left, right = iterated_coproducts(C)
        mask = C.field.nonzero_mask(left + right).reshape(C.dim, -1).any(axis=1)
        report.add("anti-coassociative", "anti-coassociativity", not mask.any(),
                   one_based(first_nonzero(None, mask)))
    return report


def dual_algebra(C: Coalgebra) -> Algebra:
    """Algebra on the dual space: f_i f_j = sum_k cc[k, i, j] f_k."""
    return Algebra(C.cc.transpose(1, 2, 0).copy(), C.field,
                   [f"f{i + 1}" for i in range(C.dim)])


def dual_coalgebra(A: Algebra) -> Coalgebra:
    """Coalgebra on the dual space, the transpose of the multiplication."""
    return Coalgebra(A.sc.transpose(2, 0, 1).copy(), A.field,
                     [f"f{i + 1}" for i in range(A.dim)])
