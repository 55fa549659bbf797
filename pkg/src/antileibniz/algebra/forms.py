import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Union

import numpy as np

from ..core.field import Field, get_field
from ..core.linalg import kernel
from ..errors import DimensionMismatch
from .algebra import Algebra, freeze

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormProperties:
    nondegenerate: bool
    symmetric: bool
    skew_symmetric: bool
    invariant_skew_style: bool
    invariant_sym_style: bool

    def to_dict(self) -> Dict[str, bool]:
        return asdict(self)


class BilinearForm:
    def __init__(
            self,
            gram: Any,
            field: Union[Field, str] = "Q"
    ):
        """
        Bilinear form with gram[i, j] = B(e_i, e_j).

        param: gram; Square Gram matrix. (array-like)
        param: field; Scalar field. Default is "Q". (Field or str)
        """
        self.field = get_field(field)
        gram = self.field.array(gram)
        if gram.ndim != 2 or gram.shape[0] != gram.shape[1]:
            raise DimensionMismatch(f"Gram matrix must be square, got {gram.shape}")
        self.gram = freeze(gram)
        self.dim = gram.shape[0]
        self.flags: Dict[str, bool] = {}

    def evaluate(
            self,
            x: Any,
            y: Any
    ) -> Any:
        return self.field.array(x) @ self.gram @ self.field.array(y)

    def scaled(self, c: Any) -> "BilinearForm":
        return BilinearForm(self.gram * self.field.element(c), self.field)

    def __neg__(self) -> "BilinearForm":
        return BilinearForm(-self.gram, self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return (other.field is self.field and other.dim == self.dim
                and self.field.is_zero(self.gram - other.gram))

    __hash__ = None

    def __repr__(self) -> str:
        return f"BilinearForm({self.field.format_array(self.gram)})"


def skew_invariance_defect(
        A: Algebra,
        gram: np.ndarray
) -> np.ndarray:
    """B(a1a2, a3) - B(a1, a2a3 - a3a2) indexed [i, j, k]."""
    n = A.dim
    lhs = (A.sc.reshape(n * n, n) @ gram).reshape(n, n, n)
    commutator = (A.sc - A.sc.transpose(1, 0, 2)).reshape(n * n, n)
    rhs = (gram @ commutator.T).reshape(n, n, n)
    return lhs - rhs


def sym_invariance_defect(
        A: Algebra,
        gram: np.ndarray
) -> np.ndarray:
    """w(b1b2, b3) - w(b1, b2b3) indexed [i, j, k]."""
    n = A.dim
    lhs = (A.sc.reshape(n * n, n) @ gram).reshape(n, n, n)
    rhs = (gram @ A.sc.reshape(n * n, n).T).reshape(n, n, n)
    return lhs - rhs


def form_properties(
        A: Algebra,
        B: BilinearForm,
        cache: Optional[bool] = True
) -> FormProperties:
    """
    Derives the flags of a bilinear form relative to an algebra.

    param: A; Ambient algebra. (Algebra)
    param: B; The form. (BilinearForm)
    param: cache; Store the flags on the form. Default is True. (bool)
    :return: The five flags. (FormProperties)
    """
    if B.dim != A.dim:
        logger.error(f"Form of dimension {B.dim} on an algebra of dimension {A.dim}")
        raise DimensionMismatch(f"form dimension {B.dim} != algebra dimension {A.dim}")
    field = A.field
    gram = field.array(B.gram)
    props = FormProperties(
        nondegenerate=not kernel(field, gram),
        symmetric=field.is_zero(gram - gram.T),
        skew_symmetric=field.is_zero(gram + gram.T),
        invariant_skew_style=field.is_zero(skew_invariance_defect(A, gram)),
        invariant_sym_style=field.is_zero(sym_invariance_defect(A, gram)),
    )
    if cache:
        B.flags.update(props.to_dict())
    return props
