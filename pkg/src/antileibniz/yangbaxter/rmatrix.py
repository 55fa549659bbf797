"""
2-tensors r in A (x) A and the coboundary construction they induce.

A tensor r = sum X[i, j] e_i (x) e_j is handled through its coefficient
matrix X. The sharp map r#: A* -> A, r#(f_i) = sum_j X[i, j] e_j, therefore has
matrix X.T, and tau(r)# has matrix X.
"""
import logging
from dataclasses import dataclass
from typing import Any, Mapping, Tuple, Union

import numpy as np

from ..algebra.algebra import Algebra, freeze
from ..algebra.maps import LinearMap
from ..bialgebra.coalgebra import Coalgebra
from ..core.field import Field, get_field
from ..core.tensors import act_on_axis
from ..errors import DimensionMismatch

logger = logging.getLogger(__name__)


class Tensor2:
    def __init__(
            self,
            coeff: Any,
            field: Union[Field, str] = "Q"
    ):
        """
        param: coeff; Square coefficient matrix. (array-like)
        param: field; Scalar field. Default is "Q". (Field or str)
        """
        self.field = get_field(field)
        coeff = self.field.array(coeff)
        if coeff.ndim != 2 or coeff.shape[0] != coeff.shape[1]:
            raise DimensionMismatch(f"a 2-tensor needs a square matrix, got {coeff.shape}")
        self.coeff = freeze(coeff)
        self.dim = coeff.shape[0]

    @classmethod
    def from_terms(
            cls,
            dim: int,
            terms: Mapping[Tuple[int, int], Any],
            field: Union[Field, str] = "Q"
    ) -> "Tensor2":
        """param: terms; {(i, j): c} for c e_i (x) e_j, 1-based. (Mapping)"""
        field = get_field(field)
        coeff = field.zeros((dim, dim))
        for (i, j), c in terms.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise DimensionMismatch(f"term ({i}, {j}) outside dimension {dim}")
            coeff[i - 1, j - 1] = coeff[i - 1, j - 1] + field.element(c)
        return cls(coeff, field)

    @classmethod
    def zero(
            cls,
            dim: int,
            field: Union[Field, str] = "Q"
    ) -> "Tensor2":
        field = get_field(field)
        return cls(field.zeros((dim, dim)), field)

    def tau(self) -> "Tensor2":
        return Tensor2(self.coeff.T.copy(), self.field)

    def is_symmetric(self) -> bool:
        return self.field.is_zero(self.coeff - self.coeff.T)

    def skew_part(self) -> "Tensor2":
        """r - tau(r)."""
        return Tensor2(self.coeff - self.coeff.T, self.field)

    def scaled(self, c: Any) -> "Tensor2":
        return Tensor2(self.coeff * self.field.element(c), self.field)

    def __add__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.coeff + other.coeff, self.field)

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.coeff - other.coeff, self.field)

    def __neg__(self) -> "Tensor2":
        return Tensor2(-self.coeff, self.field)

    def is_zero(self) -> bool:
        return self.field.is_zero(self.coeff)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor2):
            return NotImplemented
        return (other.field is self.field and other.dim == self.dim
                and self.field.is_zero(self.coeff - other.coeff))

    __hash__ = None

    def __repr__(self) -> str:
        terms = [
            f"{self.field.format(self.coeff[i, j])}*e{i + 1}(x)e{j + 1}"
            for i, j in np.argwhere(self.field.nonzero_mask(self.coeff))
        ]
        return f"Tensor2({' + '.join(terms) or '0'})"


def coefficients(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> np.ndarray:
    coeff = r.coeff if isinstance(r, Tensor2) else A.field.array(r)
    if coeff.shape != (A.dim, A.dim):
        logger.error(f"2-tensor of shape {coeff.shape} on an algebra of dimension {A.dim}")
        raise DimensionMismatch(f"r must be {A.dim}x{A.dim}, got {coeff.shape}")
    return coeff


def tau(r: Tensor2) -> Tensor2:
    return r.tau()


def sharp(r: Tensor2) -> LinearMap:
    """r#: A* -> A with <x1 (x) x2, r> = <r#(x1), x2>."""
    return LinearMap(r.coeff.T.copy(), r.field)


def _pair_contract(
        A: Algebra,
        m0: np.ndarray,
        m1: np.ndarray
) -> np.ndarray:
    """K[x, y, q] = sum_{u,v} m0[u, x] m1[v, y] sc[u, v, q]."""
    return act_on_axis(act_on_axis(A.sc, m0.T, 0), m1.T, 1)


def ybe_bracket(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> np.ndarray:
    """
    The Yang-Baxter bracket of r with itself,
     sum x_i x_j (x) y_i (x) y_j + x_i (x) y_i x_j (x) y_j
     - x_j (x) x_i y_j (x) y_i - x_j (x) x_i (x) y_i y_j.

    param: A; Algebra. (Algebra)
    param: r; 2-tensor on A. (Tensor2 or matrix)
    :return: Coefficient 3-tensor. (np.ndarray)
    """
    x = coefficients(A, r)
    xt = x.T
    first = _pair_contract(A, x, x).transpose(2, 0, 1)
    second = _pair_contract(A, xt, x).transpose(0, 2, 1)
    third = _pair_contract(A, x, xt).transpose(1, 2, 0)
    fourth = _pair_contract(A, xt, xt).transpose(1, 0, 2)
    return first + second - third - fourth


def coboundary_stack(
        A: Algebra,
        x: np.ndarray
) -> np.ndarray:
    """((r - l)(e_k) (x) id + id (x) r(e_k)) applied to x, for every k."""
    field = A.field
    n = A.dim
    lefts, rights = A.left_stack(), A.right_stack()
    out = field.zeros((n, n, n))
    for k in range(n):
        out[k] = (rights[k] - lefts[k]) @ x + x @ rights[k].T
    return out


def is_invariant(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> bool:
    """True iff ((r - l)(a) (x) id + id (x) r(a))(r) = 0 for every basis a."""
    return A.field.is_zero(coboundary_stack(A, coefficients(A, r)))


def delta_r(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> Coalgebra:
    """Delta_r(e_k) = sum X[i, j] ((e_i e_k - e_k e_i) (x) e_j + e_i (x) e_j e_k)."""
    return Coalgebra(coboundary_stack(A, coefficients(A, r)), A.field, A.labels)


def dual_product_r(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> Algebra:
    """
    The product on A*:
     x1 . x2 = l*(r# x1) x2 + l*(tau(r)# x2) x1 - r*(tau(r)# x2) x1,
     with l*(a), r*(a) the transposes of l(a), r(a).
    """
    x = coefficients(A, r)
    field = A.field
    n = A.dim
    sc = field.zeros((n, n, n))
    for i in range(n):
        left_i = A.left_op(x[i, :]).T
        for j in range(n):
            mixed_j = (A.left_op(x[:, j]) - A.right_op(x[:, j])).T
            sc[i, j] = left_i[:, j] + mixed_j[:, i]
    return Algebra(sc, field, [f"f{i + 1}" for i in range(n)])


@dataclass
class CoboundaryResiduals:
    """
    Residuals of the conditions characterising when Delta_r is a coalgebra
     (``coalgebra``, indexed [k, p, q, s]) and satisfies the left and right
     compatibility conditions (``left_compat``, ``right_compat``, indexed
     [s, t, p, q]).
    """
    coalgebra: np.ndarray
    left_compat: np.ndarray
    right_compat: np.ndarray


def coboundary_residuals(
        A: Algebra,
        r: Union[Tensor2, Any]
) -> CoboundaryResiduals:
    """
    Evaluates the r-side conditions equivalent to Delta_r being a coalgebra
     and to each compatibility condition, without building Delta_r.

    With S = r - tau(r) and Q(a) = ((r - l)(a) (x) id + id (x) r(a))S:

    - coalgebra(a) = ((l - r)(a) (x) id (x) id)[[r,r]]
      + (id (x) id (x) r(a) + id (x) (l - r)(a) (x) id)(tau (x) id)[[r,r]]
      - (id (x) id (x) r(a) - id (x) (l - r)(a) (x) id)(sum_i Q(x_i) (x) y_i)
      + sum_j ((l - r)(x_j) (x) id (x) id)(tau(Q(a)) (x) y_j)
    - left_compat(a1, a2) = ((r - l)(a2) (x) id)tau Q(a1)
      + (id - tau)(r(a2) (x) id)Q(a1) + tau(r(a1) (x) id)Q(a2)
    - right_compat(a1, a2) = (r(a1) (x) id)Q(a2)

    param: A; Algebra. (Algebra)
    param: r; 2-tensor on A. (Tensor2 or matrix)
    :return: The three residual tensors. (CoboundaryResiduals)
    """
    x = coefficients(A, r)
    field = A.field
    n = A.dim
    lefts, rights = A.left_stack(), A.right_stack()
    q = coboundary_stack(A, x - x.T)
    bracket = ybe_bracket(A, x)
    flipped = bracket.transpose(1, 0, 2)
    weighted_q = act_on_axis(q, x.T, 0).transpose(1, 2, 0)
    # sum_a X[a, b] (l - r)(e_a), one matrix per second leg b
    weighted_diff = (x.T @ (lefts - rights).reshape(n, n * n)).reshape(n, n, n)

    coalgebra = field.zeros((n, n, n, n))
    for k in range(n):
        diff = lefts[k] - rights[k]
        v = field.zeros((n, n, n))
        for b in range(n):
            v[:, :, b] = weighted_diff[b] @ q[k].T
        coalgebra[k] = (
            act_on_axis(bracket, diff, 0)
            + act_on_axis(flipped, rights[k], 2) + act_on_axis(flipped, diff, 1)
            - act_on_axis(weighted_q, rights[k], 2) + act_on_axis(weighted_q, diff, 1)
            + v
        )

    left_compat = field.zeros((n, n, n, n))
    right_compat = field.zeros((n, n, n, n))
    for s in range(n):
        for t in range(n):
            rt, lt, rs = rights[t], lefts[t], rights[s]
            left_compat[s, t] = ((rt - lt) @ q[s].T + rt @ q[s] - (rt @ q[s]).T
                                 + (rs @ q[t]).T)
            right_compat[s, t] = rs @ q[t]
    return CoboundaryResiduals(coalgebra, left_compat, right_compat)
