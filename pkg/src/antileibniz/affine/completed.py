"""
Affinization of a finite-dimensional anti-Leibniz (bi)algebra by a graded
commutative algebra, with completed tensors held as coefficient oracles.

An element a t^i of A (x) C is addressed as the pair (a, i). The product is
(a, i)(b, j) = (ab, i + j) scaled by c(i, j); the completed coproduct of
(a, k) has coefficient D(a) d_k(i, j) at degrees (i, j). Nothing is ever
summed over infinitely many degrees: every identity is checked coefficient
by coefficient on probes whose degrees, intermediate ones included, lie in
the window -N..N.

Each probe coefficient is a sum of base tensors weighted by scalars from C.
Probes sharing the same weights give the same residual, so residuals are
memoized on their weight signature.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.algebra import Algebra
from ..algebra.checks import triple_products
from ..bialgebra.bialgebra import Bialgebra
from ..bialgebra.coalgebra import Coalgebra, iterated_coproducts
from ..errors import BadParameter, WindowOverflow
from ..report import Report
from .graded import GradedLine, graded_for

logger = logging.getLogger(__name__)

Homogeneous = Tuple[Any, int]


@dataclass
class GradedContext:
    """A base bialgebra, the graded algebra it is tensored with, and the window."""
    base: Bialgebra
    window: int
    graded: Optional[GradedLine] = None

    def __post_init__(self):
        self.graded = graded_for(self.base.field, self.graded)
        if not isinstance(self.window, (int, np.integer)) or self.window < 1:
            logger.error(f"Window {self.window} is not a positive integer")
            raise BadParameter(f"window must be an integer >= 1, got {self.window}")
        self.window = int(self.window)

    def admits(self, *degrees: int) -> bool:
        return all(abs(d) <= self.window for d in degrees)

    def degrees(self) -> range:
        return range(-self.window, self.window + 1)

    def require(self, operation: str, *degrees: int) -> None:
        if not self.admits(*degrees):
            logger.error(f"{operation}: degrees {degrees} leave window {self.window}")
            raise WindowOverflow(
                f"{operation}: degrees {degrees} leave the window [-{self.window}, "
                f"{self.window}]"
            )


class CompletedTensor2:
    def __init__(
            self,
            oracle: Callable[[int, int], np.ndarray],
            support: Callable[[int, int], bool],
            dim: int,
            field
    ):
        """
        An element of the completed tensor square, one coefficient matrix per
         degree pair.

        param: oracle; (i, j) -> coefficient matrix over the base. (Callable)
        param: support; Degree pairs where the oracle may be nonzero.
         (Callable)
        param: dim; Base dimension. (int)
        param: field; Scalar field. (Field)
        """
        self._oracle = oracle
        self._support = support
        self.dim = dim
        self.field = field

    def supports(self, i: int, j: int) -> bool:
        return bool(self._support(i, j))

    def __call__(self, i: int, j: int) -> np.ndarray:
        if not self.supports(i, j):
            return self.field.zeros((self.dim, self.dim))
        return self._oracle(i, j)

    def items(self, degrees: Sequence[int]) -> Iterator[Tuple[Tuple[int, int], np.ndarray]]:
        """Nonzero coefficients over a finite set of degrees."""
        for i in degrees:
            for j in degrees:
                if self.supports(i, j):
                    value = self._oracle(i, j)
                    if not self.field.is_zero(value):
                        yield (i, j), value


def affine_multiply(
        G: GradedContext,
        x: Homogeneous,
        y: Homogeneous
) -> Homogeneous:
    """
    (a t^i)(b t^j) = c(i, j) ab t^(i+j).

    param: G; Affinization context. (GradedContext)
    param: x; (vector, degree). (tuple)
    param: y; (vector, degree). (tuple)
    :return: (vector, degree) of the product. (tuple)
    """
    (a, i), (b, j) = x, y
    G.require("affine_multiply", i, j, i + j)
    degree, coefficient = G.graded.product(i, j)
    return G.base.alg.multiply(a, b) * coefficient, degree


def completed_coproduct(
        G: GradedContext,
        x: Homogeneous
) -> CompletedTensor2:
    """
    D(a t^k) = D(a) . D(t^k): coefficient D(a) d_k(i, j) on i + j = k.

    param: G; Affinization context. (GradedContext)
    param: x; (vector, degree). (tuple)
    :return: Coefficient oracle. (CompletedTensor2)
    """
    a, k = x
    G.require("completed_coproduct", k)
    base = G.base.coa.apply(a)
    graded = G.graded
    return CompletedTensor2(
        lambda i, j: base * graded.coproduct(k, i, j),
        lambda i, j: i + j == k,
        G.base.dim,
        G.base.field,
    )


class _Window:
    """Degree bookkeeping shared by the window checks."""

    def __init__(self, window: int, graded: GradedLine):
        self.inside = set(range(-window, window + 1))
        self.degrees = range(-window, window + 1)
        self.graded = graded

    def admits(self, *degrees: int) -> bool:
        return all(d in self.inside for d in degrees)

    def c(self, i: int, j: int):
        return self.graded.coefficient(i, j)

    def d(self, k: int, i: int, j: int):
        return self.graded.coproduct(k, i, j)


def _weighted(field, weights: Sequence[Any], tensors: Sequence[np.ndarray]) -> np.ndarray:
    out = field.zeros(tensors[0].shape)
    for weight, tensor in zip(weights, tensors):
        if weight != 0:
            out = out + weight * tensor
    return out


class _Probe:
    """First failing probe per clause plus a residual cache keyed by weights."""

    def __init__(self, field):
        self.field = field
        self.cache: Dict[Tuple, Optional[Tuple[int, ...]]] = {}
        self.failure: Optional[Tuple] = None
        self.count = 0

    def run(self, weights, tensors, locate, degrees):
        self.count += 1
        key = tuple(self.field.format(w) for w in weights)
        if key not in self.cache:
            residual = _weighted(self.field, weights, tensors)
            self.cache[key] = locate(residual)
        hit = self.cache[key]
        if hit is not None and self.failure is None:
            self.failure = hit + tuple(degrees)


def _locate(field, leading: int):
    """First nonzero index over the leading basis axes, 1-based, or None."""
    def locate(residual):
        mask = field.nonzero_mask(residual)
        mask = mask.reshape(residual.shape[:leading] + (-1,)).any(axis=-1)
        hits = np.argwhere(mask)
        return tuple(int(x) + 1 for x in hits[0]) if hits.size else None
    return locate


def check_affine_algebra_window(
        A: Algebra,
        window: int,
        graded: Optional[GradedLine] = None
) -> Report:
    """
    Graded anti-Leibniz identity of A (x) C on every degree triple in the
     window.

    Witness: (s, t, u, i, j, l), basis indices 1-based followed by degrees.

    param: A; Base algebra. (Algebra)
    param: window; N, degrees -N..N. (int)
    param: graded; Graded commutative algebra. Default is Laurent
     polynomials over the field of A. (GradedLine)
    :return: Report. (Report)
    """
    if window < 1:
        raise BadParameter(f"window must be >= 1, got {window}")
    W = _Window(window, graded_for(A.field, graded))
    d1, d2 = triple_products(A)
    tensors = (d1, d2, d1.transpose(1, 0, 2, 3))
    probe = _Probe(A.field)
    locate = _locate(A.field, 3)
    report = Report(f"affine anti-Leibniz algebra on window {window}")
    with report.timed():
        for i in W.degrees:
            for j in W.degrees:
                for k in W.degrees:
                    if not W.admits(i + j, j + k, i + k, i + j + k):
                        continue
                    weights = (W.c(j, k) * W.c(i, j + k),
                               W.c(i, j) * W.c(i + j, k),
                               W.c(i, k) * W.c(j, i + k))
                    probe.run(weights, tensors, locate, (i, j, k))
        report.add("graded anti-Leibniz", "anti-Leibniz identity, degreewise",
                   probe.failure is None, probe.failure)
    report.notes.append(f"algebra probes: {probe.count} degree triples")
    return report


def check_completed_coalgebra_window(
        C: Coalgebra,
        window: int,
        graded: Optional[GradedLine] = None
) -> Report:
    """
    Completed anti-Leibniz co-identity of D(a) . D(t^k) on the window.

    Each generator (e_s, k) is probed at every (p, q, r) with p + q + r = k.
    Witness: (s, k, p, q, r).
    """
    if window < 1:
        raise BadParameter(f"window must be >= 1, got {window}")
    W = _Window(window, graded_for(C.field, graded))
    left, right = iterated_coproducts(C)
    tensors = (left, right, right.transpose(0, 2, 1, 3))
    probe = _Probe(C.field)
    locate = _locate(C.field, 1)
    report = Report(f"completed anti-Leibniz coalgebra on window {window}")
    with report.timed():
        for k in W.degrees:
            for p in W.degrees:
                for q in W.degrees:
                    r = k - p - q
                    if not W.admits(r, p + q, q + r, p + r):
                        continue
                    weights = (W.d(k, p + q, r) * W.d(p + q, p, q),
                               W.d(k, p, q + r) * W.d(q + r, q, r),
                               W.d(k, q, p + r) * W.d(p + r, p, r))
                    probe.run(weights, tensors, locate, (k, p, q, r))
        report.add("completed coalgebra", "anti-Leibniz co-identity, degreewise",
                   probe.failure is None, probe.failure)
    report.notes.append(f"coalgebra probes: {probe.count} degree quadruples")
    return report


def _compatibility_terms(B: Bialgebra) -> Dict[str, np.ndarray]:
    """
    The separate terms of both compatibility conditions for (e_s, e_t),
     each indexed [s, t, p, q].
    """
    A, C, field = B.alg, B.coa, B.field
    n = A.dim
    lefts, rights = A.left_stack(), A.right_stack()
    names = ("product", "id_r", "id_r_flip", "r_id", "r_id_flip", "l_id",
             "l_id_flip", "id_l", "l_id_other", "rs_t", "rt_s_flip")
    terms = {name: field.zeros((n, n, n, n)) for name in names}
    products = (A.sc.reshape(n * n, n) @ C.cc.reshape(n, n * n)).reshape(n, n, n, n)
    for s in range(n):
        ds = C.cc[s]
        for t in range(n):
            dt = C.cc[t]
            lt, rt, ls, rs = lefts[t], rights[t], lefts[s], rights[s]
            terms["product"][s, t] = products[s, t]
            terms["id_r"][s, t] = ds @ rt.T
            terms["id_r_flip"][s, t] = ds.T @ rt.T
            terms["r_id"][s, t] = rt @ ds
            terms["r_id_flip"][s, t] = rt @ ds.T
            terms["l_id"][s, t] = lt @ ds
            terms["l_id_flip"][s, t] = lt @ ds.T
            terms["id_l"][s, t] = dt @ ls.T
            terms["l_id_other"][s, t] = ls @ dt
            terms["rs_t"][s, t] = rs @ dt
            terms["rt_s_flip"][s, t] = (rt @ ds).T
    return terms


def compatibility_coefficient(
        G: GradedContext,
        degrees: Tuple[int, int],
        outputs: Tuple[int, int]
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Coefficients at degrees (p, q) of both completed compatibility residuals
     for x = e_s t^i and y = e_t t^j, indexed [s, t, a, b].

    For Laurent polynomials every weight is 1 and the result equals the base
    residuals of check_bialgebra.

    param: G; Affinization context. (GradedContext)
    param: degrees; (i, j). (tuple)
    param: outputs; (p, q) with p + q = i + j. (tuple)
    :return: (left residual, right residual). (tuple)
    """
    (i, j), (p, q) = degrees, outputs
    G.require("compatibility_coefficient", i, j, i + j, p, q, p - i, p - j, q - i, q - j)
    if p + q != i + j:
        raise BadParameter(f"output degrees {outputs} do not sum to {i + j}")
    terms = _compatibility_terms(G.base)
    first_weights, second_weights = _compatibility_weights(
        _Window(G.window, G.graded), i, j, p, q)
    field = G.base.field
    return (_weighted(field, first_weights, [terms[k] for k in _FIRST]),
            _weighted(field, second_weights, [terms[k] for k in _SECOND]))


_FIRST = ("product", "id_r", "id_r_flip", "r_id", "r_id_flip", "l_id", "l_id_flip",
          "id_l", "l_id_other")
_SECOND = ("rs_t", "rt_s_flip")


def _compatibility_weights(W: _Window, i: int, j: int, p: int, q: int):
    c, d = W.c, W.d
    first = (
        c(i, j) * d(i + j, p, q),
        d(i, p, q - j) * c(q - j, j),
        -d(i, q - j, p) * c(q - j, j),
        -d(i, p - j, q) * c(p - j, j),
        d(i, q, p - j) * c(p - j, j),
        d(i, p - j, q) * c(j, p - j),
        -d(i, q, p - j) * c(j, p - j),
        d(j, p, q - i) * c(i, q - i),
        d(j, p - i, q) * c(i, p - i),
    )
    second = (
        d(j, p - i, q) * c(p - i, i),
        -d(i, q - j, p) * c(q - j, j),
    )
    return first, second


def check_completed_bialgebra_window(G: GradedContext) -> Report:
    """
    Checks the completed bialgebra on the window: the graded anti-Leibniz
     algebra, the completed coalgebra and both compatibility conditions, all
     coefficientwise.

    The verdict matches check_bialgebra on the base. The base is not required
    to be a bialgebra; failures show up as failing clauses.

    param: G; Affinization context. (GradedContext)
    :return: Report; compatibility witnesses are (s, t, i, j, p, q). (Report)
    """
    B = G.base
    report = Report(f"completed anti-Leibniz bialgebra on window {G.window}")
    with report.timed():
        report.extend(check_affine_algebra_window(B.alg, G.window, G.graded))
        report.extend(check_completed_coalgebra_window(B.coa, G.window, G.graded))
        W = _Window(G.window, G.graded)
        terms = _compatibility_terms(B)
        first_tensors = [terms[k] for k in _FIRST]
        second_tensors = [terms[k] for k in _SECOND]
        locate = _locate(B.field, 2)
        first, second = _Probe(B.field), _Probe(B.field)
        for i in W.degrees:
            for j in W.degrees:
                if not W.admits(i + j):
                    continue
                for p in W.degrees:
                    q = i + j - p
                    if not W.admits(q, p - i, p - j, q - i, q - j):
                        continue
                    first_weights, second_weights = _compatibility_weights(W, i, j, p, q)
                    first.run(first_weights, first_tensors, locate, (i, j, p, q))
                    second.run(second_weights, second_tensors, locate, (i, j, p, q))
        report.add("completed left compatibility", "coproduct of a product, degreewise",
                   first.failure is None, first.failure)
        report.add("completed right compatibility",
                   "right-multiplication symmetry, degreewise",
                   second.failure is None, second.failure)
    report.notes.append(f"compatibility probes: {first.count} degree quadruples")
    logger.debug(f"Window {G.window}: verdict {report.verdict}")
    return report


def compatibility_degrees(G: GradedContext) -> List[Tuple[int, int, int, int]]:
    """The (i, j, p, q) probes used by the compatibility clauses."""
    W = _Window(G.window, G.graded)
    out = []
    for i in W.degrees:
        for j in W.degrees:
            for p in W.degrees:
                q = i + j - p
                if W.admits(i + j, q, p - i, p - j, q - i, q - j):
                    out.append((i, j, p, q))
    return out
