"""
Named identities used as clause anchors.

Every clause a checker emits names one entry of ``IDENTITIES`` as its anchor.
The value is the identity written on basis elements, so machine output can
say exactly what was evaluated.
"""
from typing import Dict

IDENTITIES: Dict[str, str] = {
    # algebras
    "anti-Leibniz identity": "a1(a2a3) + (a1a2)a3 + a2(a1a3) = 0",
    "right anti-Leibniz identity": "(a1a2)a3 + a1(a2a3) + (a1a3)a2 = 0",
    "commutativity": "a1a2 = a2a1",
    "Jacobi identity": "a1(a2a3) + a2(a3a1) + a3(a1a2) = 0",
    "left Leibniz identity": "[x1,[x2,x3]] = [[x1,x2],x3] + [x2,[x1,x3]]",
    "right Leibniz identity": "[[x1,x2],x3] = [[x1,x3],x2] + [x1,[x2,x3]]",
    "anti-commutativity": "b1b2 = -b2b1",
    "anti-associativity": "b1(b2b3) = -(b1b2)b3",
    "triple symmetry": "b1(b2b3) + b2(b1b3) = 0",
    # forms
    "nondegenerate form": "B(x, -) = 0 implies x = 0",
    "symmetric form": "B(x, y) = B(y, x)",
    "skew-symmetric form": "B(x, y) = -B(y, x)",
    "associative-style invariance": "B(a1a2, a3) = B(a1, a2a3)",
    "skew-style invariance": "B(a1a2, a3) = B(a1, a2a3 - a3a2)",
    # bimodules and matched pairs
    "bimodule left identity": "l(a1a2)m + l(a1)l(a2)m + l(a2)l(a1)m = 0",
    "bimodule mixed identity": "l(a1)r(a2)m + r(a2)l(a1)m + r(a1a2)m = 0",
    "bimodule right identity": "r(a1a2)m + r(a2)r(a1)m + l(a1)r(a2)m = 0",
    "bimodule isomorphism": "phi l(a) = l*(a) phi and phi r(a) = (l* - r*)(a) phi",
    "invariance criterion": "skew-style invariance iff phi intertwines regular and coregular",
    "right action on products":
        "rA(a)(b1b2) + b1(rA(a)b2) + b2(rA(a)b1) + rA(lB(b2)a)b1 + rA(lB(b1)a)b2 = 0",
    "left action on products":
        "lA(a)(b1b2) + (lA(a)b1)b2 + b1(lA(a)b2) + lA(rB(b1)a)b2 + rA(rB(b2)a)b1 = 0",
    "left-right action balance":
        "(lA(a)b1)b2 + lA(rB(b1)a)b2 = (rA(a)b1)b2 + lA(lB(b1)a)b2",
    "subalgebra": "A and A* are closed in the total algebra",
    # coalgebras and bialgebras
    "anti-Leibniz co-identity": "(id (x) D)D + (D (x) id)D + (tau (x) id)(id (x) D)D = 0",
    "anti-cocommutativity": "tau D = -D",
    "anti-coassociativity": "(id (x) D)D = -(D (x) id)D",
    "coproduct of a product": "D(a1a2) = (id (x) r(a2) - r(a2) (x) id + l(a2) (x) id)"
                              "(id (x) id - tau)D(a1) + (l(a1) (x) id)D(a2)",
    "coproduct of a product, expanded": "the nine-term expansion of D(a1a2)",
    "right-multiplication symmetry": "(r(a1) (x) id)D(a2) = (r(a2) (x) id)D(a1)",
    "bialgebra homomorphism": "f(a1a2) = f(a1)f(a2) and (f (x) f)D1 = D2 f",
    "bialgebra, matched pair and Manin triple":
        "bialgebra, matched pair and Manin triple verdicts agree",
    # Yang-Baxter equation
    "Yang-Baxter equation": "[[r, r]] = 0",
    "invariant tensor": "(l(a) (x) id - id (x) (l - r)(a)) r = 0 for all a",
    "factorizable r": "I = r# - tau(r)# is invertible",
    "Yang-Baxter criterion": "an operator identity of r#, tau(r)# or R_r equivalent to [[r, r]] = 0",
    "Yang-Baxter criterion agreement": "every applicable operator criterion matches [[r, r]] = 0",
    "symmetric solutions give bialgebras": "symmetric r with [[r, r]] = 0 gives (A, D_r)",
    # Rota-Baxter operators
    "weighted Rota-Baxter identity": "R(a1)R(a2) = R(R(a1)a2 + a1R(a2) + lambda a1a2)",
    "relative Rota-Baxter identity": "R(m1)R(m2) = R(l(R m1)m2 + r(R m2)m1)",
    "semidirect solution criterion": "P + tau(P) solves the equation iff P is relative Rota-Baxter",
    "form adjointness": "B(R a1, a2) + B(a1, R a2) + lambda B(a1, a2) = 0",
    "scaled skew map is a bialgebra isomorphism":
        "(1/lambda) I: (A*, ._r, D) -> (A, ._R, D_I) is an isomorphism",
    # affinization
    "anti-Leibniz identity, degreewise": "the anti-Leibniz identity on a t^i, b t^j, c t^k",
    "anti-Leibniz co-identity, degreewise": "the co-identity on each completed coefficient",
    "coproduct of a product, degreewise": "D(a1a2) on each completed coefficient",
    "right-multiplication symmetry, degreewise": "(r(a1) (x) id)D(a2) on each coefficient",
    "graded commutative": "c(i, j) = c(j, i)",
    "graded associative": "c(i, j)c(i + j, k) = c(j, k)c(i, j + k)",
    "graded form invariant": "w(t^i t^j, t^k) = w(t^i, t^j t^k)",
    "graded cocommutative": "D(t^k) is symmetric",
    "graded coassociative": "(id (x) D)D(t^k) = (D (x) id)D(t^k)",
    "graded duality": "w(D(t^k), t^a (x) t^b) = w(t^k, t^a t^b)",
    # tensor constructions
    "Leibniz co-identity": "the coalgebra dual to the left Leibniz identity",
    "Leibniz right-multiplication symmetry": "(ad(x1) (x) id)d(x2) = (ad(x2) (x) id)d(x1)",
    "Leibniz coproduct of a bracket": "d([x1, x2]) in terms of d(x1) and d(x2)",
    # finite-field searches
    "anti-Leibniz identity, independent loop check":
        "the anti-Leibniz identity recomputed by explicit loops mod p",
    "commutativity in small dimension": "orbit representatives are commutative",
}


def statement(anchor: str) -> str:
    """The identity an anchor names, or an empty string."""
    return IDENTITIES.get(anchor, "")
