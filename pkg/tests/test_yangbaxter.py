import pytest
from numpy.testing import assert_array_equal

from antileibniz.algebra import Algebra
from antileibniz.bialgebra import Bialgebra, Coalgebra, check_bialgebra, check_coalgebra
from antileibniz.bialgebra.bialgebra import compatibility_defects
from antileibniz.bialgebra.coalgebra import dual_algebra
from antileibniz.core import QQ, tau13
from antileibniz.errors import DimensionMismatch, NotFactorizable, PreconditionViolated
from antileibniz.suites import random_anti_leibniz
from antileibniz.yangbaxter import (
    Tensor2,
    classify_r,
    coboundary_residuals,
    delta_r,
    double_bialgebra,
    dual_product_r,
    factorization_decompose,
    factorization_image,
    homomorphism_criteria,
    is_invariant,
    sharp,
    skew_part_intertwines,
    tau,
    ybe_bracket,
)

E11 = Tensor2.from_terms(2, {(1, 1): 1})
SYMMETRIC = Tensor2.from_terms(2, {(1, 2): 1, (2, 1): 1})


def _random_r(rng, dim):
    coeff = QQ.random(rng, (dim, dim), weights=[0.2, 0.6, 0.2])
    if rng.random() < 0.3:
        coeff = coeff + coeff.T
    return Tensor2(coeff)


def test_tau_and_sharp():
    r = Tensor2.from_terms(2, {(1, 2): 1})
    assert tau(r) == Tensor2.from_terms(2, {(2, 1): 1})
    assert tau(tau(r)) == r
    s = sharp(r)
    assert_array_equal(s([1, 0]), QQ.array([0, 1]))
    assert_array_equal(s([0, 1]), QQ.zeros(2))
    t = QQ.zeros((3, 3, 3))
    t[0, 1, 2] = QQ.one()
    assert tau13(t)[2, 1, 0] == 1


def test_bracket_examples(lambda21):
    assert QQ.is_zero(ybe_bracket(lambda21, Tensor2.zero(2)))
    assert QQ.is_zero(ybe_bracket(lambda21, SYMMETRIC))
    expected = QQ.zeros((2, 2, 2))
    expected[1, 0, 0] = QQ.one()
    expected[0, 0, 1] = -QQ.one()
    assert_array_equal(ybe_bracket(lambda21, E11), expected)


def test_bracket_dimension_mismatch(lambda21):
    with pytest.raises(DimensionMismatch):
        ybe_bracket(lambda21, Tensor2.zero(3))


def test_invariance_examples(lambda21):
    assert is_invariant(lambda21, Tensor2.zero(2))
    assert not is_invariant(lambda21, E11)


def test_delta_r_of_symmetric_solution(lambda21):
    C = delta_r(lambda21, SYMMETRIC)
    expected = Coalgebra.from_coproducts(2, {1: {(2, 2): 1}})
    assert C == expected
    assert delta_r(lambda21, Tensor2.zero(2)) == Coalgebra.zero(2)


def test_classification_of_symmetric_solution(lambda21):
    c = classify_r(lambda21, SYMMETRIC)
    assert c.triangular and c.quasi_triangular and not c.factorizable
    assert c.cal_i.is_zero()
    assert c.bialgebra_report.holds
    assert c.consistent()


def test_classification_of_zero(lambda21):
    c = classify_r(lambda21, Tensor2.zero(2))
    assert c.triangular
    assert not c.factorizable


def test_classification_needs_anti_leibniz(idempotent1):
    with pytest.raises(PreconditionViolated):
        classify_r(idempotent1, Tensor2.zero(1))


def test_dual_product_matches_dual_of_delta(rng):
    for _ in range(40):
        dim = int(rng.integers(1, 4))
        A = random_anti_leibniz(rng, dim)
        r = _random_r(rng, dim)
        assert dual_product_r(A, r) == dual_algebra(delta_r(A, r))


def test_dual_product_of_symmetric_solution(lambda21):
    dual = dual_product_r(lambda21, SYMMETRIC)
    expected = Algebra.from_products(2, {(2, 2): {1: 1}})
    assert dual == expected


def test_twisted_bracket_identity(rng):
    for _ in range(50):
        dim = int(rng.integers(1, 4))
        A = random_anti_leibniz(rng, dim)
        r = _random_r(rng, dim)
        assert_array_equal(ybe_bracket(A, tau(r)), -tau13(ybe_bracket(A, r)))


def test_coboundary_residuals_agree_with_direct_checks(rng):
    for _ in range(200):
        dim = int(rng.integers(1, 4))
        A = random_anti_leibniz(rng, dim)
        r = _random_r(rng, dim)
        residuals = coboundary_residuals(A, r)
        C = delta_r(A, r)
        first, second, _ = compatibility_defects(A, C)
        assert QQ.is_zero(residuals.coalgebra) == check_coalgebra(C).holds
        assert QQ.is_zero(residuals.left_compat) == QQ.is_zero(first)
        assert QQ.is_zero(residuals.right_compat) == QQ.is_zero(second)


def test_residuals_of_symmetric_and_square_tensors(lambda21):
    for r in (SYMMETRIC, Tensor2.zero(2), E11):
        residuals = coboundary_residuals(lambda21, r)
        assert QQ.is_zero(residuals.left_compat)
        assert QQ.is_zero(residuals.right_compat)
    assert QQ.is_zero(coboundary_residuals(lambda21, SYMMETRIC).coalgebra)


def test_symmetric_solutions_give_bialgebras(rng):
    for _ in range(40):
        dim = int(rng.integers(1, 4))
        A = random_anti_leibniz(rng, dim)
        coeff = QQ.random(rng, (dim, dim), weights=[0.2, 0.6, 0.2])
        r = Tensor2(coeff + coeff.T)
        if QQ.is_zero(ybe_bracket(A, r)):
            assert check_bialgebra(Bialgebra(A, delta_r(A, r))).holds


def test_double_reproduces_the_table(lambda21_bialgebra):
    result = double_bialgebra(lambda21_bialgebra)
    assert result.report.holds
    D = result.double
    # basis e1, e2, f1, f2
    expected = Algebra.from_products(4, {
        (1, 1): {2: 1}, (4, 4): {3: 1}, (1, 4): {3: 1}, (4, 1): {2: 1},
    })
    assert D.alg == expected
    assert D.coa == Coalgebra.from_coproducts(4, {1: {(2, 2): 1}, 4: {(3, 3): 1}})
    assert result.rtilde == Tensor2.from_terms(4, {(1, 3): 1, (2, 4): 1})


def test_double_classification(double_r):
    A, r = double_r.algebra, double_r.r
    c = classify_r(A, r)
    assert c.quasi_triangular and c.factorizable and not c.triangular
    assert c.consistent()
    # I(e1*) = f1 and I(f1*) = -e1
    assert_array_equal(c.cal_i([1, 0, 0, 0]), QQ.array([0, 0, 1, 0]))
    assert_array_equal(c.cal_i([0, 0, 1, 0]), QQ.array([-1, 0, 0, 0]))
    assert is_invariant(A, r.skew_part())
    twisted = classify_r(A, tau(r))
    assert twisted.quasi_triangular


def test_double_of_zero_coproduct(lambda21):
    result = double_bialgebra(Bialgebra(lambda21, Coalgebra.zero(2)))
    assert result.report.holds


def test_homomorphism_criteria(double_r, lambda21):
    criteria = homomorphism_criteria(double_r.algebra, double_r.r)
    assert criteria.is_solution and criteria.sharp_homo and criteria.tau_sharp_homo
    assert criteria.dual_anti_leibniz
    square = homomorphism_criteria(lambda21, E11)
    assert not square.is_solution
    assert square.agree()
    with pytest.raises(PreconditionViolated):
        homomorphism_criteria(lambda21, Tensor2.from_terms(2, {(1, 2): 1}))


def test_factorization_decompose(double_r, lambda21):
    A, r = double_r.algebra, double_r.r
    for k in range(4):
        a = A.basis(k)
        plus, minus = factorization_decompose(A, r, a)
        assert_array_equal(plus + minus, a)
    plus, minus = factorization_decompose(A, r, QQ.zeros(4))
    assert QQ.is_zero(plus) and QQ.is_zero(minus)
    with pytest.raises(NotFactorizable):
        factorization_decompose(lambda21, SYMMETRIC, [1, 0])


def test_factorization_image(double_r):
    image = factorization_image(double_r.algebra, double_r.r)
    assert image.homomorphism and image.subalgebra and image.injective


def test_skew_part_intertwines_matches_invariance(rng, double_r):
    assert skew_part_intertwines(double_r.algebra, double_r.r)
    for _ in range(40):
        dim = int(rng.integers(1, 4))
        A = random_anti_leibniz(rng, dim)
        r = _random_r(rng, dim)
        assert skew_part_intertwines(A, r) == is_invariant(A, r.skew_part())
