import pytest

from antileibniz.algebra import Algebra, check_anti_leibniz
from antileibniz.core import QQ
from antileibniz.errors import NotFactorizable, NotSymmetric, PreconditionViolated, ZeroWeight
from antileibniz.pairs import coregular_bimodule, regular_bimodule
from antileibniz.rotabaxter import (
    RelativeRB,
    SkewQuadraticRB,
    WeightedRB,
    check_rb_weight,
    check_relative_rb,
    check_skew_quadratic,
    delta_I_bialgebra,
    descendent_product,
    factorizable_to_rb,
    omega_form,
    rb_involution,
    rb_to_factorizable,
    relative_rb_to_semidirect_solution,
    sharp_rb_criteria,
)
from antileibniz.suites import random_anti_leibniz
from antileibniz.yangbaxter import Tensor2, tau

WEIGHTS = (1, -1, 2)


def test_scalar_operators(lambda22):
    for weight in WEIGHTS:
        X = WeightedRB(lambda22, QQ.eye(2) * QQ.element(-weight), weight)
        assert check_rb_weight(X).holds
        assert descendent_product(X) == Algebra(lambda22.sc * QQ.element(-weight))
    assert check_rb_weight(WeightedRB(lambda22, QQ.zeros((2, 2)), 5)).holds
    assert check_rb_weight(WeightedRB(lambda22, QQ.eye(2), -1)).holds
    failing = check_rb_weight(WeightedRB(lambda22, QQ.eye(2), 1))
    assert not failing.holds
    assert failing.witness == (1, 1)


def test_descendent_algebra_is_anti_leibniz(lambda22):
    X = WeightedRB(lambda22, QQ.eye(2), -1)
    assert check_anti_leibniz(descendent_product(X)).holds


def test_rb_needs_anti_leibniz(idempotent1):
    with pytest.raises(PreconditionViolated):
        check_rb_weight(WeightedRB(idempotent1, [[0]], 1))


@pytest.mark.parametrize("weight", WEIGHTS)
def test_factorizable_round_trip(double_r, weight):
    A, r = double_r.algebra, double_r.r
    X = factorizable_to_rb(A, r, weight)
    assert check_skew_quadratic(X).holds
    assert rb_to_factorizable(X) == r
    assert factorizable_to_rb(A, rb_to_factorizable(X), weight) == X


@pytest.mark.parametrize("weight", WEIGHTS)
def test_twist_matches_involution(double_r, weight):
    A, r = double_r.algebra, double_r.r
    X = factorizable_to_rb(A, r, weight)
    assert factorizable_to_rb(A, tau(r), weight) == rb_involution(X)
    assert rb_involution(rb_involution(X)) == X


def test_factorizable_errors(double_r, lambda21):
    with pytest.raises(ZeroWeight):
        factorizable_to_rb(double_r.algebra, double_r.r, 0)
    symmetric = Tensor2.from_terms(2, {(1, 2): 1, (2, 1): 1})
    with pytest.raises(NotFactorizable):
        factorizable_to_rb(lambda21, symmetric, 1)


def test_to_factorizable_needs_skew_quadratic(double_r):
    X = factorizable_to_rb(double_r.algebra, double_r.r, 1)
    broken = SkewQuadraticRB(X.algebra, X.R.matrix, 2, X.form)
    assert not check_skew_quadratic(broken).holds
    with pytest.raises(PreconditionViolated):
        rb_to_factorizable(broken)


@pytest.mark.parametrize("weight", WEIGHTS)
def test_descendent_bialgebra(double_r, weight):
    result = delta_I_bialgebra(double_r.algebra, double_r.r, weight)
    assert result.iso_check
    assert result.report.holds


def test_relative_rb_matches_semidirect_solution(rng):
    positives = 0
    for case in range(100):
        dim = int(rng.integers(1, 4))
        A = random_anti_leibniz(rng, dim)
        M = coregular_bimodule(A) if case % 2 else regular_bimodule(A)
        P = QQ.random(rng, (dim, dim), weights=[0.15, 0.7, 0.15])
        result = relative_rb_to_semidirect_solution(RelativeRB(M, P))
        assert result.report.clause("criteria agree").holds
        if result.bialgebra is not None:
            positives += 1
            assert result.report.holds
    assert positives > 0


def test_relative_rb_zero_operator(lambda21):
    X = RelativeRB(regular_bimodule(lambda21), QQ.zeros((2, 2)))
    assert check_relative_rb(X).holds


def test_sharp_criteria_on_symmetric_tensors(rng):
    for _ in range(100):
        dim = int(rng.integers(1, 4))
        A = random_anti_leibniz(rng, dim)
        coeff = QQ.random(rng, (dim, dim), weights=[0.2, 0.6, 0.2])
        report = sharp_rb_criteria(A, None, Tensor2(coeff + coeff.T))
        assert report.clause("criteria agree").holds


def test_sharp_criteria_with_form(double_r):
    A, r = double_r.algebra, double_r.r
    form = factorizable_to_rb(A, r, 1).form
    report = sharp_rb_criteria(A, form, r)
    assert report.holds
    assert report.clause("modified Rota-Baxter").holds


def test_omega_form(lambda21):
    result = omega_form(lambda21, Tensor2.from_terms(2, {(1, 2): 1, (2, 1): 1}))
    assert result.cocycle_holds
    assert result.omega.dim == 2
    with pytest.raises(NotSymmetric):
        omega_form(lambda21, Tensor2.from_terms(2, {(1, 2): 1}))
