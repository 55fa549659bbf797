import numpy as np
import pytest
from numpy.testing import assert_array_equal

from antileibniz.algebra import (
    Algebra,
    BilinearForm,
    LinearMap,
    check_anti_leibniz,
    check_anticomm_antiassoc,
    check_leibniz,
    check_mock_lie,
    check_right_anti_leibniz,
    form_properties,
    is_homomorphism,
    left_triple_collapse_check,
    triple_products,
)
from antileibniz.core import QQ, get_field
from antileibniz.errors import DimensionMismatch, PreconditionViolated
from antileibniz.suites import random_anti_leibniz


def test_catalog_algebras_are_anti_leibniz(lambda21, lambda22, noncommutative3):
    for A in (lambda21, lambda22, noncommutative3):
        report = check_anti_leibniz(A)
        assert report.holds
        assert report.verdict == "pass"
        assert report.witness is None


def test_idempotent_line_fails_with_witness(idempotent1):
    report = check_anti_leibniz(idempotent1)
    assert not report.holds
    assert report.witness == (1, 1, 1)


def test_noncommutative3_is_not_mock_lie(noncommutative3):
    assert not noncommutative3.is_commutative()
    report = check_mock_lie(noncommutative3)
    assert report.clause("commutative").holds is False
    assert report.clause("commutative").witness == (1, 2)


def test_commutative_anti_leibniz_is_mock_lie(lambda21, lambda22):
    assert check_mock_lie(lambda21).holds
    assert check_mock_lie(lambda22).holds


def test_left_triple_collapse(noncommutative3, idempotent1):
    assert left_triple_collapse_check(noncommutative3)
    with pytest.raises(PreconditionViolated):
        left_triple_collapse_check(idempotent1)


def test_multiply_and_operators(noncommutative3):
    A = noncommutative3
    assert_array_equal(A.multiply([1, 0, 0], [0, 1, 0]), QQ.array([0, 0, 1]))
    assert_array_equal(A.multiply([0, 1, 0], [1, 0, 0]), QQ.zeros(3))
    assert_array_equal(A.left_op([1, 0, 0]), A.left_mult(0))
    assert_array_equal(A.right_op([0, 1, 0]), A.right_mult(1))


def test_triple_products_layout(noncommutative3):
    d1, d2 = triple_products(noncommutative3)
    A = noncommutative3
    for i, j, k in np.ndindex(3, 3, 3):
        ei, ej, ek = A.basis(i), A.basis(j), A.basis(k)
        assert_array_equal(d1[i, j, k], A.multiply(ei, A.multiply(ej, ek)))
        assert_array_equal(d2[i, j, k], A.multiply(A.multiply(ei, ej), ek))


def test_change_basis_preserves_the_law(rng):
    for dim in (2, 3):
        A = random_anti_leibniz(rng, dim)
        assert check_anti_leibniz(A).holds


def test_change_basis_is_an_isomorphism(lambda22):
    p = QQ.array([[1, 1], [0, 1]])
    B = lambda22.change_basis(p)
    assert is_homomorphism(LinearMap(p), B, lambda22)


def test_right_anti_leibniz_on_opposite(noncommutative3):
    assert check_right_anti_leibniz(noncommutative3.opposite()).holds


def test_leibniz_and_anti_associative_checks():
    L = Algebra.from_products(2, {(1, 2): {2: 1}, (2, 1): {2: -1}})
    assert check_leibniz(L).holds
    aa = Algebra.from_products(2, {(1, 1): {2: 1}})
    literal = check_anticomm_antiassoc(aa)
    assert not literal.holds
    assert check_anticomm_antiassoc(aa, policy="off_diagonal").holds


def test_gf2_algebra_law():
    gf2 = get_field("gf2")
    A = Algebra.from_products(1, {(1, 1): {1: 1}}, field=gf2)
    # 3 = 1 in GF(2): the idempotent line still fails
    assert not check_anti_leibniz(A).holds


def test_form_properties(noncommutative3):
    form = BilinearForm([[0, 1], [-1, 0]])
    A = Algebra.zero(2)
    props = form_properties(A, form)
    assert props.nondegenerate and props.skew_symmetric and not props.symmetric
    assert props.invariant_skew_style
    with pytest.raises(DimensionMismatch):
        form_properties(noncommutative3, form)


def test_form_evaluate():
    form = BilinearForm([[0, 1], [-1, 0]])
    assert form.evaluate([1, 0], [0, 1]) == 1
    assert form.evaluate([0, 1], [1, 0]) == -1
    assert form.evaluate([1, 1], [1, 1]) == 0
    assert form.scaled(2).evaluate([1, 0], [0, 1]) == 2


def test_bad_shapes():
    with pytest.raises(DimensionMismatch):
        Algebra(np.zeros((2, 2, 3), dtype=int))
    with pytest.raises(DimensionMismatch):
        Algebra.from_products(2, {(3, 1): {1: 1}})
