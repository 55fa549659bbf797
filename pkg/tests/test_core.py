from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from antileibniz.core import (
    QQ,
    Scalar,
    act_on_axis,
    get_field,
    is_invertible,
    kernel,
    rank,
    solve_invert,
)
from antileibniz.errors import BadParameter, DivisionByZero, FieldMismatch, NotInvertible


def test_get_field_names():
    assert get_field("Q") is QQ
    assert get_field("rationals") is QQ
    assert get_field("gf3") is get_field("GF(3)")
    assert get_field(5).p == 5
    with pytest.raises(BadParameter):
        get_field("reals")
    with pytest.raises(BadParameter):
        get_field("gf4")


def test_rational_parse_and_format():
    assert QQ.parse("2/4") == Fraction(1, 2)
    assert QQ.format(QQ.parse("2/4")) == "1/2"
    assert QQ.format(Fraction(-6, 3)) == "-2"
    with pytest.raises(DivisionByZero):
        QQ.parse("1/0")
    with pytest.raises(FieldMismatch):
        QQ.parse("1 mod 3")


def test_prime_parse_and_format():
    gf3 = get_field("gf3")
    assert int(gf3.parse("4 mod 3")) == 1
    assert gf3.format(gf3.element(-1)) == "2 mod 3"
    with pytest.raises(FieldMismatch):
        gf3.parse("1/2")
    with pytest.raises(FieldMismatch):
        gf3.parse("1 mod 5")
    assert int(gf3.element(Fraction(1, 2))) == 2
    with pytest.raises(DivisionByZero):
        gf3.element(Fraction(1, 3))


def test_scalar_arithmetic():
    half = Scalar("1/2")
    assert half + half == 1
    assert str(half / 3) == "1/6"
    with pytest.raises(DivisionByZero):
        half / 0
    x = Scalar.parse("2 mod 5")
    assert x.field is get_field(5)
    assert (x * x).value == 4
    assert str(x.inv()) == "3 mod 5"
    with pytest.raises(FieldMismatch):
        half + x


def test_rank_kernel_and_inverse_over_q():
    m = QQ.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(QQ, m) == 2
    basis = kernel(QQ, m)
    assert len(basis) == 1
    assert QQ.is_zero(m @ basis[0])
    assert not is_invertible(QQ, m)

    square = QQ.array([[2, 1], [1, 1]])
    inverse = solve_invert(QQ, square)
    assert_array_equal(square @ inverse, QQ.eye(2))


def test_fraction_free_inverse_over_q():
    assert_array_equal(solve_invert(QQ, [[2, 1], [1, 1]]), QQ.array([[1, -1], [-1, 2]]))
    # the zero leading entry forces a row swap
    m = QQ.array([["0", "1/2"], ["1/3", "1"]])
    assert_array_equal(solve_invert(QQ, m), QQ.array([[-6, 3], [2, 0]]))
    hilbert = QQ.array([[Fraction(1, i + j + 1) for j in range(3)] for i in range(3)])
    expected = QQ.array([[9, -36, 30], [-36, 192, -180], [30, -180, 180]])
    assert_array_equal(solve_invert(QQ, hilbert), expected)
    with pytest.raises(NotInvertible) as info:
        solve_invert(QQ, [[1, 1], [2, 2]])
    assert info.value.rank == 1


def test_inverse_over_gf3():
    gf3 = get_field("gf3")
    m = gf3.array([[1, 1], [0, 2]])
    assert_array_equal(m @ solve_invert(gf3, m), gf3.eye(2))
    with pytest.raises(NotInvertible):
        solve_invert(gf3, gf3.array([[1, 2], [2, 1]]))


def test_rank_over_gf2():
    gf2 = get_field("gf2")
    m = gf2.array([[1, 1], [1, 1]])
    assert rank(gf2, m) == 1
    assert len(kernel(gf2, m)) == 1


def test_act_on_axis_matches_einsum():
    t = np.arange(8).reshape(2, 2, 2)
    m = np.array([[1, 2], [3, 4]])
    assert_array_equal(act_on_axis(t, m, 1), np.einsum("bj,ajc->abc", m, t))
