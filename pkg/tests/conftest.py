import numpy as np
import pytest

from antileibniz.algebra import Algebra
from antileibniz.bialgebra import Bialgebra, Coalgebra
from antileibniz.tensorconstruct import catalog


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def lambda21():
    return catalog("Lambda2_1")


@pytest.fixture
def lambda22():
    return catalog("Lambda2_2", a=1, b=1)


@pytest.fixture
def noncommutative3():
    return catalog("noncommutative3")


@pytest.fixture
def idempotent1():
    """e1 e1 = e1, the smallest algebra that is not anti-Leibniz."""
    return Algebra.from_products(1, {(1, 1): {1: 1}})


@pytest.fixture
def lambda21_bialgebra():
    return catalog("lambda21_bialgebra")


@pytest.fixture
def square_zero3_bialgebra():
    return catalog("square_zero3_bialgebra")


@pytest.fixture
def broken_bialgebra(lambda21):
    """Lambda2_1 with D(e2) = e1 (x) e1; the compatibility conditions fail."""
    return Bialgebra(lambda21, Coalgebra.from_coproducts(2, {2: {(1, 1): 1}}))


@pytest.fixture
def double_r():
    return catalog("lambda21_double_r")
