import numpy as np
import pytest

from antileibniz.algebra import check_anti_leibniz
from antileibniz.core import QQ, get_field
from antileibniz.core.linalg import is_invertible
from antileibniz.errors import BadParameter
from antileibniz.suites import (
    equivalence_suite,
    random_anti_leibniz,
    random_coalgebra,
    random_invertible,
)


@pytest.mark.parametrize("field", ["Q", "GF(5)"])
def test_random_algebras_are_anti_leibniz(rng, field):
    for _ in range(30):
        dim = int(rng.integers(1, 4))
        A = random_anti_leibniz(rng, dim, field)
        assert A.dim == dim
        assert A.field is get_field(field)
        assert check_anti_leibniz(A).holds


def test_random_algebra_dimension_range(rng):
    with pytest.raises(BadParameter):
        random_anti_leibniz(rng, 4)
    with pytest.raises(BadParameter):
        random_anti_leibniz(rng, 0)


def test_random_invertible(rng):
    for dim in (1, 2, 3):
        assert is_invertible(QQ, random_invertible(QQ, dim, rng))


def test_random_coalgebra_shape(rng):
    C = random_coalgebra(rng, 3)
    assert C.cc.shape == (3, 3, 3)


def test_same_seed_same_corpus():
    first = [random_anti_leibniz(np.random.default_rng(11), 3) for _ in range(3)]
    second = [random_anti_leibniz(np.random.default_rng(11), 3) for _ in range(3)]
    assert first == second


def test_suite_in_dimension_three():
    report = equivalence_suite(seed=5, count=20, dims=(3,))
    assert report.holds
    assert report.title == "bialgebra equivalence suite (seed 5)"


def test_suite_count_must_be_positive():
    with pytest.raises(BadParameter):
        equivalence_suite(count=0)
