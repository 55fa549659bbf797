import numpy as np
import pytest

from antileibniz.algebra import Algebra, BilinearForm, check_anti_leibniz
from antileibniz.bialgebra import Coalgebra
from antileibniz.errors import DimensionMismatch, PreconditionViolated
from antileibniz.pairs import (
    Bimodule,
    MatchedPairData,
    check_bimodule,
    check_bimodule_consequence,
    check_matched_pair,
    coregular_bimodule,
    coregular_pair,
    crossed_product,
    form_bimodule_isomorphism,
    regular_bimodule,
    semidirect_product,
    standard_manin_triple,
)
from antileibniz.pairs.bimodule import random_bimodule
from antileibniz.suites import random_anti_leibniz, random_coalgebra


def test_regular_and_coregular_bimodules(lambda21, lambda22, noncommutative3):
    for A in (lambda21, lambda22, noncommutative3):
        for M in (regular_bimodule(A), coregular_bimodule(A)):
            assert check_bimodule(M).holds
            assert check_bimodule_consequence(M)


def test_regular_bimodule_needs_anti_leibniz(idempotent1):
    with pytest.raises(PreconditionViolated):
        regular_bimodule(idempotent1)


def test_semidirect_product_matches_bimodule_check(rng):
    for _ in range(60):
        A = random_anti_leibniz(rng, int(rng.integers(1, 4)))
        M = random_bimodule(A, int(rng.integers(1, 3)), rng)
        bimodule = check_bimodule(M).holds
        assert bimodule == check_anti_leibniz(semidirect_product(M)).holds
        if bimodule:
            assert check_bimodule_consequence(M)


def test_bimodule_shape_errors(lambda21):
    with pytest.raises(DimensionMismatch):
        Bimodule(lambda21, np.zeros((2, 2, 2), dtype=int), np.zeros((2, 3, 3), dtype=int))


def test_coregular_pair_of_a_bialgebra(lambda21_bialgebra):
    B = lambda21_bialgebra
    D = coregular_pair(B.alg, B.coa)
    report = check_matched_pair(D)
    assert report.holds
    assert len([c for c in report.clauses if c.name.startswith("matched pair equation")]) == 6
    assert check_anti_leibniz(crossed_product(D)).holds


def test_crossed_product_matches_matched_pair_check(rng):
    for _ in range(60):
        dim = int(rng.integers(1, 4))
        A = random_anti_leibniz(rng, dim)
        D = coregular_pair(A, random_coalgebra(rng, dim))
        assert check_matched_pair(D).holds == check_anti_leibniz(crossed_product(D)).holds


def test_trivial_pair_gives_direct_sum(lambda21, noncommutative3):
    D = MatchedPairData.trivial(lambda21, noncommutative3)
    assert check_matched_pair(D).holds
    assert crossed_product(D) == lambda21.direct_sum(noncommutative3)


def test_strict_matched_pair_raises_on_bad_component(lambda21, idempotent1):
    # B = Q e with e e = e is not anti-Leibniz
    D = MatchedPairData.trivial(lambda21, idempotent1)
    assert check_matched_pair(D).clause("B anti-Leibniz").holds is False
    with pytest.raises(PreconditionViolated):
        check_matched_pair(D, strict=True)


def test_standard_manin_triple(lambda21_bialgebra, broken_bialgebra):
    good = standard_manin_triple(lambda21_bialgebra.alg, lambda21_bialgebra.coa)
    assert good.report.holds
    assert good.total.dim == 4

    bad = standard_manin_triple(broken_bialgebra.alg, broken_bialgebra.coa)
    assert bad.report.clause("dual algebra anti-Leibniz").holds
    assert bad.report.clause("total anti-Leibniz").holds is False


def test_form_bimodule_isomorphism_on_manin_triple(lambda21_bialgebra):
    triple = standard_manin_triple(lambda21_bialgebra.alg, lambda21_bialgebra.coa)
    report = form_bimodule_isomorphism(triple.total, triple.form)
    assert report.holds
    assert report.clause("intertwines regular and coregular").holds


def test_form_bimodule_isomorphism_detects_non_invariant_form():
    A = Algebra.from_products(2, {(1, 1): {2: 1}})
    report = form_bimodule_isomorphism(A, BilinearForm([[0, 1], [-1, 0]]))
    assert report.clause("invariant agrees with intertwining").holds
    assert report.clause("intertwines regular and coregular").holds is False
