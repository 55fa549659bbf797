import numpy as np
import pytest

from antileibniz.algebra import Algebra
from antileibniz.errors import BadParameter, BudgetExceeded
from antileibniz.search import (
    DEFAULT_BUDGET,
    StructureSearcher,
    certify_symmetric_solutions,
    default_budget,
    enumerate_structures,
    find_symmetric_solutions,
    general_linear_group,
    independent_anti_leibniz,
    orbit_classify,
    orbit_report,
    orbit_table,
)


def test_dimension_one_over_gf2_only_zero():
    algebras = enumerate_structures("GF(2)", 1, workers=1)
    assert len(algebras) == 1
    assert algebras[0] == Algebra.zero(1, "GF(2)")


def test_idempotent_survives_in_characteristic_three():
    # e(ee) + (ee)e + e(ee) = 3e
    algebras = enumerate_structures("GF(3)", 1, workers=1)
    assert len(algebras) == 3


def test_dimension_two_over_gf2():
    result = StructureSearcher("GF(2)", 2, workers=2, chunk_size=32).search()
    assert result.candidates == 256
    assert result.second_pass
    assert result.report().holds
    assert result.indices == sorted(result.indices)
    assert result.indices[0] == 0
    # e1 e1 = e2 is the free entry (0, 0, 1), weight 2^6
    assert 64 in result.indices
    summary = result.summary()
    assert list(summary.columns) == ["index", "commutative", "products", "algebra"]
    assert len(summary) == len(result.algebras)


def test_worker_count_does_not_change_result():
    one = StructureSearcher("GF(2)", 2, workers=1).search()
    many = StructureSearcher("GF(2)", 2, workers=4, chunk_size=16).search()
    assert one.indices == many.indices


def test_mask_restricts_candidates():
    mask = np.zeros((2, 2, 2), dtype=bool)
    mask[0, 0, 1] = True
    result = StructureSearcher("GF(3)", 2, mask=mask, workers=1).search()
    assert result.candidates == 3
    assert result.indices == [0, 1, 2]


def test_bad_mask_and_field():
    with pytest.raises(BadParameter):
        StructureSearcher("GF(2)", 2, mask=np.ones((3, 3, 3), dtype=bool))
    with pytest.raises(BadParameter):
        StructureSearcher("Q", 2)
    with pytest.raises(BadParameter):
        StructureSearcher("GF(2)", 0)


def test_independent_verifier():
    assert independent_anti_leibniz([[[1]]], 3)
    assert not independent_anti_leibniz([[[1]]], 2)
    assert independent_anti_leibniz([[[0, 1], [0, 0]], [[0, 0], [0, 0]]], 5)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        StructureSearcher("GF(2)", 3, budget=1000).search()
    with pytest.raises(BudgetExceeded):
        general_linear_group("GF(3)", 3, budget=1000)


def test_budget_from_environment(monkeypatch):
    monkeypatch.delenv("ALEIB_BUDGET", raising=False)
    assert default_budget() == DEFAULT_BUDGET
    monkeypatch.setenv("ALEIB_BUDGET", "100")
    assert default_budget() == 100
    with pytest.raises(BudgetExceeded):
        StructureSearcher("GF(2)", 2).search()
    monkeypatch.setenv("ALEIB_BUDGET", "many")
    with pytest.raises(BadParameter):
        default_budget()


def test_general_linear_group_gf2():
    group = general_linear_group("GF(2)", 2)
    assert len(group) == 6
    for g, g_inverse in group:
        assert ((g @ g_inverse) % 2 == np.eye(2, dtype=int)).all()


def test_orbits_in_dimension_one():
    representatives = orbit_classify(enumerate_structures("GF(3)", 1, workers=1), "GF(3)")
    assert [int(A.sc[0, 0, 0]) for A in representatives] == [0, 1]
    report = orbit_report(representatives, "GF(3)")
    assert report.holds
    assert "2 orbits" in report.notes
    assert len(orbit_table(representatives)) == 2


def test_orbit_report_flags_noncommutative():
    A = Algebra.from_products(2, {(1, 2): {1: 1}}, field="GF(2)")
    report = orbit_report([Algebra.zero(2, "GF(2)"), A], "GF(2)")
    assert not report.holds
    assert report.witness == [2]


def test_orbit_classify_mixed_dimensions():
    with pytest.raises(BadParameter):
        orbit_classify([Algebra.zero(1, "GF(2)"), Algebra.zero(2, "GF(2)")], "GF(2)")


def test_symmetric_solutions_of_lambda21():
    A = Algebra.from_products(2, {(1, 1): {2: 1}}, field="GF(3)")
    solutions = find_symmetric_solutions(A)
    coefficients = [r.coeff.tolist() for r in solutions]
    assert coefficients[0] == [[0, 0], [0, 0]]
    assert [[0, 1], [1, 0]] in coefficients
    assert certify_symmetric_solutions(A, solutions).holds


def test_symmetric_search_budget():
    A = Algebra.zero(3, "GF(3)")
    with pytest.raises(BudgetExceeded):
        find_symmetric_solutions(A, budget=10)
