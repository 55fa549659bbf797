from .searching import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    EXTRAPOLATION_NOTE,
    SearchResult,
    StructureSearcher,
    act,
    canonical_form,
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

__all__ = [
    "BUDGET_ENV",
    "DEFAULT_BUDGET",
    "EXTRAPOLATION_NOTE",
    "SearchResult",
    "StructureSearcher",
    "act",
    "canonical_form",
    "certify_symmetric_solutions",
    "default_budget",
    "enumerate_structures",
    "find_symmetric_solutions",
    "general_linear_group",
    "independent_anti_leibniz",
    "orbit_classify",
    "orbit_report",
    "orbit_table",
]
