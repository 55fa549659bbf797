from .completed import (
    CompletedTensor2,
    GradedContext,
    affine_multiply,
    check_affine_algebra_window,
    check_completed_bialgebra_window,
    check_completed_coalgebra_window,
    compatibility_coefficient,
    compatibility_degrees,
    completed_coproduct,
)
from .graded import (
    LAURENT,
    GradedLine,
    check_graded_line_window,
    graded_for,
    is_invariant_form,
    laurent_dual_coproduct,
    laurent_form,
)

__all__ = [
    "LAURENT",
    "CompletedTensor2",
    "GradedContext",
    "GradedLine",
    "affine_multiply",
    "check_affine_algebra_window",
    "check_completed_bialgebra_window",
    "check_completed_coalgebra_window",
    "check_graded_line_window",
    "compatibility_coefficient",
    "compatibility_degrees",
    "completed_coproduct",
    "graded_for",
    "is_invariant_form",
    "laurent_dual_coproduct",
    "laurent_form",
]
