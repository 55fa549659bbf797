from .criteria import (
    OmegaForm,
    SemidirectSolution,
    omega_form,
    relative_rb_to_semidirect_solution,
    sharp_rb_criteria,
)
from .factorizable import (
    DescendentBialgebra,
    delta_I_bialgebra,
    factorizable_to_rb,
    rb_to_factorizable,
)
from .operators import (
    RelativeRB,
    SkewQuadraticRB,
    WeightedRB,
    check_rb_weight,
    check_relative_rb,
    check_skew_quadratic,
    descendent_product,
    rb_involution,
)

__all__ = [
    "DescendentBialgebra",
    "OmegaForm",
    "RelativeRB",
    "SemidirectSolution",
    "SkewQuadraticRB",
    "WeightedRB",
    "check_rb_weight",
    "check_relative_rb",
    "check_skew_quadratic",
    "delta_I_bialgebra",
    "descendent_product",
    "factorizable_to_rb",
    "omega_form",
    "rb_involution",
    "rb_to_factorizable",
    "relative_rb_to_semidirect_solution",
    "sharp_rb_criteria",
]
