from .algebra import Algebra
from .checks import (
    ANTI_LEIBNIZ,
    check_anti_leibniz,
    check_anticomm_antiassoc,
    check_leibniz,
    check_mock_lie,
    check_right_anti_leibniz,
    check_right_leibniz,
    left_triple_collapse_check,
    require_anti_leibniz,
    triple_products,
)
from .forms import BilinearForm, FormProperties, form_properties
from .maps import LinearMap, is_homomorphism

__all__ = [
    "ANTI_LEIBNIZ",
    "Algebra",
    "BilinearForm",
    "FormProperties",
    "LinearMap",
    "check_anti_leibniz",
    "check_anticomm_antiassoc",
    "check_leibniz",
    "check_mock_lie",
    "check_right_anti_leibniz",
    "check_right_leibniz",
    "form_properties",
    "is_homomorphism",
    "left_triple_collapse_check",
    "require_anti_leibniz",
    "triple_products",
]
