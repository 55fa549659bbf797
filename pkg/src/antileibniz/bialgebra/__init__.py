from .bialgebra import (
    BIALGEBRA,
    Bialgebra,
    CrosscheckResult,
    check_bialgebra,
    compatibility_defects,
    dual_bialgebra,
    equivalence_crosscheck,
    is_bialgebra_homomorphism,
    require_bialgebra,
)
from .coalgebra import (
    Coalgebra,
    check_anticocomm_anticoassoc,
    check_coalgebra,
    dual_algebra,
    dual_coalgebra,
)

__all__ = [
    "BIALGEBRA",
    "Bialgebra",
    "Coalgebra",
    "CrosscheckResult",
    "check_anticocomm_anticoassoc",
    "check_bialgebra",
    "check_coalgebra",
    "compatibility_defects",
    "dual_algebra",
    "dual_bialgebra",
    "dual_coalgebra",
    "equivalence_crosscheck",
    "is_bialgebra_homomorphism",
    "require_bialgebra",
]
