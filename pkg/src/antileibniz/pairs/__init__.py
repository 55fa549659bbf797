from .bimodule import (
    Bimodule,
    check_bimodule,
    check_bimodule_consequence,
    coregular_bimodule,
    dual_bimodule,
    form_bimodule_isomorphism,
    regular_bimodule,
    semidirect_product,
)
from .matched import (
    ManinTriple,
    MatchedPairData,
    check_matched_pair,
    coregular_pair,
    crossed_product,
    pairing_form,
    standard_manin_triple,
)

__all__ = [
    "Bimodule",
    "ManinTriple",
    "MatchedPairData",
    "check_bimodule",
    "check_bimodule_consequence",
    "check_matched_pair",
    "coregular_bimodule",
    "coregular_pair",
    "crossed_product",
    "dual_bimodule",
    "form_bimodule_isomorphism",
    "pairing_form",
    "regular_bimodule",
    "semidirect_product",
    "standard_manin_triple",
]
