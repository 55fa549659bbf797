from .classify import (
    FactorizationImage,
    HomomorphismCriteria,
    RClassification,
    classify_r,
    factorization_decompose,
    factorization_image,
    homomorphism_criteria,
    skew_part_intertwines,
)
from .double import DoubleResult, double_bialgebra
from .rmatrix import (
    CoboundaryResiduals,
    Tensor2,
    coboundary_residuals,
    delta_r,
    dual_product_r,
    is_invariant,
    sharp,
    tau,
    ybe_bracket,
)

__all__ = [
    "CoboundaryResiduals",
    "DoubleResult",
    "FactorizationImage",
    "HomomorphismCriteria",
    "RClassification",
    "Tensor2",
    "classify_r",
    "coboundary_residuals",
    "delta_r",
    "double_bialgebra",
    "dual_product_r",
    "factorization_decompose",
    "factorization_image",
    "homomorphism_criteria",
    "is_invariant",
    "sharp",
    "skew_part_intertwines",
    "tau",
    "ybe_bracket",
]
