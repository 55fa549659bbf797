from .catalog import (
    AS_QUOTED,
    FIXTURES,
    OPPOSITE,
    QUOTED_TABLES,
    Fixture,
    QuotedTable,
    RMatrixFixture,
    catalog,
    list_fixtures,
    quoted_induced_table,
    shipped_in_quoted_labels,
)
from .construct import (
    QuadraticAA,
    aa_policy_report,
    check_quadratic_aa,
    coalgebra_policy_report,
    induced_bialgebra,
    product_coproduct_defect,
    quadratic_dual_coalgebra,
    tensor_algebra,
    tensor_coalgebra,
)
from .leibniz import (
    LeibnizBialgebra,
    check_leibniz_bialgebra,
    check_leibniz_coalgebra,
)

__all__ = [
    "AS_QUOTED",
    "FIXTURES",
    "Fixture",
    "LeibnizBialgebra",
    "OPPOSITE",
    "QUOTED_TABLES",
    "QuadraticAA",
    "QuotedTable",
    "RMatrixFixture",
    "aa_policy_report",
    "catalog",
    "check_leibniz_bialgebra",
    "check_leibniz_coalgebra",
    "check_quadratic_aa",
    "coalgebra_policy_report",
    "induced_bialgebra",
    "list_fixtures",
    "product_coproduct_defect",
    "quadratic_dual_coalgebra",
    "quoted_induced_table",
    "shipped_in_quoted_labels",
    "tensor_algebra",
    "tensor_coalgebra",
]
