from antileibniz.algebra import check_anti_leibniz, check_leibniz, check_right_leibniz
from antileibniz.bialgebra import check_bialgebra
from antileibniz.serialization import save
from antileibniz.tensorconstruct import (
    catalog,
    check_leibniz_bialgebra,
    check_quadratic_aa,
    list_fixtures,
)
from antileibniz.yangbaxter import classify_r

import logging
import os


# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format="%(message)s"
)

fh = logging.FileHandler('check_catalog.log')
fh.setLevel(logging.INFO)

logger = logging.getLogger(__name__)
logger.addHandler(fh)

# Checks per fixture kind
checks = {
    "algebra": check_anti_leibniz,
    "leibniz": check_leibniz,
    "right_leibniz": check_right_leibniz,
    "quadratic": check_quadratic_aa,
    "bialgebra": check_bialgebra,
    "leibniz_bialgebra": check_leibniz_bialgebra,
}

output_path = "catalog/"
if not os.path.isdir(output_path):
    os.makedirs(output_path, exist_ok=True)

fixtures = list_fixtures()
logger.info(f"Fixtures:\n{fixtures.to_string(index=False)}")

failures = {}

for name, kind in zip(fixtures["name"], fixtures["kind"]):
    value = catalog(name)

    if kind == "rmatrix":
        c = classify_r(value.algebra, value.r)
        holds = c.is_solution
        logger.info(f"{name}: solution={c.is_solution}, triangular={c.triangular}")
    else:
        report = checks[kind](value)
        holds = report.holds
        logger.info(report.render())

    if not holds:
        failures[name] = kind

    # Save the fixture as a canonical document
    save(value, f"{output_path}{name}.json")

if failures:
    logger.error(f"Failing fixtures:\n{failures}")
