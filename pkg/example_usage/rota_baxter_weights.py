from antileibniz.algebra import check_anti_leibniz
from antileibniz.rotabaxter import WeightedRB, check_rb_weight, descendent_product
from antileibniz.tensorconstruct import catalog

import logging


# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format="%(message)s"
)

logger = logging.getLogger(__name__)

A = catalog("Lambda2_2", a=1, b=1)

# R = -lambda id is a Rota-Baxter operator of weight lambda
weights = [1, -1, 2, "1/2"]

for weight in weights:
    X = WeightedRB(A, A.field.eye(A.dim) * -A.field.element(weight), weight)
    report = check_rb_weight(X)
    logger.info(report.render())

    if report.holds:
        descendent = descendent_product(X)
        logger.info(f"descendent anti-Leibniz: {check_anti_leibniz(descendent).holds}")
