from antileibniz.bialgebra import check_bialgebra, dual_bialgebra
from antileibniz.serialization import save
from antileibniz.tensorconstruct import catalog
from antileibniz.yangbaxter import classify_r, double_bialgebra

import logging
import os


# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format="%(message)s"
)

logger = logging.getLogger(__name__)

# Bialgebras and the coproduct scalings to try
bialgebras = {
    "lambda21_bialgebra": [1, 2, -1],
    "square_zero3_bialgebra": [1, 3],
}

output_path = "doubles/"
if not os.path.isdir(output_path):
    os.makedirs(output_path, exist_ok=True)

for name, scalings in bialgebras.items():
    for k in scalings:
        B = catalog(name, k=k)

        # The dual bialgebra should pass as well
        dual_report = check_bialgebra(dual_bialgebra(B))
        logger.info(f"{name} (k={k}) dual: {dual_report.verdict}")

        # Double with its canonical r-matrix
        result = double_bialgebra(B)
        logger.info(result.report.render())

        c = classify_r(result.double.alg, result.rtilde)
        logger.info(f"quasi-triangular={c.quasi_triangular}, "
                    f"factorizable={c.factorizable}")

        save(result.double, f"{output_path}{name}_k{k}_double.json")
