from antileibniz.search import StructureSearcher, orbit_classify, orbit_report, orbit_table

import logging
import os


# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format="%(message)s"
)

fh = logging.FileHandler('search_small_fields.log')
fh.setLevel(logging.INFO)

logger = logging.getLogger(__name__)
logger.addHandler(fh)

# (field, dimension) pairs to enumerate
searches = [
    ("GF(2)", 1),
    ("GF(3)", 1),
    ("GF(2)", 2),
    ("GF(3)", 2),
]

output_path = "search/"
if not os.path.isdir(output_path):
    os.makedirs(output_path, exist_ok=True)

for field, dim in searches:
    searcher = StructureSearcher(field, dim, workers=4)
    result = searcher.search()
    logger.info(result.report().render())

    representatives = orbit_classify(result.algebras, field)
    logger.info(orbit_report(representatives, field).render())

    orbit_table(representatives).to_csv(
        path_or_buf=f"{output_path}orbits_{searcher.field.name}_dim{dim}.csv",
        sep=",",
        index=False
    )
