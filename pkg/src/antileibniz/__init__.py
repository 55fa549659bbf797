__version__ = "0.1.0"
__author__ = "Thomas R. Holy"

from .algebra import Algebra, check_anti_leibniz
from .bialgebra import Bialgebra, Coalgebra, check_bialgebra, check_coalgebra
from .core import QQ, get_field
from .errors import AntiLeibnizError
from .pairs import MatchedPairData, check_matched_pair
from .report import Report
from .serialization import dumps, load, loads, save
from .tensorconstruct import catalog
from .yangbaxter import Tensor2, classify_r
