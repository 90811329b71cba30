"""caustica: the zero-sum law for signed magnifications at generic caustics.

For every one of the eleven generic caustic singularities (up to five
control parameters), the signed magnifications of all pre-images of a
source point sum to zero.  This package carries the singularity catalog as
exact data, proves the sum law per instance by exact coset algebra, and
cross-checks it numerically through root-finding.
"""

from .catalog import ADE_LABELS, SingularityDef, SingularityId, get, load_catalog
from .config import Tolerances
from .coset import (
    CoefficientTable,
    CosetRep,
    NewtonSums,
    coefficient_table,
    euler_trace,
    newton_sums_coset,
    newton_sums_recursive,
)
from .errors import CausticaError
from .poly import BiPoly, Polynomial, RationalFunc, roots
from .scan import ScanGrid, find_max_region, scan
from .solver import MagReport, PreImage, magnification_sum, preimages, run_batch

__all__ = [
    "ADE_LABELS",
    "BiPoly",
    "CausticaError",
    "CoefficientTable",
    "CosetRep",
    "MagReport",
    "NewtonSums",
    "Polynomial",
    "PreImage",
    "RationalFunc",
    "ScanGrid",
    "SingularityDef",
    "SingularityId",
    "Tolerances",
    "coefficient_table",
    "euler_trace",
    "find_max_region",
    "get",
    "load_catalog",
    "magnification_sum",
    "newton_sums_coset",
    "newton_sums_recursive",
    "preimages",
    "roots",
    "run_batch",
    "scan",
]

__version__ = "0.1.0"
