"""
k3lat

Exact integral-lattice computations for K3 surfaces: lattices and
discriminant groups, Brauer characters and their kernels, rational Hodge
isometries, Mukai vectors and moduli fineness, correspondence families and
Weierstrass models, with a machine-checked claim suite.
"""

from .exceptions import (
    K3LatError,
    K3LatValidationError,
    K3LatPreconditionError,
    K3LatConsistencyError,
)
from .models import (
    BinForm,
    Lattice,
    Embedding,
    Character,
    RationalIsometry,
    NormedVector,
    PeriodPoint,
    MukaiVector,
    NSContext,
    WeierstrassModel,
    FibrationData,
    FamilySpec,
    SeriesId,
    CorrespondencePair,
    ReportEntry,
    IndexChainReport,
)
from .lattice import standard, rank1, discriminant, discriminant_group, signature
from .reproduce import run_claims

__version__ = "0.1.0"

__all__ = [
    "K3LatError",
    "K3LatValidationError",
    "K3LatPreconditionError",
    "K3LatConsistencyError",
    "BinForm",
    "Lattice",
    "Embedding",
    "Character",
    "RationalIsometry",
    "NormedVector",
    "PeriodPoint",
    "MukaiVector",
    "NSContext",
    "WeierstrassModel",
    "FibrationData",
    "FamilySpec",
    "SeriesId",
    "CorrespondencePair",
    "ReportEntry",
    "IndexChainReport",
    "standard",
    "rank1",
    "discriminant",
    "discriminant_group",
    "signature",
    "run_claims",
]
