"""
Data models for k3lat
"""

from .binform import BinForm
from .lattice import Lattice, Embedding, Character
from .hodge import RationalIsometry, NormedVector, PeriodPoint
from .mukai import MukaiVector, NSContext
from .fibration import WeierstrassModel, FibrationData
from .family import FamilySpec, SeriesId, CorrespondencePair
from .report import ReportEntry, IndexChainReport

__all__ = [
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
]
