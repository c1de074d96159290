"""
Command handlers for the k3lat CLI
"""

from .families import FamiliesCommand
from .hodge import HodgeCommand
from .lattice import LatticeCommand
from .mukai import MukaiCommand
from .reproduce import ReproduceCommand
from .weierstrass import WeierstrassCommand

__all__ = [
    "FamiliesCommand",
    "HodgeCommand",
    "LatticeCommand",
    "MukaiCommand",
    "ReproduceCommand",
    "WeierstrassCommand",
]
