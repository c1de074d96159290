"""
Mukai vector models for k3lat
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from .lattice import Lattice


@dataclass(frozen=True)
class NSContext:
    """
    Neron-Severi lattice the c1 parts of Mukai vectors live in

    Attributes:
        ns: Algebraic classes with their intersection Gram (even on a K3)
    """

    ns: Lattice

    def validate(self) -> None:
        """
        Validate evenness

        Raises:
            ValueError: If the Gram matrix has an odd diagonal entry
        """
        if not self.ns.is_even:
            raise ValueError("NS lattice of a K3 surface must be even")

    def to_dict(self) -> Dict[str, Any]:
        return {"ns": self.ns.to_dict()}


@dataclass(frozen=True)
class MukaiVector:
    """
    Mukai vector (r, c1, s) in H^0 + NS + H^4

    Attributes:
        r: Rank part
        c1: Coordinates of the H^2 part in the NS basis
        s: H^4 part

    Example:
        >>> v = MukaiVector(2, (1,), 2)  # (2, H, 2) on <8>
        >>> v.coordinates()
        (2, 1, 2)
    """

    r: int
    c1: Tuple[int, ...]
    s: int

    def __post_init__(self):
        from ..utils.validators import ensure_valid

        ensure_valid(self)
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "c1", tuple(int(x) for x in self.c1))
        object.__setattr__(self, "s", int(self.s))

    def validate(self) -> None:
        """
        Validate integrality

        Raises:
            ValueError: If a coordinate is not an integer
        """
        from ..utils.validators import validate_int

        validate_int(self.r, "r")
        validate_int(self.s, "s")
        if not isinstance(self.c1, (list, tuple)):
            raise ValueError("c1 must be a list of integers")
        for x in self.c1:
            validate_int(x, "c1 entry")

    def coordinates(self) -> Tuple[int, ...]:
        """(r, c1..., s) as one integer vector"""
        return (self.r,) + self.c1 + (self.s,)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coordinates())

    def to_dict(self) -> Dict[str, Any]:
        return {"r": self.r, "c1": list(self.c1), "s": self.s}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MukaiVector":
        return cls(data["r"], tuple(data["c1"]), data["s"])
