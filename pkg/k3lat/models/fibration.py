"""
Genus-one fibration models for k3lat
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from .binform import BinForm
from .lattice import Lattice

G2_DEGREE = 8
G3_DEGREE = 12


@dataclass(frozen=True)
class WeierstrassModel:
    """
    Weierstrass data (g2, g3) in H^0(O(8)) + H^0(O(12)) on P^1

    Attributes:
        g2: Binary form of degree 8
        g3: Binary form of degree 12

    Example:
        >>> w = WeierstrassModel.from_dict(
        ...     {"g2": ["1"] + ["0"] * 7 + ["1"], "g3": ["0"] * 12 + ["1"]}
        ... )
    """

    g2: BinForm
    g3: BinForm

    def validate(self) -> None:
        """
        Validate the form degrees

        Raises:
            ValueError: If g2 is not of degree 8 or g3 not of degree 12
        """
        if self.g2.degree != G2_DEGREE:
            raise ValueError(f"g2 must have degree {G2_DEGREE}, got {self.g2.degree}")
        if self.g3.degree != G3_DEGREE:
            raise ValueError(f"g3 must have degree {G3_DEGREE}, got {self.g3.degree}")

    def to_dict(self) -> Dict[str, Any]:
        return {"g2": self.g2.to_list(), "g3": self.g3.to_list()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WeierstrassModel":
        """
        Create from {"g2": [c0..c8], "g3": [c0..c12]} (rational strings or ints)

        Raises:
            ValueError: If a key is missing
        """
        for key in ("g2", "g3"):
            if key not in data:
                raise ValueError(f"Weierstrass data is missing {key!r}")
        return cls(BinForm.from_list(data["g2"]), BinForm.from_list(data["g3"]))


@dataclass(frozen=True)
class FibrationData:
    """
    Picard lattice with a genus-one fiber class

    Attributes:
        ns: Neron-Severi lattice
        fiber: Coordinates of the fiber class f, with <f, f> = 0
        label: Optional family name
    """

    ns: Lattice
    fiber: Tuple[int, ...]
    label: Optional[str] = None

    def validate(self) -> None:
        from ..utils.validators import validate_vector_length

        validate_vector_length(self.fiber, self.ns.rank, "fiber")

    def to_dict(self) -> Dict[str, Any]:
        result = {"ns": self.ns.to_dict(), "fiber": list(self.fiber), "label": self.label}
        return {k: v for k, v in result.items() if v is not None}
