"""
Family catalog models for k3lat
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from .lattice import Lattice


@dataclass(frozen=True)
class FamilySpec:
    """
    A K3 family with its Picard data

    Attributes:
        name: Catalog name (M, M_alpha, M_beta, Y, J0, J3)
        ns: Picard lattice of the generic member
        polarization: Coordinates of the polarization class
        degree: Self-intersection of the polarization
        ambient_dim: n of the projective space P^n
        fiber: Optional genus-one fiber class
        description: Human-readable description of the family
    """

    name: str
    ns: Lattice
    polarization: Tuple[int, ...]
    degree: int
    ambient_dim: int
    fiber: Optional[Tuple[int, ...]] = None
    description: Optional[str] = None

    def validate(self) -> None:
        """
        Validate the polarization degree and fiber isotropy

        Raises:
            ValueError: If <polarization, polarization> != degree or the fiber is not isotropic
        """
        from ..utils.validators import validate_positive_int, validate_vector_length

        validate_vector_length(self.polarization, self.ns.rank, "polarization")
        validate_positive_int(self.ambient_dim, "ambient_dim")
        square = self.ns.norm(self.polarization)
        if square != self.degree:
            raise ValueError(
                f"{self.name}: polarization has square {square}, declared degree {self.degree}"
            )
        if self.fiber is not None:
            validate_vector_length(self.fiber, self.ns.rank, "fiber")
            if self.ns.norm(self.fiber) != 0:
                raise ValueError(f"{self.name}: fiber class is not isotropic")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary, removing None values"""
        result = {
            "name": self.name,
            "ns": self.ns.to_dict(),
            "polarization": list(self.polarization),
            "degree": self.degree,
            "ambient_dim": self.ambient_dim,
            "fiber": list(self.fiber) if self.fiber is not None else None,
            "description": self.description,
        }
        return {k: v for k, v in result.items() if v is not None}


@dataclass(frozen=True)
class SeriesId:
    """
    Member of a projective series: X3k(k), X3k1(l), X3k2(m) or Y4m5(m)

    Attributes:
        series: Series name
        parameter: Series parameter (>= 1)
    """

    series: str
    parameter: int

    def validate(self) -> None:
        from ..utils.validators import validate_positive_int, validate_series_name

        validate_series_name(self.series)
        validate_positive_int(self.parameter, "parameter")

    def to_dict(self) -> Dict[str, Any]:
        return {"series": self.series, "parameter": self.parameter}


@dataclass(frozen=True, order=True)
class CorrespondencePair:
    """
    Parameter pair whose polarization degrees have a square product

    Attributes:
        k: First series parameter
        l: Second series parameter
        lam: Positive square root of the degree product
    """

    k: int
    l: int  # noqa: E741
    lam: int

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "l": self.l, "lambda": self.lam}
