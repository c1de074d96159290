"""
Rational isometry and period models for k3lat
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from sympy import ImmutableMatrix, Rational

from .lattice import Lattice


@dataclass(frozen=True)
class RationalIsometry:
    """
    Q-linear map between lattices preserving the forms

    The matrix maps source coordinate columns to target coordinate columns,
    so matrix^T * G_target * matrix = G_source. The invariant is checked at
    construction.

    Attributes:
        source: Source lattice
        target: Target lattice
        matrix: rank(target) x rank(source) rational matrix
    """

    source: Lattice
    target: Lattice
    matrix: ImmutableMatrix

    def __post_init__(self):
        from ..exact import rat_matrix
        from ..exceptions import K3LatPreconditionError
        from ..utils.validators import ensure_valid

        object.__setattr__(self, "matrix", rat_matrix(self.matrix, self.source.rank))
        ensure_valid(self)
        if not self.preserves_form():
            raise K3LatPreconditionError(
                "Matrix does not preserve the bilinear forms", operation="RationalIsometry"
            )

    def validate(self) -> None:
        """
        Validate the matrix shape

        Raises:
            ValueError: If the shape does not match the lattices
        """
        expected = (self.target.rank, self.source.rank)
        if self.matrix.shape != expected:
            raise ValueError(f"Isometry matrix has shape {self.matrix.shape}, expected {expected}")

    def preserves_form(self) -> bool:
        return self.matrix.T * self.target.gram * self.matrix == self.source.gram

    def apply(self, vector: Any) -> Tuple[Rational, ...]:
        """Image of a source coordinate vector"""
        from ..exact import as_rat

        column = ImmutableMatrix([as_rat(x) for x in vector])
        if self.source.rank == 0:
            return tuple(Rational(0) for _ in range(self.target.rank))
        return tuple(self.matrix * column)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "matrix": self.matrix.tolist(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RationalIsometry":
        """Create from {"source": ..., "target": ..., "matrix": [["p/q", ...], ...]}"""
        from ..exact import rat_matrix
        from ..utils.serialization import parse_lattice

        source = parse_lattice(data["source"])
        target = parse_lattice(data["target"])
        return cls(source, target, rat_matrix(data["matrix"], source.rank))


@dataclass(frozen=True)
class NormedVector:
    """
    Lattice vector together with the lattice it lives in

    Attributes:
        ambient: Lattice containing the vector
        coords: Integer coordinates in the ambient basis
    """

    ambient: Lattice
    coords: Tuple[int, ...]

    def __post_init__(self):
        from ..exact import as_int_vector
        from ..utils.validators import ensure_valid

        object.__setattr__(self, "coords", as_int_vector(self.coords))
        ensure_valid(self)

    def validate(self) -> None:
        from ..utils.validators import validate_vector_length

        validate_vector_length(self.coords, self.ambient.rank, "vector")

    @property
    def norm(self) -> int:
        return int(self.ambient.norm(self.coords))


@dataclass(frozen=True)
class PeriodPoint:
    """
    Rational period omega = x + i*y on a lattice

    A valid period satisfies <x,x> = <y,y>, <x,y> = 0 and <x,x> + <y,y> > 0.
    Validity is a query (is_period_point), not a construction invariant.

    Attributes:
        lattice: Lattice the period lives on
        re: Rational vector x
        im: Rational vector y
    """

    lattice: Lattice
    re: Tuple[Rational, ...]
    im: Tuple[Rational, ...]

    def __post_init__(self):
        from ..exact import as_rat_vector

        object.__setattr__(self, "re", as_rat_vector(self.re))
        object.__setattr__(self, "im", as_rat_vector(self.im))

    def validate(self) -> None:
        """
        Validate vector lengths

        Raises:
            ValueError: If x or y does not match the lattice rank
        """
        from ..utils.validators import validate_vector_length

        validate_vector_length(self.re, self.lattice.rank, "re")
        validate_vector_length(self.im, self.lattice.rank, "im")

    def to_dict(self) -> Dict[str, Any]:
        return {"lattice": self.lattice.to_dict(), "re": list(self.re), "im": list(self.im)}
