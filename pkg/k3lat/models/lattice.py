"""
Lattice models for k3lat
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from sympy import ImmutableMatrix, Integer, igcd


@dataclass(frozen=True)
class Lattice:
    """
    Free abelian group with an integral symmetric bilinear form

    Attributes:
        gram: Symmetric integer Gram matrix in the chosen basis
        label: Optional display name ("K3", "U", ...); not part of equality

    Example:
        >>> u = Lattice([[0, 1], [1, 0]], label="U")
        >>> u.rank
        2
    """

    gram: ImmutableMatrix
    label: Optional[str] = None

    def __post_init__(self):
        from ..exact import int_matrix
        from ..utils.validators import ensure_valid

        object.__setattr__(self, "gram", int_matrix(self.gram))
        ensure_valid(self)

    def validate(self) -> None:
        """
        Validate the Gram matrix

        Raises:
            ValueError: If the Gram matrix is not square and symmetric
        """
        from ..utils.validators import validate_symmetric

        validate_symmetric(self.gram, "gram")

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    @property
    def rank(self) -> int:
        return self.gram.rows

    @property
    def is_even(self) -> bool:
        """All diagonal entries even (computed, never asserted)"""
        return all(self.gram[i, i] % 2 == 0 for i in range(self.rank))

    def pair(self, x: Any, y: Any) -> Any:
        """Bilinear form on coordinate vectors"""
        from ..exact import as_rat

        return sum(
            (as_rat(x[i]) * self.gram[i, j] * as_rat(y[j])
             for i in range(self.rank) for j in range(self.rank)
             if x[i] != 0 and y[j] != 0),
            Integer(0),
        )

    def norm(self, x: Any) -> Any:
        return self.pair(x, x)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the JSON lattice format"""
        return {"rank": self.rank, "gram": self.gram.tolist()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Lattice":
        """
        Create from the JSON lattice format {"rank": n, "gram": [[...]]}

        Raises:
            ValueError: If the declared rank disagrees with the Gram matrix
        """
        from ..exact import int_matrix

        gram = int_matrix(data["gram"], 0)
        if "rank" in data and data["rank"] != gram.rows:
            raise ValueError(f"rank {data['rank']} does not match a {gram.rows}x{gram.cols} gram")
        return cls(gram, label=data.get("label"))


@dataclass(frozen=True)
class Embedding:
    """
    Sublattice given by basis rows in ambient coordinates

    Attributes:
        ambient: Ambient lattice
        basis: k x rank(ambient) integer matrix with linearly independent rows
    """

    ambient: Lattice
    basis: ImmutableMatrix

    def __post_init__(self):
        from ..exact import int_matrix
        from ..utils.validators import ensure_valid

        object.__setattr__(self, "basis", int_matrix(self.basis, self.ambient.rank))
        ensure_valid(self)

    def validate(self) -> None:
        """
        Validate shape and independence of the basis rows

        Raises:
            ValueError: If validation fails
        """
        if self.basis.cols != self.ambient.rank:
            raise ValueError(
                f"Basis rows have {self.basis.cols} coordinates, ambient rank is {self.ambient.rank}"
            )
        if self.basis.rows and self.basis.rank() != self.basis.rows:
            raise ValueError("Basis rows must be linearly independent")

    @property
    def rank(self) -> int:
        return self.basis.rows

    @property
    def gram(self) -> ImmutableMatrix:
        """Induced Gram matrix basis * G * basis^T"""
        return ImmutableMatrix(self.basis * self.ambient.gram * self.basis.T)

    def sublattice(self, label: Optional[str] = None) -> Lattice:
        return Lattice(self.gram, label=label)

    def canonical(self) -> ImmutableMatrix:
        """Row HNF of the basis; equal for equal sublattices"""
        from ..exact import hnf, nonzero_rows

        if self.rank == 0:
            return self.basis
        return nonzero_rows(hnf(self.basis)[0])

    def same_lattice(self, other: "Embedding") -> bool:
        return self.ambient == other.ambient and self.canonical() == other.canonical()

    def to_dict(self) -> Dict[str, Any]:
        return {"ambient": self.ambient.to_dict(), "basis": self.basis.tolist()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Embedding":
        """Create from {"ambient": <lattice or name>, "basis": [[...]]}"""
        from ..utils.serialization import parse_lattice

        ambient = parse_lattice(data["ambient"])
        return cls(ambient, data["basis"])


@dataclass(frozen=True)
class Character:
    """
    Finite-order character T -> Z/n, an element of T^dual tensor Q/Z

    Attributes:
        domain: Lattice on which the character is defined
        modulus: n >= 1
        values: Value on each basis vector, stored reduced mod n

    Example:
        >>> c = Character(Lattice([[1, 0], [0, 1]]), 4, (2, 6))
        >>> c.values, c.order
        ((2, 2), 2)
    """

    domain: Lattice
    modulus: int
    values: Tuple[int, ...]

    def __post_init__(self):
        from ..utils.validators import ensure_valid

        ensure_valid(self)
        object.__setattr__(self, "modulus", int(self.modulus))
        object.__setattr__(self, "values", tuple(int(v) % self.modulus for v in self.values))

    def validate(self) -> None:
        from ..utils.validators import validate_int, validate_positive_int, validate_vector_length

        validate_positive_int(self.modulus, "modulus")
        validate_vector_length(self.values, self.domain.rank, "character values")
        for v in self.values:
            validate_int(v, "character value")

    @property
    def order(self) -> int:
        """Exact order n / gcd(n, values)"""
        g = self.modulus
        for v in self.values:
            g = igcd(g, v)
        return self.modulus // g

    def reduced(self) -> "Character":
        """Same element of Q/Z written with its exact order as modulus"""
        factor = self.modulus // self.order
        return Character(self.domain, self.order, tuple(v // factor for v in self.values))

    def evaluate(self, vector: Any) -> int:
        """Value on an integer coordinate vector, reduced mod n"""
        return int(sum(int(a) * v for a, v in zip(vector, self.values))) % self.modulus

    def to_dict(self) -> Dict[str, Any]:
        return {
            "domain": self.domain.to_dict(),
            "modulus": self.modulus,
            "values": list(self.values),
        }
