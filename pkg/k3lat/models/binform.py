"""
Binary form model for k3lat
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from sympy import Poly, QQ, Rational, Symbol

# Dehomogenizing variable (s = 1)
T = Symbol("t")


@dataclass(frozen=True)
class BinForm:
    """
    Homogeneous binary form c_0*t^d + c_1*t^(d-1)*s + ... + c_d*s^d over Q

    Leading zero coefficients encode vanishing at infinity (s = 0),
    trailing zeros encode vanishing at t = 0.

    Attributes:
        degree: Nominal degree d (the line bundle O(d) on P^1)
        coeffs: Exactly d + 1 rational coefficients

    Example:
        >>> g2 = BinForm(8, [1, 0, 0, 0, 0, 0, 0, 0, 1])  # t^8 + s^8
        >>> g2.valuation_at_infinity()
        0
    """

    degree: int
    coeffs: Tuple[Rational, ...]

    def __post_init__(self):
        from ..exact import as_rat
        from ..utils.validators import ensure_valid

        object.__setattr__(self, "coeffs", tuple(as_rat(c) for c in self.coeffs))
        ensure_valid(self)

    def validate(self) -> None:
        """
        Validate degree and coefficient count

        Raises:
            ValueError: If validation fails
        """
        from ..utils.validators import validate_int

        validate_int(self.degree, "degree")
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"A degree-{self.degree} form needs {self.degree + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, degree: int) -> "BinForm":
        return cls(degree, [0] * (degree + 1))

    @classmethod
    def one(cls) -> "BinForm":
        return cls(0, [1])

    @classmethod
    def monomial(cls, degree: int, s_power: int, coeff: Any = 1) -> "BinForm":
        """coeff * t^(degree - s_power) * s^s_power"""
        coeffs = [0] * (degree + 1)
        coeffs[s_power] = coeff
        return cls(degree, coeffs)

    @classmethod
    def from_poly(cls, poly: Poly, degree: Optional[int] = None) -> "BinForm":
        """
        Homogenize a univariate polynomial in t to a form of the given degree

        The missing degree is filled with powers of s (vanishing at infinity).
        """
        if poly.is_zero:
            return cls.zero(degree or 0)
        coeffs = list(poly.all_coeffs())
        own = len(coeffs) - 1
        if degree is None:
            degree = own
        if degree < own:
            raise ValueError(f"Cannot homogenize a degree-{own} polynomial to degree {degree}")
        return cls(degree, [0] * (degree - own) + coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_poly(self) -> Poly:
        """Dehomogenize at s = 1"""
        return Poly.from_list(list(self.coeffs), T, domain=QQ)

    def valuation_at_infinity(self) -> int:
        """Order of vanishing at s = 0 (number of leading zero coefficients)"""
        if self.is_zero():
            raise ValueError("The zero form has no finite valuation")
        count = 0
        for c in self.coeffs:
            if c != 0:
                break
            count += 1
        return count

    def leading_coefficient(self) -> Rational:
        """First nonzero coefficient"""
        for c in self.coeffs:
            if c != 0:
                return c
        return Rational(0)

    def normalize(self) -> "BinForm":
        """Scale so that the first nonzero coefficient is 1"""
        if self.is_zero():
            return self
        lead = self.leading_coefficient()
        return BinForm(self.degree, [c / lead for c in self.coeffs])

    def scale(self, factor: Any) -> "BinForm":
        from ..exact import as_rat

        factor = as_rat(factor)
        return BinForm(self.degree, [factor * c for c in self.coeffs])

    def __add__(self, other: "BinForm") -> "BinForm":
        if self.degree != other.degree:
            raise ValueError(f"Cannot add forms of degree {self.degree} and {other.degree}")
        return BinForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "BinForm":
        return self.scale(-1)

    def __sub__(self, other: "BinForm") -> "BinForm":
        return self + (-other)

    def __mul__(self, other: "BinForm") -> "BinForm":
        if not isinstance(other, BinForm):
            return self.scale(other)
        product = [Rational(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return BinForm(self.degree + other.degree, product)

    def __pow__(self, exponent: int) -> "BinForm":
        result = BinForm.one()
        for _ in range(exponent):
            result = result * self
        return result

    def derivative_t(self) -> "BinForm":
        """Partial derivative in t (degree d - 1; zero form for d = 0)"""
        if self.degree == 0:
            return BinForm.zero(0)
        d = self.degree
        return BinForm(d - 1, [c * (d - i) for i, c in enumerate(self.coeffs[:-1])])

    def derivative_s(self) -> "BinForm":
        """Partial derivative in s (degree d - 1; zero form for d = 0)"""
        if self.degree == 0:
            return BinForm.zero(0)
        return BinForm(
            self.degree - 1, [c * i for i, c in enumerate(self.coeffs) if i >= 1]
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"degree": self.degree, "coeffs": list(self.coeffs)}

    def to_list(self) -> List[Rational]:
        return list(self.coeffs)

    @classmethod
    def from_list(cls, coeffs: List[Any]) -> "BinForm":
        """Build a form whose degree is len(coeffs) - 1"""
        if not isinstance(coeffs, (list, tuple)) or not coeffs:
            raise ValueError("A binary form needs a non-empty coefficient list")
        return cls(len(coeffs) - 1, list(coeffs))
