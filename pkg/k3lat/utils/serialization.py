"""
Canonical JSON encoding and input parsers for k3lat

Output is byte-stable: keys sorted, compact separators, non-integer
rationals as "p/q" strings and integers as JSON numbers only below 2^53.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Union

from ..constants import JSON_SAFE_INT_LIMIT
from ..exceptions import K3LatValidationError


def to_jsonable(value: Any) -> Any:
    """
    Convert library values to plain JSON types

    Example:
        >>> to_jsonable(Rational(1, 12))
        '1/12'
        >>> to_jsonable(2**60)
        '1152921504606846976'
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value if abs(value) < JSON_SAFE_INT_LIMIT else str(value)
    if isinstance(value, Fraction):
        value = _fraction_to_rational(value)
    if getattr(value, "is_Rational", False):
        if value.q == 1:
            return to_jsonable(int(value.p))
        return f"{value.p}/{value.q}"
    if getattr(value, "is_Matrix", False):
        return [[to_jsonable(x) for x in value.row(i)] for i in range(value.rows)]
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"Cannot serialize {type(value).__name__} exactly")


def _fraction_to_rational(value: Fraction) -> Any:
    from sympy import Rational

    return Rational(value.numerator, value.denominator)


def canonical_json(value: Any) -> str:
    """Serialize with sorted keys and compact separators"""
    return json.dumps(to_jsonable(value), separators=(",", ":"), sort_keys=True)


def parse_json(text: str, what: str = "input") -> Any:
    """
    Parse a JSON argument

    Raises:
        K3LatValidationError: If the text is not valid JSON
    """
    try:
        return json.loads(text)
    except (TypeError, ValueError) as e:
        raise K3LatValidationError(f"Malformed JSON for {what}: {e}")


def load_json_file(path: Union[str, Path]) -> Any:
    """Read and parse a JSON file"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise K3LatValidationError(f"Cannot read {path}: {e}")
    return parse_json(text, str(path))


def parse_lattice(spec: Any):
    """
    Accept a lattice name, a Gram list, or {"rank": n, "gram": [[...]]}

    Names: "E8neg", "U", "K3", "rank1:d". Strings that look like JSON are
    parsed first.
    """
    from ..lattice import standard
    from ..models.lattice import Lattice

    if isinstance(spec, Lattice):
        return spec
    if isinstance(spec, str):
        stripped = spec.strip()
        if stripped.startswith("[") or stripped.startswith("{"):
            return parse_lattice(parse_json(stripped, "lattice"))
        return standard(stripped)
    if isinstance(spec, list):
        return Lattice(spec)
    if isinstance(spec, dict) and "gram" in spec:
        try:
            return Lattice.from_dict(spec)
        except (KeyError, ValueError) as e:
            raise K3LatValidationError(f"Bad lattice: {e}")
    raise K3LatValidationError(f"Cannot read a lattice from {spec!r}")


def parse_rows(spec: Any, what: str = "matrix") -> List[List[Any]]:
    """Accept a JSON string or nested list of rows"""
    rows = parse_json(spec, what) if isinstance(spec, str) else spec
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise K3LatValidationError(f"{what} must be a list of rows")
    return rows


def parse_vector(spec: Any, what: str = "vector") -> List[Any]:
    """Accept a JSON list or a comma-separated string"""
    if isinstance(spec, str):
        stripped = spec.strip()
        if not stripped.startswith("["):
            stripped = f"[{stripped}]"
        spec = parse_json(stripped, what)
    if not isinstance(spec, list):
        raise K3LatValidationError(f"{what} must be a list")
    return spec


def parse_mukai_vector(spec: Any):
    """
    Accept "r,[c1...],s", a JSON list [r, [c1...], s] or {"r":..,"c1":..,"s":..}

    Example:
        >>> parse_mukai_vector("2,[1],2").coordinates()
        (2, 1, 2)
    """
    from ..models.mukai import MukaiVector

    if isinstance(spec, str):
        spec = parse_vector(spec, "Mukai vector")
    if isinstance(spec, dict):
        try:
            return MukaiVector.from_dict(spec)
        except KeyError as e:
            raise K3LatValidationError(f"Mukai vector is missing {e}")
    if isinstance(spec, list) and len(spec) == 3 and isinstance(spec[1], list):
        return MukaiVector(spec[0], tuple(spec[1]), spec[2])
    raise K3LatValidationError(f"Cannot read a Mukai vector from {spec!r}")


def parse_isometry(spec: Any):
    """{"source": ..., "target": ..., "matrix": [["p/q", ...], ...]}"""
    from ..models.hodge import RationalIsometry

    data = parse_json(spec, "isometry") if isinstance(spec, str) else spec
    try:
        return RationalIsometry.from_dict(data)
    except (KeyError, TypeError) as e:
        raise K3LatValidationError(f"Bad isometry: {e}")


def parse_weierstrass(spec: Any):
    """{"g2": [c0..c8], "g3": [c0..c12]}"""
    from ..models.fibration import WeierstrassModel
    from ..utils.validators import ensure_valid

    data = parse_json(spec, "Weierstrass model") if isinstance(spec, str) else spec
    if not isinstance(data, dict):
        raise K3LatValidationError("Weierstrass data must be an object with g2 and g3")
    try:
        model = WeierstrassModel.from_dict(data)
    except ValueError as e:
        raise K3LatValidationError(str(e))
    return ensure_valid(model)
