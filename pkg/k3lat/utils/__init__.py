"""
Utility functions for k3lat
"""

from .serialization import (
    canonical_json,
    to_jsonable,
    parse_json,
    load_json_file,
    parse_lattice,
    parse_rows,
    parse_vector,
    parse_mukai_vector,
    parse_isometry,
    parse_weierstrass,
)
from .validators import (
    ensure_valid,
    validate_int,
    validate_positive_int,
    validate_nonzero_int,
    validate_rows,
    validate_square,
    validate_symmetric,
    validate_vector_length,
    validate_series_name,
    validate_partition,
)

__all__ = [
    "canonical_json",
    "to_jsonable",
    "parse_json",
    "load_json_file",
    "parse_lattice",
    "parse_rows",
    "parse_vector",
    "parse_mukai_vector",
    "parse_isometry",
    "parse_weierstrass",
    "ensure_valid",
    "validate_int",
    "validate_positive_int",
    "validate_nonzero_int",
    "validate_rows",
    "validate_square",
    "validate_symmetric",
    "validate_vector_length",
    "validate_series_name",
    "validate_partition",
]
