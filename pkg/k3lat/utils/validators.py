"""
Validation utilities for k3lat
"""

from typing import Any, List, Sequence

from ..constants import SCHUBERT_BOX, SERIES_NAMES


def validate_int(value: Any, name: str = "value") -> None:
    """
    Validate that a value is an exact integer

    Booleans and floats are rejected so that no inexact value slips into
    the arithmetic.

    Raises:
        ValueError: If value is not an integer
    """
    if isinstance(value, bool) or not isinstance(value, int):
        # sympy Integer is not an int subclass
        if getattr(value, "is_Integer", False):
            return
        raise ValueError(f"{name} must be an integer, got {value!r}")


def validate_positive_int(value: Any, name: str = "value") -> None:
    """
    Validate a positive integer

    Example:
        >>> validate_positive_int(3, "k")  # OK
        >>> validate_positive_int(0, "k")  # Raises ValueError
    """
    validate_int(value, name)
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


def validate_nonzero_int(value: Any, name: str = "value") -> None:
    """Validate a nonzero integer"""
    validate_int(value, name)
    if value == 0:
        raise ValueError(f"{name} must be nonzero")


def validate_rows(rows: Any, name: str = "matrix") -> None:
    """
    Validate a rectangular list of integer rows

    Raises:
        ValueError: If rows is not a list of equal-length integer lists
    """
    if not isinstance(rows, (list, tuple)):
        raise ValueError(f"{name} must be a list of rows")
    width = None
    for i, row in enumerate(rows):
        if not isinstance(row, (list, tuple)):
            raise ValueError(f"{name} row {i} must be a list")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"{name} is not rectangular (row {i} has length {len(row)})")
        for entry in row:
            validate_int(entry, f"{name} entry")


def validate_square(matrix: Any, name: str = "matrix") -> None:
    """Validate that a sympy matrix is square"""
    if matrix.rows != matrix.cols:
        raise ValueError(f"{name} must be square, got {matrix.rows}x{matrix.cols}")


def validate_symmetric(matrix: Any, name: str = "gram") -> None:
    """Validate that a sympy matrix is square and symmetric"""
    validate_square(matrix, name)
    if matrix != matrix.T:
        raise ValueError(f"{name} must be symmetric")


def validate_vector_length(vector: Sequence, length: int, name: str = "vector") -> None:
    """Validate that a vector has the expected number of coordinates"""
    if len(vector) != length:
        raise ValueError(f"{name} has length {len(vector)}, expected {length}")


def validate_series_name(name: str) -> None:
    """
    Validate a projective series name

    Example:
        >>> validate_series_name("X3k")  # OK
        >>> validate_series_name("X9")  # Raises ValueError
    """
    if name not in SERIES_NAMES:
        raise ValueError(f"Unknown series: {name}. Must be one of {SERIES_NAMES}")


def validate_partition(partition: Sequence[int]) -> List[int]:
    """
    Validate a partition fitting in the 2x2 box and pad it to length 2

    Returns:
        The partition padded with zeros to two parts
    """
    parts = list(partition)
    if len(parts) > SCHUBERT_BOX:
        raise ValueError(f"Partition {parts} has more than {SCHUBERT_BOX} parts")
    for part in parts:
        validate_int(part, "partition part")
        if part < 0 or part > SCHUBERT_BOX:
            raise ValueError(f"Partition {parts} does not fit in the 2x2 box")
    parts += [0] * (SCHUBERT_BOX - len(parts))
    if parts[0] < parts[1]:
        raise ValueError(f"Partition {list(partition)} is not non-increasing")
    return parts


def ensure_valid(model: Any) -> Any:
    """
    Run a model's validate() and convert ValueError into K3LatValidationError

    Returns:
        The model itself, for chaining
    """
    from ..exceptions import K3LatValidationError

    try:
        model.validate()
    except ValueError as e:
        raise K3LatValidationError(str(e))
    return model
