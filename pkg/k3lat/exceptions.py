"""
Custom exceptions for k3lat
"""


class K3LatError(Exception):
    """Base exception for all k3lat errors"""

    pass


class K3LatValidationError(K3LatError):
    """Exception raised for malformed input (shapes, names, JSON)"""

    def __init__(self, message: str, errors: dict = None):
        self.message = message
        self.errors = errors or {}
        super().__init__(self.message)

    def __str__(self):
        if self.errors:
            return f"K3LatValidationError: {self.message}. Errors: {self.errors}"
        return f"K3LatValidationError: {self.message}"


class K3LatPreconditionError(K3LatError):
    """Exception raised when a mathematical precondition does not hold"""

    def __init__(self, message: str, operation: str = None):
        self.message = message
        self.operation = operation  # Name of the failing operation, if known
        super().__init__(self.message)

    def __str__(self):
        if self.operation:
            return f"K3LatPreconditionError ({self.operation}): {self.message}"
        return f"K3LatPreconditionError: {self.message}"


class K3LatConsistencyError(K3LatPreconditionError):
    """Exception raised when two independent computations disagree"""

    def __init__(self, message: str, expected=None, computed=None):
        self.expected = expected
        self.computed = computed
        super().__init__(message)

    def __str__(self):
        if self.expected is not None or self.computed is not None:
            return (
                f"K3LatConsistencyError: {self.message}. "
                f"Expected {self.expected!r}, computed {self.computed!r}"
            )
        return f"K3LatConsistencyError: {self.message}"
