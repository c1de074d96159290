"""
Report models for k3lat
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional


@dataclass
class ReportEntry:
    """
    One machine-checked claim

    Attributes:
        claim_id: Dotted id, prefixed by its group (e.g. "mukai.fineness_degree8")
        statement: Human-readable statement of the claim
        expected: Expected value
        computed: Computed value (an error message when the computation raised)
        passed: expected == computed exactly

    Example:
        >>> entry = ReportEntry("hodge.coefficient", "c(-2,-72)", "1/12", "1/12", True)
        >>> entry.to_dict()["pass"]
        True
    """

    claim_id: str
    statement: str
    expected: Any
    computed: Any
    passed: bool

    @property
    def group(self) -> str:
        return self.claim_id.split(".", 1)[0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "statement": self.statement,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
        }


@dataclass
class IndexChainReport:
    """
    Index of T_small + Z r inside T_big, computed two ways

    Attributes:
        chain: Chain name, e.g. "M_beta->Y"
        expected: Expected index
        discriminant_index: Index from the discriminant quotient
        explicit_index: |det| of the explicit coordinate matrix
        extra_norm: <r, r> of the added vector (None for the degenerate chain)
        passed: All three values agree
        error: Message when the chain could not be built
    """

    chain: str
    expected: int
    discriminant_index: Optional[int]
    explicit_index: Optional[int]
    extra_norm: Optional[int]
    passed: bool
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary, removing None values"""
        result = {
            "chain": self.chain,
            "expected": self.expected,
            "discriminant_index": self.discriminant_index,
            "explicit_index": self.explicit_index,
            "extra_norm": self.extra_norm,
            "pass": self.passed,
            "error": self.error,
        }
        return {k: v for k, v in result.items() if v is not None}
