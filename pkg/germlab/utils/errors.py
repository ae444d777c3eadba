"""
Exception hierarchy for germ-lab

Precondition failures subclass ValueError and overflow subclasses
OverflowError, so callers that only know the builtin types still catch them.
"""

from typing import Any, Dict, Optional


class GermLabError(Exception):
    """Base class for every error raised by germ-lab"""


class InvalidInputError(GermLabError, ValueError):
    """An operation was called outside its precondition"""


class InvariantViolation(GermLabError, AssertionError):
    """
    An internal identity failed to hold

    Args:
        message: Human readable description
        inputs: The input that triggered the failure
        expected: Value predicted by one side of the identity
        actual: Value computed by the other side
    """

    def __init__(
        self,
        message: str,
        inputs: Optional[Dict[str, Any]] = None,
        expected: Any = None,
        actual: Any = None,
    ) -> None:
        super().__init__(message)
        self.inputs = inputs or {}
        self.expected = expected
        self.actual = actual


class ArithmeticOverflow(GermLabError, OverflowError):
    """A checked 64-bit integer operation left the signed range"""


class EnumerationRefused(GermLabError):
    """Exhaustive enumeration was asked for a degree above the configured cap"""

    def __init__(self, degree: int, cap: int) -> None:
        super().__init__(
            f"degree {degree} exceeds exhaustive enumeration cap {cap}; "
            f"raise enumeration.max_degree or pass --max-degree"
        )
        self.degree = degree
        self.cap = cap
