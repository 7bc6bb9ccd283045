"""
This module defines the base exceptions raised by census operations.

Every precondition failure raised by the library derives from
`CensusError`, so the command line interface can map any of them
to exit code 2 and a machine-readable error record.
"""

from dataclasses import dataclass
from typing import ClassVar


class CensusError(Exception):
    """
    Base class for exceptions raised by census operations.
    """

    code: ClassVar[str] = "census-error"

    def to_record(self) -> dict[str, str]:
        return {"error": self.code, "message": str(self)}


@dataclass
class OutOfRangeError(CensusError):
    """
    Error raised when an argument lies outside the range
    for which an operation is defined.
    """

    code: ClassVar[str] = "out-of-range"

    parameter: str
    value: object
    requirement: str

    def __str__(self) -> str:
        return f"{self.parameter}={self.value} is out of range ({self.requirement})."


@dataclass
class ScopeError(CensusError):
    """
    Error raised when an operation is asked about a case
    it does not cover.
    """

    code: ClassVar[str] = "out-of-scope"

    operation: str
    detail: str

    def __str__(self) -> str:
        return f"{self.operation} does not apply: {self.detail}"
