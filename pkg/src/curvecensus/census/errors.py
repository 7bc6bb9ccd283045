"""
This module defines exceptions raised by the census.
"""

from dataclasses import dataclass
from typing import ClassVar

from curvecensus.errors import CensusError


@dataclass
class UnknownFamilyError(CensusError):
    """
    Error raised when a table family is not recognised.
    """

    code: ClassVar[str] = "unknown-family"

    family: str
    available: list[str]

    def __str__(self) -> str:
        return f"Unknown table family '{self.family}'. Available: {self.available}"
