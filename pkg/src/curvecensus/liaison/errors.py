"""
This module defines exceptions raised by the linkage arithmetic.
"""

from dataclasses import dataclass
from typing import ClassVar

from curvecensus.errors import CensusError


class LiaisonError(CensusError):
    """
    Base class for exceptions raised by the linkage arithmetic.
    """


@dataclass
class NoIntegralLinkageError(LiaisonError):
    """
    Error raised when the linked genus is not an integer.
    """

    code: ClassVar[str] = "no-integral-linkage"

    d: int
    g: int
    s: int
    t: int

    def __str__(self) -> str:
        return (
            f"A curve of degree {self.d} and genus {self.g} has no integral "
            f"residual in a ({self.s},{self.t}) complete intersection."
        )


@dataclass
class SpecialTwistError(LiaisonError):
    """
    Error raised when `O_C(m)` may be special,
    so Riemann-Roch only bounds the number of surfaces from below.
    """

    code: ClassVar[str] = "special-twist"

    d: int
    g: int
    m: int

    def __str__(self) -> str:
        return (
            f"O_C({self.m}) may be special on a curve of degree {self.d} "
            f"and genus {self.g}: {self.m * self.d} <= 2g - 2 = {2 * self.g - 2}."
        )
