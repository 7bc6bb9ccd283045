"""
This module defines exceptions raised by the divisor class calculus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, ClassVar, Optional

from curvecensus.errors import CensusError

if TYPE_CHECKING:
    from .classes import BlowupClass, DivisorClass


class SurfaceError(CensusError):
    """
    Base class for exceptions raised by the divisor class calculus.
    """


@dataclass
class ClassSyntaxError(SurfaceError):
    """
    Error raised when a divisor class cannot be parsed.
    """

    code: ClassVar[str] = "class-syntax"

    text: str
    reason: str

    def __str__(self) -> str:
        return f"Cannot parse divisor class '{self.text}': {self.reason}"


@dataclass
class MismatchedRankError(SurfaceError):
    """
    Error raised when two classes live on blow-ups
    at different numbers of points.
    """

    code: ClassVar[str] = "mismatched-rank"

    left: int
    right: int

    def __str__(self) -> str:
        return (
            f"Classes live on different surfaces "
            f"(S_{self.left} and S_{self.right})."
        )


@dataclass
class LatticeParityError(SurfaceError):
    """
    Error raised when `x^2 + x.K` is odd.
    This cannot happen for an integral class and indicates a bug.
    """

    code: ClassVar[str] = "lattice-parity"

    cls: BlowupClass

    def __str__(self) -> str:
        return f"x^2 + x.K is odd for {self.cls}."


@dataclass
class NotACurveClassError(SurfaceError):
    """
    Error raised when a class cannot be the class of a curve.
    """

    code: ClassVar[str] = "not-a-curve-class"

    cls: DivisorClass
    reason: str

    def __str__(self) -> str:
        return f"{self.cls} is not a curve class: {self.reason}"


@dataclass
class VanishingNotJustifiedError(SurfaceError):
    """
    Error raised when Riemann-Roch would only give a lower bound,
    because `x - K` fails to meet some curve positively.
    """

    code: ClassVar[str] = "vanishing-not-justified"

    cls: BlowupClass
    witness: Optional[BlowupClass]

    def __str__(self) -> str:
        against = "the line class" if self.witness is None else str(self.witness)
        return (
            f"Cannot certify h1 = h2 = 0 for {self.cls}: "
            f"x - K does not meet {against} positively."
        )


@dataclass
class MixedSurfacesError(SurfaceError):
    """
    Error raised when a quadric class meets a class on S_n.
    """

    code: ClassVar[str] = "mixed-surfaces"

    left: DivisorClass
    right: DivisorClass

    def __str__(self) -> str:
        return f"Cannot intersect {self.left} with {self.right}: different surfaces."
