"""
This module contains intersection theory on the smooth quadric P1 x P1.
"""

from curvecensus.errors import OutOfRangeError

from .classes import QuadricClass
from .errors import NotACurveClassError

AUTOMORPHISM_DIM = 6  # dim Aut(P1 x P1)
QUADRIC_CANONICAL = QuadricClass(a=-2, b=-2)
QUADRIC_HYPERPLANE = QuadricClass(a=1, b=1)


def intersect_quadric(x: QuadricClass, y: QuadricClass) -> int:
    return x.a * y.b + x.b * y.a


def pa_quadric(x: QuadricClass) -> int:
    """
    Arithmetic genus `(a - 1)(b - 1)` of a curve of bidegree `(a, b)`.

    Raises:
        NotACurveClassError: If `a <= 0` or `b <= 0`.
    """
    if x.a <= 0 or x.b <= 0:
        raise NotACurveClassError(x, "both bidegrees must be positive")
    return (x.a - 1) * (x.b - 1)


def dim_linear_system_quadric(x: QuadricClass) -> int:
    """
    Dimension `(a + 1)(b + 1) - 1` of the complete linear system `|(a, b)|`.

    Raises:
        OutOfRangeError: If either bidegree is negative.
    """
    if not x.is_effective:
        raise OutOfRangeError("class", str(x), "a, b >= 0")
    return (x.a + 1) * (x.b + 1) - 1
