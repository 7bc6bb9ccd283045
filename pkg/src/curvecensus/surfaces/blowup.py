"""
This module contains intersection theory on the blow-up S_n
of the plane at n general points.
"""

from .classes import BlowupClass
from .errors import LatticeParityError, MismatchedRankError, NotACurveClassError


def intersect_blowup(x: BlowupClass, y: BlowupClass) -> int:
    """
    Intersection number on S_n, with `l^2 = 1`, `e_i^2 = -1`, `l.e_i = 0`.

    Raises:
        MismatchedRankError: If the classes live on different surfaces.
    """
    if x.n != y.n:
        raise MismatchedRankError(x.n, y.n)
    return x.a * y.a - sum(p * q for p, q in zip(x.b, y.b))


def canonical_degree(x: BlowupClass) -> int:
    """The intersection `x.K` with the canonical class."""
    return intersect_blowup(x, BlowupClass.canonical(x.n))


def pa_blowup(x: BlowupClass) -> int:
    """
    Arithmetic genus `1 + (x^2 + x.K) / 2` by adjunction.

    Raises:
        NotACurveClassError: If `x^2 + x.K < -2`.
        LatticeParityError: If `x^2 + x.K` is odd.
    """
    adjunction = intersect_blowup(x, x) + canonical_degree(x)
    if adjunction < -2:
        raise NotACurveClassError(x, f"x^2 + x.K = {adjunction} < -2")
    if adjunction % 2:
        raise LatticeParityError(x)
    return 1 + adjunction // 2
