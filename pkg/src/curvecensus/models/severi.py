"""
This module contains dimension counts for Severi varieties
of nodal curves on the quadric.
"""

from curvecensus.errors import OutOfRangeError
from curvecensus.invariants import pgl_dim
from curvecensus.surfaces import (
    AUTOMORPHISM_DIM,
    QuadricClass,
    dim_linear_system_quadric,
    pa_quadric,
)


def severi_dim(cls: QuadricClass, delta: int) -> int:
    """
    Dimension `dim|M| - delta` of the variety of `delta`-nodal curves in `|M|`.

    Raises:
        OutOfRangeError: If `delta` is not in `[0, p_a(M)]`.
    """
    pa = pa_quadric(cls)
    if not 0 <= delta <= pa:
        raise OutOfRangeError("delta", delta, f"0 <= delta <= p_a = {pa}")
    return dim_linear_system_quadric(cls) - delta


def glevel_dim(cls: QuadricClass, delta: int) -> int:
    """
    Dimension of the family of pairs (curve, series) swept out
    by the Severi variety, modulo automorphisms of the quadric.
    """
    return severi_dim(cls, delta) - AUTOMORPHISM_DIM


def hilbert_dim(glevel: int, r: int) -> int:
    """
    Lift a family of pairs (curve, series) of dimension `glevel`
    to the dimension of the curves it embeds in projective `r`-space.
    """
    return glevel + pgl_dim(r)
