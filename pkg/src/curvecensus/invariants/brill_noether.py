"""
This module contains the Brill-Noether numbers of a triple
and the expected dimension of its Hilbert scheme.

All functions accept triples outside the Brill-Noether range;
negative values are meaningful.
"""

from .triple import Triple


def rho(t: Triple) -> int:
    """
    Brill-Noether number `g - (r + 1)(g - d + r)`.
    """
    return t.g - (t.r + 1) * t.alpha


def lambda_(t: Triple) -> int:
    """
    Dimension bound `3g - 3 + rho` for families of pairs (curve, series).
    """
    return 3 * t.g - 3 + rho(t)


def pgl_dim(r: int) -> int:
    """
    Dimension of the automorphism group of projective `r`-space.
    """
    return (r + 1) ** 2 - 1


def chi_min(t: Triple) -> int:
    """
    Minimal possible dimension of any component of the Hilbert scheme,
    `lambda + dim PGL(r + 1)`.
    """
    return lambda_(t) + pgl_dim(t.r)
