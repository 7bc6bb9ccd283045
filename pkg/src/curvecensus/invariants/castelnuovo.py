"""
This module contains the Castelnuovo bounds on the genus
of non-degenerate curves.
"""

from curvecensus.errors import OutOfRangeError


def castelnuovo_pi(d: int, r: int) -> int:
    """
    Maximal arithmetic genus of a non-degenerate curve
    of degree `d` in projective `r`-space.

    Args:
        d (int): Degree, at least `r`.
        r (int): Ambient dimension, at least 3.

    Returns:
        pi (int): The Castelnuovo bound.

    Raises:
        OutOfRangeError: If `r < 3` or `d < r`.
    """
    if r < 3:
        raise OutOfRangeError("r", r, "r >= 3")
    if d < r:
        raise OutOfRangeError("d", d, f"a non-degenerate curve needs d >= r = {r}")
    m, epsilon = divmod(d - 1, r - 1)
    return m * (m - 1) // 2 * (r - 1) + m * epsilon


def castelnuovo_pi1_r3(d: int) -> int:
    """
    Maximal genus of a space curve of degree `d`
    not lying on a quadric surface.

    Raises:
        OutOfRangeError: If `d < 7`.
    """
    if d < 7:
        raise OutOfRangeError("d", d, "d >= 7")
    return d * (d - 3) // 6 + 1


def exceeds_castelnuovo(d: int, g: int, r: int) -> bool:
    """
    Check whether no non-degenerate curve of degree `d` and genus `g`
    exists in projective `r`-space, either because `d < r`
    or because `g` is above the Castelnuovo bound.
    """
    return d < r or g > castelnuovo_pi(d, r)
