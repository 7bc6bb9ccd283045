"""
This module contains the numerical tests used to exclude curves
lying only on singular cubic surfaces: cones over plane cubics,
non-normal ruled cubics, and cubics whose curves are triple covers.
"""

from enum import StrEnum
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict

from curvecensus.errors import OutOfRangeError
from curvecensus.invariants import Triple, lambda_


class ConeGenusCase(StrEnum):
    THROUGH_VERTEX = "through-vertex"
    OFF_VERTEX = "off-vertex"
    IMPOSSIBLE = "impossible"


def _check_degree(d: int) -> None:
    if d < 3:
        raise OutOfRangeError("d", d, "d >= 3")


def cone_genus_test(d: int, g: int) -> ConeGenusCase:
    """
    Match the genus against the two genera possible
    for a curve on a cone over a plane cubic:
    `1 + d(d-3)/6` off the vertex and `1 + d(d-3)/6 - 2/3` through it.
    """
    _check_degree(d)
    off_vertex = 1 + Fraction(d * (d - 3), 6)
    if off_vertex == g:
        return ConeGenusCase.OFF_VERTEX
    if off_vertex - Fraction(2, 3) == g:
        return ConeGenusCase.THROUGH_VERTEX
    return ConeGenusCase.IMPOSSIBLE


def ruled_cubic_genus_solvable(d: int, g: int) -> Optional[int]:
    """
    Solve `2g = (2d - 3k - 2)(k - 1)` for the genus
    of a curve on a non-normal ruled cubic.

    Returns:
        k (int | None): The smallest solution `k >= 1`, if any.
    """
    _check_degree(d)
    for k in range(1, (2 * d - 2) // 3 + 1):
        if (2 * d - 3 * k - 2) * (k - 1) == 2 * g:
            return k
    return None


def mumford_bound(d: int, r: int) -> int:
    """Bound `d - 2r - 2` on `dim W^r_d` of a non-hyperelliptic curve."""
    return d - 2 * r - 2


def covering_family_dim(g: int, n: int, h: int) -> int:
    """
    Dimension `2g + (2n - 3)(1 - h) - 2` of the family of genus `g` curves
    that are `n`-sheeted covers of a genus `h` curve.
    """
    return 2 * g + (2 * n - 3) * (1 - h) - 2


def triple_cover_dim_bound(g: int, n: int = 3, h: int = 1) -> tuple[int, int]:
    """
    Bound the family of curves carrying a `g^3_10`
    that are triple covers of an elliptic curve.

    Returns:
        bounds (tuple[int, int]): `dim W^3_10` and the dimension
            of the family of coverings.
    """
    if g < 3:
        raise OutOfRangeError("g", g, "g >= 3")
    return mumford_bound(10, 3), covering_family_dim(g, n, h)


class SingularCubicReport(BaseModel):
    """
    Whether curves of degree `d` and genus `g` can fill a component
    of the Hilbert scheme while lying only on singular cubics.

    Attributes:
        d (int): Degree.
        g (int): Genus.
        cone (ConeGenusCase): The cone genus case.
        ruled_k (int | None): A solution of the ruled cubic genus equation.
        triple_cover_total (int): Bound on the family of triple covers.
        lambda_bound (int): `lambda(d, g, 3)`.
        excluded (bool): Whether every singular case is ruled out.
    """

    model_config = ConfigDict(frozen=True)

    d: int
    g: int
    cone: ConeGenusCase
    ruled_k: Optional[int]
    triple_cover_total: int
    lambda_bound: int
    excluded: bool


def singular_cubic_report(d: int, g: int) -> SingularCubicReport:
    """
    Collect the three singular cubic tests for `(d, g)` in P^3.

    Curves through the vertex of a cone are triple covers of the base,
    so they are excluded once the covering family is smaller than lambda.
    """
    cone = cone_genus_test(d, g)
    ruled_k = ruled_cubic_genus_solvable(d, g)
    w, family = triple_cover_dim_bound(g)
    bound = lambda_(Triple.of(d, g, 3))
    cone_excluded = cone is ConeGenusCase.IMPOSSIBLE or (
        cone is ConeGenusCase.THROUGH_VERTEX and w + family < bound
    )
    return SingularCubicReport(
        d=d,
        g=g,
        cone=cone,
        ruled_k=ruled_k,
        triple_cover_total=w + family,
        lambda_bound=bound,
        excluded=cone_excluded and ruled_k is None,
    )
