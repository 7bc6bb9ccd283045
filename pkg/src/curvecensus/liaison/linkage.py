"""
This module contains the arithmetic of linkage of space curves
by complete intersections of two surfaces.
"""

import math
from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator

from curvecensus.errors import OutOfRangeError

from .errors import NoIntegralLinkageError, SpecialTwistError


def linked_genus(d: int, g: int, s: int, t: int) -> tuple[int, int]:
    """
    Degree and genus of the curve residual to `(d, g)`
    in a complete intersection of surfaces of degrees `s` and `t`,
    from `d + e = st` and `2(g - h) = (s + t - 4)(d - e)`.

    Returns:
        residual (tuple[int, int]): The pair `(e, h)`.

    Raises:
        OutOfRangeError: If `s < 2`, `t < 2` or `st <= d`.
        NoIntegralLinkageError: If `h` is not an integer.
            `(s + t - 4)(d - e)` is always even, so this indicates a bug.
    """
    if s < 2:
        raise OutOfRangeError("s", s, "s >= 2")
    if t < 2:
        raise OutOfRangeError("t", t, "t >= 2")
    if s * t <= d:
        raise OutOfRangeError("d", d, f"d < st = {s * t}")
    e = s * t - d
    difference, remainder = divmod((s + t - 4) * (d - e), 2)
    if remainder:
        raise NoIntegralLinkageError(d, g, s, t)
    return e, g - difference


class LiaisonStep(BaseModel):
    """
    A curve `(d, g)` linked to a curve `(e, h)`
    by surfaces of degrees `s` and `t`.
    """

    model_config = ConfigDict(frozen=True)

    d: int
    g: int
    s: int
    t: int
    e: int
    h: int

    @model_validator(mode="after")
    def _check_linkage(self) -> Self:
        if self.d + self.e != self.s * self.t:
            raise ValueError(f"d + e = {self.d + self.e} != st = {self.s * self.t}")
        if 2 * (self.g - self.h) != (self.s + self.t - 4) * (self.d - self.e):
            raise ValueError("2(g - h) != (s + t - 4)(d - e)")
        return self

    @classmethod
    def link(cls, d: int, g: int, s: int, t: int) -> Self:
        e, h = linked_genus(d, g, s, t)
        return cls(d=d, g=g, s=s, t=t, e=e, h=h)

    def __str__(self) -> str:
        return f"({self.d},{self.g}) ~({self.s},{self.t})~ ({self.e},{self.h})"


def surfaces_through(d: int, g: int, m: int) -> int:
    """
    Number `h0(O(m)) - h0(O_C(m))` of independent surfaces of degree `m`
    containing a curve of degree `d` and genus `g`.

    Raises:
        SpecialTwistError: If `md <= 2g - 2`.
    """
    if m * d <= 2 * g - 2:
        raise SpecialTwistError(d, g, m)
    return math.comb(m + 3, 3) - (m * d - g + 1)


def grassmann_dim(k: int, n: int) -> int:
    """
    Dimension `(k + 1)(n - k)` of the Grassmannian of k-planes in P^n.
    `k = n` is accepted and gives 0: a single pencil of surfaces.

    Raises:
        OutOfRangeError: Unless `0 <= k <= n`.
    """
    if not 0 <= k <= n:
        raise OutOfRangeError("k", k, f"0 <= k <= n = {n}")
    return (k + 1) * (n - k)
