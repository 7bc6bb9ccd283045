"""
This module defines candidate models of a residual series
as curves on the smooth quadric.
"""

from enum import StrEnum
from typing import Self

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from curvecensus.surfaces import QuadricClass, pa_quadric
from curvecensus.utils.datatypes import NonNegativeInt


class SurfaceTag(StrEnum):
    QUADRIC = "quadric"
    BLOWUP_OF_QUADRIC = "blowup-of-quadric"


class ModelRecord(BaseModel):
    """
    A curve of bidegree `(c, d)` on the quadric, `c <= d`,
    with `delta` nodes, modelling a series of degree `e`
    with `base_points` base points on a curve of genus `g`.

    Attributes:
        cls (QuadricClass): Bidegree of the image curve.
        delta (int): Number of nodes.
        base_points (int): Degree of the base locus of the series.
        e (int): Degree of the series.
        g (int): Geometric genus.
    """

    model_config = ConfigDict(frozen=True)

    cls: QuadricClass
    delta: NonNegativeInt
    base_points: NonNegativeInt
    e: int
    g: NonNegativeInt

    @model_validator(mode="after")
    def _check_invariants(self) -> Self:
        if self.cls.a > self.cls.b:
            raise ValueError(f"expected c <= d, got {self.cls}")
        pa = pa_quadric(self.cls)
        if self.delta > pa:
            raise ValueError(f"delta={self.delta} exceeds p_a={pa}")
        if pa - self.delta != self.g:
            raise ValueError(f"p_a - delta = {pa - self.delta} != g = {self.g}")
        if self.cls.a + self.cls.b + self.base_points != self.e:
            raise ValueError(
                f"c + d + base points = "
                f"{self.cls.a + self.cls.b + self.base_points} != e = {self.e}"
            )
        return self

    @classmethod
    def of(cls, c: int, d: int, *, delta: int, base_points: int = 0) -> Self:
        """Build the record, deriving `e` and `g` from the other data."""
        bidegree = QuadricClass(a=c, b=d)
        return cls(
            cls=bidegree,
            delta=delta,
            base_points=base_points,
            e=c + d + base_points,
            g=pa_quadric(bidegree) - delta,
        )

    @property
    def c(self) -> int:
        return self.cls.a

    @property
    def d(self) -> int:
        return self.cls.b

    @property
    def pa(self) -> int:
        return pa_quadric(self.cls)

    @computed_field
    @property
    def surface(self) -> SurfaceTag:
        if self.delta == 0 and self.base_points == 0:
            return SurfaceTag.QUADRIC
        return SurfaceTag.BLOWUP_OF_QUADRIC

    @computed_field
    @property
    def compounded_or_degenerate(self) -> bool:
        """A ruling of degree at most 2 makes the series factor through a cover."""
        return self.c <= 2

    @property
    def stratum(self) -> str:
        """The Severi stratum containing the image curve."""
        return f"Σ_{{|{self.cls}|,{self.delta}}}"

    def __str__(self) -> str:
        text = f"{self.cls} δ={self.delta}"
        if self.base_points:
            text += f" bp={self.base_points}"
        return text
