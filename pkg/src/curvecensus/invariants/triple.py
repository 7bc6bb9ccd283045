"""
This module defines the (degree, genus, dimension) triple
identifying a Hilbert scheme of curves.
"""

from pydantic import BaseModel, ConfigDict, computed_field

from curvecensus.utils.datatypes import NonNegativeInt, PositiveInt


class Triple(BaseModel):
    """
    Degree, genus and ambient dimension of a family of curves.

    Attributes:
        d (int): Degree of the curves.
        g (int): Genus of the curves.
        r (int): Dimension of the ambient projective space.
    """

    model_config = ConfigDict(frozen=True)

    d: PositiveInt
    g: NonNegativeInt
    r: PositiveInt

    @computed_field
    @property
    def alpha(self) -> int:
        """Index of speciality of a linearly normal curve, `g - d + r`."""
        return self.g - self.d + self.r

    @classmethod
    def of(cls, d: int, g: int, r: int) -> "Triple":
        return cls(d=d, g=g, r=r)

    @classmethod
    def with_speciality(cls, alpha: int, g: int, r: int) -> "Triple":
        """
        Build the triple of genus `g` in dimension `r`
        with index of speciality `alpha`.
        """
        return cls(d=g + r - alpha, g=g, r=r)

    def __str__(self) -> str:
        return f"({self.d},{self.g},{self.r})"
