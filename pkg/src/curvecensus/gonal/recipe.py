"""
This module builds curves of genus `g` in P^r with index of speciality 4
from general k-gonal curves.

The residual series of degree `e = g - r + 2` is taken to be
`|3 g^1_k + D|`, where `D` is a sum of up to two extra points.
Its dimension is exactly 3 when the gonal dimension condition holds,
and then `|K - 3 g^1_k - D|` embeds the curve in P^r.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from curvecensus.errors import OutOfRangeError

MULTIPLE = 3
MIN_GONALITY = 4

GONALITY_NAMES = {
    2: "Hyperelliptic",
    3: "Trigonal",
    4: "Tetragonal",
    5: "Pentagonal",
    6: "Hexagonal",
}

EXTRA_POINT_ASSUMPTIONS = {
    0: (),
    1: ("the extra point q is general",),
    2: ("q + q' is not contained in a fibre of the g^1_k",),
}


def ckm_condition(g: int, k: int, m: int, n: int) -> bool:
    """
    Dimension condition on a general k-gonal curve of genus `g`:
    when `2k - g - 2 < 0` and `g >= 2m + n(k - 1)`,
    `dim|n g^1_k + D| = n` for an admissible divisor `D` of degree `m`.

    Raises:
        OutOfRangeError: If `k < 2`, `m < 0` or `n < 0`.
    """
    if k < 2:
        raise OutOfRangeError("k", k, "k >= 2")
    if m < 0:
        raise OutOfRangeError("m", m, "m >= 0")
    if n < 0:
        raise OutOfRangeError("n", n, "n >= 0")
    return 2 * k - g - 2 < 0 and g >= 2 * m + n * (k - 1)


def gonality_name(k: int) -> str:
    return GONALITY_NAMES.get(k, f"{k}-gonal")


class RecipeCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool


class GonalRecipe(BaseModel):
    """
    A construction of curves of genus `g` in P^r from k-gonal curves.

    Attributes:
        g (int): Genus.
        r (int): Target dimension.
        e (int): Degree `g - r + 2` of the residual series.
        k (int): Gonality.
        n (int): Multiple of the gonal pencil, always 3.
        extra_points (int): Number of extra points, `e mod 3`.
        m (int): Degree parameter of the dimension condition.
        conditions (list[RecipeCheck]): Named checks and their values.
        assumptions (list[str]): Genericity requirements
            that cannot be checked numerically.
    """

    model_config = ConfigDict(frozen=True)

    g: int
    r: int
    e: int
    k: int
    n: int = MULTIPLE
    extra_points: int
    m: int
    conditions: list[RecipeCheck]
    assumptions: list[str]

    @model_validator(mode="after")
    def _check_split(self) -> "GonalRecipe":
        if self.e != self.g - self.r + 2:
            raise ValueError(f"e={self.e} is not g - r + 2")
        if self.e != self.n * self.k + self.extra_points:
            raise ValueError(f"e={self.e} is not {self.n}k + {self.extra_points}")
        return self

    @computed_field
    @property
    def valid(self) -> bool:
        return all(check.passed for check in self.conditions)

    @computed_field
    @property
    def residual_degree(self) -> int:
        """Degree `2g - 2 - e = g + r - 4` of the embedding series."""
        return 2 * self.g - 2 - self.e

    @property
    def gonality(self) -> str:
        return gonality_name(self.k)

    @property
    def series(self) -> str:
        extras = ["", " - q", " - q - q'"][self.extra_points]
        return f"|K - {self.n}g^1_{self.k}{extras}|"


def build_recipe(g: int, r: int) -> GonalRecipe:
    """
    Split `e = g - r + 2` as `3k + extra_points`
    and evaluate every condition of the construction.

    The recipe is returned even when a check fails.

    Raises:
        OutOfRangeError: If `r < 3`.
    """
    if r < 3:
        raise OutOfRangeError("r", r, "r >= 3")
    e = g - r + 2
    k, extra_points = divmod(e, MULTIPLE)
    m = 2 + extra_points
    checks = [
        RecipeCheck(name=f"k >= {MIN_GONALITY}", passed=k >= MIN_GONALITY),
        RecipeCheck(
            name=f"2k - g - 2 < 0 and g >= 2m + {MULTIPLE}(k - 1)",
            passed=k >= 2 and ckm_condition(g, k, m, MULTIPLE),
        ),
    ]
    return GonalRecipe(
        g=g,
        r=r,
        e=e,
        k=k,
        extra_points=extra_points,
        m=m,
        conditions=checks,
        assumptions=[
            f"C is a general {gonality_name(k).lower()} curve",
            *EXTRA_POINT_ASSUMPTIONS[extra_points],
        ],
    )


def existence_recipe(g: int, r: int) -> Optional[GonalRecipe]:
    """
    A valid k-gonal construction of curves of genus `g` in P^r, if any.

    Valid recipes exist for every `g >= r + 10` when `r >= 5`.
    For `r = 3` only `e = 0 mod 3` works and for `r = 4` only
    `e = 0, 1 mod 3`, which the dimension condition enforces.
    """
    recipe = build_recipe(g, r)
    return recipe if recipe.valid else None
