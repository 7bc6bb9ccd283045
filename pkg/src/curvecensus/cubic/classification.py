"""
This module classifies divisor classes of smooth curves
of given degree and genus on a smooth cubic surface.

A smooth cubic is the blow-up S_6 of the plane at six general points,
embedded by the hyperplane class `H = (3;1,1,1,1,1,1)`.
A curve `C = (a;b1,...,b6)` has degree `C.H = 3a - sum(b)`
and, by adjunction, `C^2 = 2g - 2 + d`.
"""

import logging
import math
from collections import defaultdict
from typing import Optional, Self

from pydantic import BaseModel, ConfigDict, model_validator

from curvecensus.errors import OutOfRangeError
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings
from curvecensus.surfaces import (
    BlowupClass,
    intersect_blowup,
    is_neg_curve,
    pa_blowup,
)
from curvecensus.utils import bounded_partitions, bounded_vectors, orbit_size

logger = logging.getLogger(__name__)

CUBIC_POINTS = 6
CUBIC_HYPERPLANE = BlowupClass(a=3, b=(1,) * CUBIC_POINTS)


class CubicClassSolution(BaseModel):
    """
    A class on the cubic surface carrying smooth curves of degree `d`
    and genus `g`, with non-increasing multiplicities.

    Attributes:
        cls (BlowupClass): The class `(a;b1,...,b6)`.
        d (int): Degree in space, `3a - sum(b)`.
        g (int): Genus by adjunction.
        line (BlowupClass | None): The line `cls - 3H`, when it is one.
        orbit_size (int): Number of classes obtained by permuting the points.
    """

    model_config = ConfigDict(frozen=True)

    cls: BlowupClass
    d: int
    g: int
    line: Optional[BlowupClass] = None
    orbit_size: int = 1

    @model_validator(mode="after")
    def _check_invariants(self) -> Self:
        b = self.cls.b
        if self.cls.n != CUBIC_POINTS:
            raise ValueError(f"{self.cls} does not live on S_6")
        if any(x < 0 for x in b) or list(b) != sorted(b, reverse=True):
            raise ValueError(f"{self.cls} is not a canonical representative")
        if 3 * self.cls.a - sum(b) != self.d:
            raise ValueError(f"{self.cls} has degree {3 * self.cls.a - sum(b)}")
        if intersect_blowup(self.cls, self.cls) != 2 * self.g - 2 + self.d:
            raise ValueError(f"{self.cls} does not have genus {self.g}")
        return self

    @classmethod
    def from_class(cls, curve: BlowupClass) -> Self:
        """Derive degree, genus, line and orbit size from the class."""
        return cls(
            cls=curve,
            d=intersect_blowup(curve, CUBIC_HYPERPLANE),
            g=pa_blowup(curve),
            line=_line_of(curve),
            orbit_size=orbit_size(curve.b),
        )

    def __str__(self) -> str:
        return str(self.cls)


def _line_of(curve: BlowupClass) -> Optional[BlowupClass]:
    candidate = curve - 3 * CUBIC_HYPERPLANE
    return candidate if is_neg_curve(candidate) else None


def _check_degree_genus(d: int, g: int) -> None:
    if d < 1:
        raise OutOfRangeError("d", d, "d >= 1")
    if g < 0:
        raise OutOfRangeError("g", g, "g >= 0")


def schwartz_range(d: int, g: int) -> Optional[tuple[int, int]]:
    """
    The integers `a` allowed by the Cauchy-Schwarz bound
    `(3a - d)^2 <= 6(a^2 - (2g - 2 + d))`.

    Returns:
        bounds (tuple[int, int] | None): `(a_min, a_max)`,
            or `None` if no integer satisfies the bound.
    """
    _check_degree_genus(d, g)
    square = 2 * g - 2 + d
    # 3a^2 - 6da + d^2 + 6*square <= 0
    discriminant = 36 * d * d - 12 * (d * d + 6 * square)
    if discriminant < 0:
        return None
    root = math.isqrt(discriminant)
    candidates = [
        a
        for a in range((6 * d - root) // 6 - 1, (6 * d + root) // 6 + 2)
        if (3 * a - d) ** 2 <= 6 * (a * a - square)
    ]
    if not candidates:
        return None
    return candidates[0], candidates[-1]


def classify_cubic_classes(d: int, g: int) -> list[CubicClassSolution]:
    """
    Find every class of smooth curves of degree `d` and genus `g`
    on the cubic surface, one representative per permutation orbit.

    For each `a` in the Schwartz range, the multiplicities solve
    `sum(b) = 3a - d` and `sum(b^2) = a^2 - (2g - 2 + d)` with `b_i >= 0`.

    Args:
        d (int): Degree, at least 1.
        g (int): Genus, at least 0.

    Returns:
        solutions (list[CubicClassSolution]): Sorted by `(a, b)`.
    """
    bounds = schwartz_range(d, g)
    if bounds is None:
        logger.debug(f"No cubic classes for (d, g) = ({d}, {g})")
        return []
    square = 2 * g - 2 + d
    solutions = []
    for a in range(bounds[0], bounds[1] + 1):
        total, square_total = 3 * a - d, a * a - square
        if total < 0 or square_total < 0:
            continue
        for b in bounded_vectors(
            CUBIC_POINTS,
            total,
            square_total,
            low=0,
            high=min(total, math.isqrt(square_total)),
            non_increasing=True,
        ):
            curve = BlowupClass(a=a, b=b)
            solutions.append(CubicClassSolution.from_class(curve))
    solutions.sort(key=lambda s: s.cls.sort_key)
    logger.debug(
        f"Found {len(solutions)} cubic classes for (d, g) = ({d}, {g}) "
        f"with {bounds[0]} <= a <= {bounds[1]}"
    )
    return solutions


def brute_force_cubic_table(
    d: int, g_max: int, settings: SearchSettings = DEFAULT_SETTINGS
) -> dict[int, list[CubicClassSolution]]:
    """
    Unpruned search for every genus up to `g_max` at once.

    Enumerates every non-increasing `b` with `0 <= b_i <= a`
    and `sum(b) = 3a - d` for `1 <= a <= d + oracle_degree_margin`,
    then buckets the classes by genus.
    """
    _check_degree_genus(d, 0)
    table: dict[int, list[CubicClassSolution]] = defaultdict(list)
    for a in range(1, d + settings.oracle_degree_margin + 1):
        total = 3 * a - d
        if total < 0:
            continue
        for b in bounded_partitions(total, CUBIC_POINTS, a):
            # C^2 = 2g - 2 + d
            doubled = a * a - sum(x * x for x in b) + 2 - d
            if doubled % 2 or not 0 <= doubled // 2 <= g_max:
                continue
            table[doubled // 2].append(
                CubicClassSolution.from_class(BlowupClass(a=a, b=b))
            )
    for solutions in table.values():
        solutions.sort(key=lambda s: s.cls.sort_key)
    return {g: table.get(g, []) for g in range(g_max + 1)}


def brute_force_cubic_classes(
    d: int, g: int, settings: SearchSettings = DEFAULT_SETTINGS
) -> list[CubicClassSolution]:
    """Unpruned oracle for `classify_cubic_classes`."""
    _check_degree_genus(d, g)
    return brute_force_cubic_table(d, g, settings)[g]


def line_decomposition(s: CubicClassSolution) -> Optional[BlowupClass]:
    """
    Write the class as `D + 3H` with `D` one of the 27 lines.

    Returns:
        line (BlowupClass | None): `cls - 3H` if it is a (-1)-curve.
    """
    return _line_of(s.cls)


def cubic_residual(s: CubicClassSolution) -> BlowupClass:
    """
    Class `K + C - H = 2K + C` cutting the residual series,
    since `H = -K` on the cubic.
    """
    return 2 * BlowupClass.canonical(CUBIC_POINTS) + s.cls
