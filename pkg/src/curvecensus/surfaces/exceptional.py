"""
This module enumerates the (-1)-curves on S_n.

A (-1)-curve is a class `E` with `E^2 = E.K = -1`,
i.e. `sum(b) = 3a - 1` and `sum(b^2) = a^2 + 1`.
The classes are found by a pruned search over a bounded box
and cached once per surface.
"""

import logging
import threading

from curvecensus.errors import OutOfRangeError
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings
from curvecensus.utils.enumeration import bounded_vectors

from .classes import MAX_POINTS, BlowupClass

logger = logging.getLogger(__name__)

type _CacheKey = tuple[int, int, int, int]

_cache: dict[_CacheKey, tuple[BlowupClass, ...]] = {}
_cache_lock = threading.Lock()


def neg_curves(
    n: int, settings: SearchSettings = DEFAULT_SETTINGS
) -> list[BlowupClass]:
    """
    All (-1)-curves on S_n, sorted lexicographically by `(a, b)`.

    Args:
        n (int): Number of blown-up points, 1 to 8.
        settings (SearchSettings): Bounds of the search box.

    Returns:
        curves (list[BlowupClass]): The (-1)-curves.

    Raises:
        OutOfRangeError: If `n` is not in `[1, 8]`.
    """
    if not 1 <= n <= MAX_POINTS:
        raise OutOfRangeError("n", n, f"1 <= n <= {MAX_POINTS}")
    key = (
        n,
        settings.neg_curve_degree_max,
        settings.neg_curve_multiplicity_min,
        settings.neg_curve_multiplicity_max,
    )
    with _cache_lock:
        if key not in _cache:
            _cache[key] = _search(n, settings)
    return list(_cache[key])


def _search(n: int, settings: SearchSettings) -> tuple[BlowupClass, ...]:
    curves = [
        BlowupClass(a=a, b=b)
        for a in range(settings.neg_curve_degree_max + 1)
        for b in bounded_vectors(
            n,
            3 * a - 1,
            a * a + 1,
            low=settings.neg_curve_multiplicity_min,
            high=settings.neg_curve_multiplicity_max,
        )
    ]
    curves.sort(key=lambda curve: curve.sort_key)
    logger.debug(f"Found {len(curves)} (-1)-curves on S_{n}")
    return tuple(curves)


def is_neg_curve(x: BlowupClass) -> bool:
    return x in neg_curves(x.n)
