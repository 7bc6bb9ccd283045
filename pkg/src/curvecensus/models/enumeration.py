"""
This module enumerates the quadric models of a series
of given degree on a curve of given genus.
"""

import logging

from curvecensus.errors import OutOfRangeError
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings

from .record import ModelRecord

logger = logging.getLogger(__name__)


def enumerate_quadric_models(
    e: int, g: int, settings: SearchSettings = DEFAULT_SETTINGS
) -> list[ModelRecord]:
    """
    List every quadric model of a degree `e` series on a genus `g` curve.

    A model is a curve of bidegree `(c, d)`, `1 <= c <= d`,
    with `delta = (c - 1)(d - 1) - g >= 0` nodes
    and `e - c - d` base points, up to `settings.max_base_points`.
    Only `c + d < 3` is skipped, so `(1, 2)` bidegrees appear
    whenever base points make up the degree.

    Args:
        e (int): Degree of the series, at least 4.
        g (int): Genus of the curve.
        settings (SearchSettings): Base point budget.

    Returns:
        models (list[ModelRecord]): Sorted by base points, then `c`.
    """
    if e < 4:
        raise OutOfRangeError("e", e, "e >= 4")
    if g < 0:
        raise OutOfRangeError("g", g, "g >= 0")

    models = []
    for base_points in range(settings.max_base_points + 1):
        moving = e - base_points
        for c in range(1, moving // 2 + 1):
            d = moving - c
            if c + d < 3:
                continue
            delta = (c - 1) * (d - 1) - g
            if delta >= 0:
                models.append(
                    ModelRecord.of(c, d, delta=delta, base_points=base_points)
                )
    logger.debug(f"Found {len(models)} quadric models for e={e}, g={g}")
    return models
