"""
This module contains the (-1)-curve criterion for very ampleness
on S_n, and the search for curves contracted by a residual series.
"""

import logging
from typing import Optional

from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings

from .blowup import intersect_blowup
from .classes import BlowupClass
from .errors import MismatchedRankError
from .exceptional import neg_curves

logger = logging.getLogger(__name__)


def is_criterion_only(n: int, settings: SearchSettings = DEFAULT_SETTINGS) -> bool:
    """
    Check whether very-ampleness answers on S_n rest on the
    (-1)-curve criterion alone (degree 1 and 2 Del Pezzo surfaces).
    """
    return n >= settings.criterion_only_rank


def is_very_ample(
    x: BlowupClass, settings: SearchSettings = DEFAULT_SETTINGS
) -> bool:
    """
    Check whether `x.E >= 1` for every (-1)-curve `E` on S_n.

    On S_7 and S_8 this criterion can disagree with classical geometry
    (the anticanonical class of S_8 passes it), so a warning is logged.
    """
    if is_criterion_only(x.n, settings):
        logger.warning(
            f"Very-ampleness of {x} on S_{x.n} is decided "
            f"by the (-1)-curve criterion only"
        )
    return all(
        intersect_blowup(x, curve) >= 1 for curve in neg_curves(x.n, settings)
    )


def contracted_multisecant(
    residual: BlowupClass,
    curve: BlowupClass,
    settings: SearchSettings = DEFAULT_SETTINGS,
) -> Optional[BlowupClass]:
    """
    Find a (-1)-curve contracted by the residual system
    that meets the curve at least twice.

    Such a witness shows the residual series restricted to the curve
    is not very ample: the points it meets are identified.

    Args:
        residual (BlowupClass): The class cutting the residual series.
        curve (BlowupClass): The class of the curve.

    Returns:
        witness (BlowupClass | None): The first such (-1)-curve, if any.
    """
    if residual.n != curve.n:
        raise MismatchedRankError(residual.n, curve.n)
    for candidate in neg_curves(curve.n, settings):
        if (
            intersect_blowup(residual, candidate) == 0
            and intersect_blowup(curve, candidate) >= 2
        ):
            return candidate
    return None
