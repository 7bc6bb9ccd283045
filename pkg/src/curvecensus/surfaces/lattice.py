"""
This module dispatches intersection numbers on either surface.
"""

from .blowup import intersect_blowup
from .classes import BlowupClass, DivisorClass, QuadricClass
from .errors import MixedSurfacesError
from .quadric import intersect_quadric


def intersect(x: DivisorClass, y: DivisorClass) -> int:
    """
    Intersect two classes living on the same surface.

    Raises:
        MixedSurfacesError: If one class is on the quadric and the other on S_n.
    """
    if isinstance(x, QuadricClass) and isinstance(y, QuadricClass):
        return intersect_quadric(x, y)
    if isinstance(x, BlowupClass) and isinstance(y, BlowupClass):
        return intersect_blowup(x, y)
    raise MixedSurfacesError(x, y)
