"""
This module computes section counts on S_n by Riemann-Roch,
where the vanishing of higher cohomology can be certified.
"""

from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings

from .blowup import canonical_degree, intersect_blowup
from .classes import BlowupClass
from .errors import VanishingNotJustifiedError
from .exceptional import neg_curves


def expected_h0_blowup(
    x: BlowupClass, settings: SearchSettings = DEFAULT_SETTINGS
) -> int:
    """
    Number of sections `1 + (x^2 - x.K) / 2` of the line bundle `x`.

    The value is exact only when `h1 = h2 = 0`.
    This is certified by checking that `x - K = (a+3; b_i+1)`
    meets the line class and every (-1)-curve positively.

    Raises:
        VanishingNotJustifiedError: If the positivity check fails.
    """
    shifted = x - BlowupClass.canonical(x.n)
    if shifted.a <= 0:
        raise VanishingNotJustifiedError(x, None)
    for curve in neg_curves(x.n, settings):
        if intersect_blowup(shifted, curve) <= 0:
            raise VanishingNotJustifiedError(x, curve)
    return 1 + (intersect_blowup(x, x) - canonical_degree(x)) // 2
