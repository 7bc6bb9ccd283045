"""
This module analyses the residual series of curves on the cubic surface
and counts the family of such curves in space.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict

from curvecensus.invariants import pgl_dim
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings
from curvecensus.surfaces import (
    BlowupClass,
    VanishingNotJustifiedError,
    contracted_multisecant,
    expected_h0_blowup,
    is_very_ample,
)
from curvecensus.utils import Tristate

from .classification import CubicClassSolution, cubic_residual

CUBIC_FORMS_DIM = 19  # dim P H^0(P^3, O(3))


def cubic_family_dim(
    s: CubicClassSolution, settings: SearchSettings = DEFAULT_SETTINGS
) -> int:
    """
    Dimension `19 + dim|C|` of the family of curves in the class
    lying on some smooth cubic.

    Raises:
        VanishingNotJustifiedError: If `h0` cannot be certified.
    """
    return CUBIC_FORMS_DIM + expected_h0_blowup(s.cls, settings) - 1


class CubicAnalysis(BaseModel):
    """
    The residual series of a curve on the cubic surface.

    Attributes:
        solution (CubicClassSolution): The curve class.
        residual (BlowupClass): Class `2K + C` cutting the residual series.
        very_ample (Tristate): Whether the residual series is very ample.
        witness (BlowupClass | None): A contracted multisecant line.
        family_dim (int | None): Dimension of the family in P^3.
        glevel_dim (int | None): The same family modulo automorphisms of P^3.
    """

    model_config = ConfigDict(frozen=True)

    solution: CubicClassSolution
    residual: BlowupClass
    very_ample: Tristate
    witness: Optional[BlowupClass] = None
    family_dim: Optional[int] = None
    glevel_dim: Optional[int] = None


def analyse_cubic_class(
    s: CubicClassSolution, settings: SearchSettings = DEFAULT_SETTINGS
) -> CubicAnalysis:
    """
    Decide whether the residual series of a curve on the cubic is very ample.

    A line contracted by `2K + C` and meeting the curve twice
    identifies two points; otherwise the (-1)-curve criterion on S_6 decides.
    """
    residual = cubic_residual(s)
    witness = contracted_multisecant(residual, s.cls, settings)
    if witness is not None:
        verdict = Tristate.NO
    else:
        verdict = Tristate.from_bool(is_very_ample(residual, settings))
    try:
        family_dim: Optional[int] = cubic_family_dim(s, settings)
    except VanishingNotJustifiedError:
        family_dim = None
    return CubicAnalysis(
        solution=s,
        residual=residual,
        very_ample=verdict,
        witness=witness,
        family_dim=family_dim,
        glevel_dim=None if family_dim is None else family_dim - pgl_dim(3),
    )
