"""
This module decides existence for index of speciality 4
by computation rather than by quoting theorems.

A curve of genus `g` in P^r with index of speciality 4
has a residual series `g^3_e` with `e = g - r + 2`.
For `e` in {10, 11} these series are modelled by curves on the quadric,
and for `g >= r + 10` they come from general k-gonal curves.
"""

import logging
from typing import Union

from curvecensus.cubic import CubicAnalysis, analyse_cubic_class, classify_cubic_classes
from curvecensus.errors import ScopeError
from curvecensus.gonal import compounded_excludes_very_ample, existence_recipe
from curvecensus.invariants import (
    Triple,
    castelnuovo_pi,
    castelnuovo_pi1_r3,
    exceeds_castelnuovo,
)
from curvecensus.models import (
    ResidualAnalysis,
    analyse_model,
    enumerate_quadric_models,
)
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings
from curvecensus.utils import Tristate

logger = logging.getLogger(__name__)

QUADRIC_MODEL_DEGREES = (10, 11)

type ComponentAnalysis = Union[ResidualAnalysis, CubicAnalysis]


def residual_degree(t: Triple) -> int:
    return t.g - t.r + 2


def _check_scope(t: Triple, operation: str, r_min: int) -> None:
    if t.alpha != 4 or t.r < r_min:
        raise ScopeError(
            operation, f"needs index of speciality 4 and r >= {r_min}, got {t}"
        )


def very_ample_models(
    t: Triple, settings: SearchSettings = DEFAULT_SETTINGS
) -> list[ResidualAnalysis]:
    """
    Quadric models of the residual series whose own residual,
    the hyperplane series, is certified very ample.
    """
    analyses = [
        analyse_model(m, settings)
        for m in enumerate_quadric_models(residual_degree(t), t.g, settings)
        if not m.compounded_or_degenerate
    ]
    return [a for a in analyses if a.very_ample is Tristate.YES]


def pipeline_existence(
    t: Triple, settings: SearchSettings = DEFAULT_SETTINGS
) -> Tristate:
    """
    Decide existence for index of speciality 4 and `r >= 5`
    from the Castelnuovo bound, the k-gonal constructions,
    the compounded series lemma and the quadric models.

    Raises:
        ScopeError: Outside index of speciality 4 and `r >= 5`.
    """
    _check_scope(t, "pipeline_existence", 5)
    if exceeds_castelnuovo(t.d, t.g, t.r):
        return Tristate.NO
    if t.g == castelnuovo_pi(t.d, t.r):
        return Tristate.YES
    if t.g >= t.r + 10:
        return Tristate.from_bool(existence_recipe(t.g, t.r) is not None)

    e = residual_degree(t)
    if e not in QUADRIC_MODEL_DEGREES:
        return Tristate.UNKNOWN
    if compounded_excludes_very_ample(e, t.g, t.r):
        return Tristate.NO
    for m in enumerate_quadric_models(e, t.g, settings):
        if m.compounded_or_degenerate:
            continue
        if analyse_model(m, settings).very_ample is Tristate.YES:
            logger.debug(f"{t} exists: residual modelled by {m}")
            return Tristate.YES
    return Tristate.UNKNOWN


def pipeline_components(
    t: Triple, settings: SearchSettings = DEFAULT_SETTINGS
) -> list[ComponentAnalysis]:
    """
    The families filling components for `g = r + 8` and `g = r + 9`.

    Each is a base point free quadric model with very ample residual,
    plus the curves on cubic surfaces when `g <= pi_1(e, 3)`,
    of which the first very ample class stands for the whole family.
    Models with base points never fill a component.

    Raises:
        ScopeError: Outside index of speciality 4 and `r >= 4`.
    """
    _check_scope(t, "pipeline_components", 4)
    e = residual_degree(t)
    if e not in QUADRIC_MODEL_DEGREES or exceeds_castelnuovo(t.d, t.g, t.r):
        return []
    components: list[ComponentAnalysis] = [
        a for a in very_ample_models(t, settings) if a.model.base_points == 0
    ]
    if t.g <= castelnuovo_pi1_r3(e):
        for solution in classify_cubic_classes(e, t.g):
            analysis = analyse_cubic_class(solution, settings)
            if analysis.very_ample is Tristate.YES:
                components.append(analysis)
                break
    return components
