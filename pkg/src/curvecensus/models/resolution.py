"""
This module resolves quadric models on blow-ups of the plane
and computes the class cutting the residual series.

A model `(c, d)` with `delta` nodes is resolved by blowing up the
quadric at one node and projecting to the plane, which gives
`(c+d-2; d-2, c-2)` on S_2, then blowing up the other nodes
(multiplicity 2) and the base points (multiplicity 1).
The residual series is cut by `K + C - H` minus the exceptional curves
over the base points, where `H = (2;1,1,0,...)` is the pulled-back
hyperplane class of the quadric.
"""

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict

from curvecensus.errors import OutOfRangeError, ScopeError
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings
from curvecensus.surfaces import (
    MAX_POINTS,
    QUADRIC_CANONICAL,
    QUADRIC_HYPERPLANE,
    BlowupClass,
    DivisorClass,
    QuadricClass,
    contracted_multisecant,
    intersect_quadric,
    is_criterion_only,
    is_very_ample,
)
from curvecensus.utils.datatypes import Tristate

from .record import ModelRecord

logger = logging.getLogger(__name__)

RULINGS = (QuadricClass(a=0, b=1), QuadricClass(a=1, b=0))


def _quadric_hyperplane(n: int) -> BlowupClass:
    return BlowupClass(a=2, b=(1, 1) + (0,) * (n - 2))


def _check_rank(n: int) -> None:
    if n > MAX_POINTS:
        raise OutOfRangeError(
            "blown-up points", n, f"at most {MAX_POINTS} general points"
        )


def proper_transform(m: ModelRecord) -> BlowupClass:
    """
    Class of the resolved nodal curve on S_{delta+1}.

    Returns:
        cls (BlowupClass): `(c+d-2; d-2, c-2, 2, ..., 2)`.

    Raises:
        ScopeError: If the model has no nodes.
        OutOfRangeError: If more than 8 points would be blown up.
    """
    if m.delta < 1:
        raise ScopeError("proper_transform", "a smooth model needs no transform")
    _check_rank(m.delta + 1)
    b = (m.d - 2, m.c - 2) + (2,) * (m.delta - 1)
    return BlowupClass(a=m.c + m.d - 2, b=b)


def resolve_model(m: ModelRecord) -> DivisorClass:
    """
    Class of the smooth curve on the surface where the series
    becomes base point free.

    Smooth models without base points stay on the quadric.
    Otherwise nodes are blown up first, then base points.
    Without nodes the first base point is the first blow-up.
    """
    if m.delta == 0 and m.base_points == 0:
        return m.cls
    if m.delta >= 1:
        a = m.c + m.d - 2
        b = (m.d - 2, m.c - 2) + (2,) * (m.delta - 1) + (1,) * m.base_points
    else:
        a = m.c + m.d - 1
        b = (m.d - 1, m.c - 1) + (1,) * (m.base_points - 1)
    _check_rank(len(b))
    return BlowupClass(a=a, b=b)


def residual_class_blowup(curve: BlowupClass) -> BlowupClass:
    """
    Class `K + C - (2;1,1,0,...)` cutting the residual series
    of a resolved nodal model without base points.

    Raises:
        OutOfRangeError: If fewer than 2 points are blown up.
    """
    if curve.n < 2:
        raise OutOfRangeError("n", curve.n, "n >= 2")
    return BlowupClass.canonical(curve.n) + curve - _quadric_hyperplane(curve.n)


def residual_class_quadric(cls: QuadricClass) -> QuadricClass:
    """Class `K + C - (1,1) = (c-3, d-3)` of a smooth model."""
    return QUADRIC_CANONICAL + cls - QUADRIC_HYPERPLANE


def model_residual(m: ModelRecord) -> DivisorClass:
    """
    Class cutting the residual series of any model,
    including its base points.
    """
    curve = resolve_model(m)
    if isinstance(curve, QuadricClass):
        return residual_class_quadric(curve)

    n = curve.n
    residual = BlowupClass.canonical(n) + curve - _quadric_hyperplane(n)
    if m.delta >= 1:
        first_base_point = m.delta + 2
    else:
        residual = residual - BlowupClass(a=1, b=(1, 1) + (0,) * (n - 2))
        first_base_point = 3
    for index in range(first_base_point, n + 1):
        residual = residual - BlowupClass.exceptional(index, n)
    return residual


def quadric_residual_very_ample(x: QuadricClass) -> bool:
    return x.a >= 1 and x.b >= 1


def secant_obstruction_base_point(cls: QuadricClass) -> Optional[int]:
    """
    Multisecant order `min(c, d)` of the ruling through a base point.
    """
    order = min(cls.a, cls.b)
    return order if order >= 1 else None


def base_point_obstructed(cls: QuadricClass) -> bool:
    """
    Check whether projecting from a base point on the curve
    creates a singularity.

    This happens when the residual `(c-3, d-3)` maps a ruling
    through the point to a line meeting the curve at least 3 times.
    """
    residual = residual_class_quadric(cls)
    return any(
        intersect_quadric(residual, ruling) == 1
        and intersect_quadric(cls, ruling) >= 3
        for ruling in RULINGS
    )


class ResidualAnalysis(BaseModel):
    """
    The resolved curve class of a model, the residual class,
    and whether the residual series is very ample on the curve.

    Attributes:
        model (ModelRecord): The analysed model.
        curve (DivisorClass | None): Class of the resolved curve.
        transform (BlowupClass | None): Proper transform of the nodal curve.
        residual (DivisorClass | None): Class cutting the residual series.
        very_ample (Tristate): Verdict on the residual series.
        witness (BlowupClass | None): A contracted multisecant curve.
        criterion_only (bool): Whether a positive answer rests
            on the (-1)-curve criterion on S_7 or S_8.
        note (str): How the verdict was reached.
    """

    model_config = ConfigDict(frozen=True)

    model: ModelRecord
    curve: Optional[DivisorClass] = None
    transform: Optional[BlowupClass] = None
    residual: Optional[DivisorClass] = None
    very_ample: Tristate
    witness: Optional[BlowupClass] = None
    criterion_only: bool = False
    note: str


def analyse_model(
    m: ModelRecord, settings: SearchSettings = DEFAULT_SETTINGS
) -> ResidualAnalysis:
    """
    Decide whether the residual series of a model is very ample.

    Answers `NO` when a residual bidegree is not positive,
    when a ruling through a base point becomes a multisecant line,
    or when a contracted multisecant (-1)-curve is found.
    Answers `UNKNOWN` on S_7 and S_8, beyond S_8,
    and when the residual fails the criterion without a witness.
    """
    transform = proper_transform(m) if 1 <= m.delta < MAX_POINTS else None
    try:
        curve = resolve_model(m)
    except OutOfRangeError:
        return ResidualAnalysis(
            model=m,
            very_ample=Tristate.UNKNOWN,
            note="resolution needs more than 8 blown-up points",
        )
    residual = model_residual(m)

    if isinstance(curve, QuadricClass):
        assert isinstance(residual, QuadricClass)
        very_ample = quadric_residual_very_ample(residual)
        return ResidualAnalysis(
            model=m,
            curve=curve,
            residual=residual,
            very_ample=Tristate.from_bool(very_ample),
            note=f"residual {residual} on the quadric",
        )

    assert isinstance(residual, BlowupClass)
    if m.delta == 0 and base_point_obstructed(m.cls):
        verdict = Tristate.NO
        note = "a ruling through the base point becomes a multisecant line"
    else:
        verdict = Tristate.UNKNOWN
        note = ""
    witness = contracted_multisecant(residual, curve, settings)
    criterion_only = is_criterion_only(curve.n, settings)
    if witness is not None:
        verdict = Tristate.NO
        note = f"{witness.as_divisor()} is contracted and meets the curve twice"
    elif verdict is not Tristate.NO:
        if criterion_only:
            note = f"S_{curve.n} is beyond the (-1)-curve criterion"
            logger.info(f"Leaving {m} undecided: {note}")
        elif is_very_ample(residual, settings):
            verdict = Tristate.YES
            note = f"residual {residual} meets every (-1)-curve"
        else:
            note = (
                f"residual {residual} is not ample but no multisecant is contracted"
            )
    return ResidualAnalysis(
        model=m,
        curve=curve,
        transform=transform,
        residual=residual,
        very_ample=verdict,
        witness=witness,
        criterion_only=criterion_only,
        note=note,
    )
