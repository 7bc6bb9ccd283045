"""
This module produces the census verdict for a triple.
"""

import logging

from curvecensus.cubic import CubicClassSolution, singular_cubic_report
from curvecensus.errors import OutOfRangeError
from curvecensus.invariants import Triple, castelnuovo_pi, exceeds_castelnuovo
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings
from curvecensus.utils import Tristate

from . import citations
from .components import known_components
from .records import Verdict
from .theorems import read_theorems

logger = logging.getLogger(__name__)


def _castelnuovo_note(t: Triple) -> str:
    if t.d < t.r:
        return f"degree {t.d} is below r = {t.r}"
    return f"genus {t.g} exceeds pi({t.d},{t.r}) = {castelnuovo_pi(t.d, t.r)}"


def verdict(t: Triple, settings: SearchSettings = DEFAULT_SETTINGS) -> Verdict:
    """
    Decide existence and irreducibility of the Hilbert scheme
    of smooth linearly normal curves with invariants `t`.

    Triples above the Castelnuovo bound are rejected first.
    Otherwise the theorems are read off by index of speciality,
    and the known components are attached when curves exist.

    Raises:
        OutOfRangeError: If `r < 3`.
    """
    if t.r < 3:
        raise OutOfRangeError("r", t.r, "r >= 3")
    if exceeds_castelnuovo(t.d, t.g, t.r):
        return Verdict(
            triple=t,
            alpha=t.alpha,
            exists=Tristate.NO,
            irreducible=Tristate.NO,
            citations=[citations.CASTELNUOVO_BOUND],
            notes=[_castelnuovo_note(t)],
        )

    reading = read_theorems(t)
    components = (
        known_components(t, settings) if reading.exists is Tristate.YES else []
    )
    notes = list(reading.notes)
    on_cubics = any(isinstance(c.model, CubicClassSolution) for c in components)
    if t.r == 3 and on_cubics:
        if singular_cubic_report(t.d, t.g).excluded:
            notes.append("curves on singular cubic surfaces fill no component")
    logger.debug(
        f"{t}: exists={reading.exists}, irreducible={reading.irreducible}, "
        f"{len(components)} known components"
    )
    return Verdict(
        triple=t,
        alpha=t.alpha,
        exists=reading.exists,
        irreducible=reading.irreducible,
        components=components,
        citations=list(reading.citations),
        notes=notes,
    )
