"""
This module scans the census over a range of triples
and checks it against independent computations.
"""

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, computed_field
from rich.progress import Progress

from curvecensus.errors import OutOfRangeError
from curvecensus.invariants import Triple, exceeds_castelnuovo
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings
from curvecensus.utils import Tristate

from .pipeline import pipeline_existence
from .theorems import theorem_existence
from .verdict import verdict

logger = logging.getLogger(__name__)


class Disagreement(BaseModel):
    model_config = ConfigDict(frozen=True)

    triple: Triple
    theorem: Tristate
    pipeline: Tristate


class ScanReport(BaseModel):
    """
    The outcome of a scan.

    Attributes:
        alpha (int): Index of speciality scanned.
        r_max (int): Largest ambient dimension.
        g_max (int): Largest genus.
        triples (int): Number of triples evaluated.
        existing (int): Number of triples with curves.
        castelnuovo_violations (list[Triple]): Triples reported to exist
            above the Castelnuovo bound.
        disagreements (list[Disagreement]): Triples where the theorems
            and the pipeline disagree on existence.
        uncited (list[Triple]): Verdicts without a citation.
    """

    model_config = ConfigDict(frozen=True)

    alpha: int
    r_max: int
    g_max: int
    triples: int
    existing: int
    castelnuovo_violations: list[Triple]
    disagreements: list[Disagreement]
    uncited: list[Triple]

    @computed_field
    @property
    def consistent(self) -> bool:
        return not (self.castelnuovo_violations or self.disagreements or self.uncited)


def dual_path_applies(t: Triple) -> bool:
    return t.alpha == 4 and t.r >= 5


def scan(
    alpha: int,
    r_max: Optional[int] = None,
    settings: SearchSettings = DEFAULT_SETTINGS,
    show_progress: bool = True,
) -> ScanReport:
    """
    Evaluate every verdict with index of speciality `alpha`
    for `3 <= r <= r_max` and `0 <= g <= settings.scan_g_max`.

    Raises:
        OutOfRangeError: If `r_max < 3`.
    """
    r_max = settings.scan_r_max if r_max is None else r_max
    if r_max < 3:
        raise OutOfRangeError("r_max", r_max, "r_max >= 3")
    triples = [
        Triple.with_speciality(alpha, g, r)
        for r in range(3, r_max + 1)
        for g in range(settings.scan_g_max + 1)
        if g + r - alpha >= 1
    ]

    existing = 0
    violations: list[Triple] = []
    disagreements: list[Disagreement] = []
    uncited: list[Triple] = []
    with Progress(transient=True, disable=not show_progress) as progress:
        task = progress.add_task(
            f"Scanning index of speciality {alpha}...", total=len(triples)
        )
        for t in triples:
            v = verdict(t, settings)
            if v.exists is Tristate.YES:
                existing += 1
            if exceeds_castelnuovo(t.d, t.g, t.r) and v.exists is not Tristate.NO:
                violations.append(t)
            if not v.citations:
                uncited.append(t)
            if dual_path_applies(t):
                theorem = theorem_existence(t)
                pipeline = pipeline_existence(t, settings)
                if theorem is not pipeline:
                    logger.warning(
                        f"{t}: theorems say {theorem}, pipeline says {pipeline}"
                    )
                    disagreements.append(
                        Disagreement(triple=t, theorem=theorem, pipeline=pipeline)
                    )
            progress.advance(task)

    return ScanReport(
        alpha=alpha,
        r_max=r_max,
        g_max=settings.scan_g_max,
        triples=len(triples),
        existing=existing,
        castelnuovo_violations=violations,
        disagreements=disagreements,
        uncited=uncited,
    )
