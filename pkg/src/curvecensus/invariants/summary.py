"""
This module collects every invariant of a triple into one record.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from .brill_noether import chi_min, lambda_, rho
from .castelnuovo import castelnuovo_pi, castelnuovo_pi1_r3
from .triple import Triple


class InvariantSummary(BaseModel):
    """
    The closed-form invariants of a triple.

    `pi` is omitted when the Castelnuovo bound is undefined
    (`r < 3` or `d < r`), `pi1_r3` unless `r = 3` and `d >= 7`.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    alpha: int
    rho: int
    lambda_: int = Field(alias="lambda")
    chi_min: int
    pi: Optional[int] = None
    pi1_r3: Optional[int] = None


def summarise(t: Triple) -> InvariantSummary:
    pi = castelnuovo_pi(t.d, t.r) if t.r >= 3 and t.d >= t.r else None
    pi1 = castelnuovo_pi1_r3(t.d) if t.r == 3 and t.d >= 7 else None
    return InvariantSummary(
        alpha=t.alpha,
        rho=rho(t),
        lambda_=lambda_(t),
        chi_min=chi_min(t),
        pi=pi,
        pi1_r3=pi1,
    )
