"""
This module counts the dimension of a family of space curves
through the family of curves linked to them.

Curves `C` linked to `C'` by two surfaces of degree `s` form a family
fibred over the Hilbert scheme of `C'` with fibre the pencils
of surfaces through `C'`. The same family is fibred over the
Hilbert scheme of `C` with fibre the pencils of surfaces through `C`.
"""

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict

from curvecensus.errors import ScopeError

from .linkage import LiaisonStep, grassmann_dim, surfaces_through
from .quoted import quoted_dimension

logger = logging.getLogger(__name__)

ACCOUNT_CITATIONS = (
    "linked-curves-cohomology-vanishing",
    "linked-curve-hilbert-dimension",
)


class LinkageAccount(BaseModel):
    """
    Attributes:
        step (LiaisonStep): The linkage.
        surfaces_source (int): Surfaces of degree `s` through `C`.
        surfaces_residual (int): Surfaces of degree `s` through `C'`.
        dim_residual_hilbert (int): Dimension of the Hilbert scheme of `C'`.
        fiber_down (int): Pencils of surfaces through `C'`.
        sigma_dim (int): Dimension of the family of pairs (C', pencil).
        fiber_up (int): Pencils of surfaces through `C`.
        component_dim (int): Dimension of the family of curves `C`.
        citations (list[str]): Facts used but not computed.
    """

    model_config = ConfigDict(frozen=True)

    step: LiaisonStep
    surfaces_source: int
    surfaces_residual: int
    dim_residual_hilbert: int
    fiber_down: int
    sigma_dim: int
    fiber_up: int
    component_dim: int
    citations: list[str]


def linkage_dimension_account(
    d: int,
    g: int,
    s: int,
    t: int,
    dim_residual_hilbert: Optional[int] = None,
) -> LinkageAccount:
    """
    Count the family of curves `(d, g)` linked by two surfaces of degree `s`.

    Args:
        d, g (int): Degree and genus of the curves.
        s, t (int): Degrees of the linking surfaces, equal.
        dim_residual_hilbert (int | None): Dimension of the Hilbert scheme
            of the residual curves. Looked up in the quoted library if `None`.

    Raises:
        ScopeError: If `s != t`.
        ItemNotFoundError: If no dimension is given or recorded.
    """
    if s != t:
        raise ScopeError(
            "linkage_dimension_account", f"needs s = t, got ({s},{t})"
        )
    step = LiaisonStep.link(d, g, s, t)
    if dim_residual_hilbert is None:
        dim_residual_hilbert = quoted_dimension(step.e, step.h, 3)
    surfaces_residual = surfaces_through(step.e, step.h, s)
    surfaces_source = surfaces_through(d, g, s)
    fiber_down = grassmann_dim(1, surfaces_residual - 1)
    fiber_up = grassmann_dim(1, surfaces_source - 1)
    sigma_dim = fiber_down + dim_residual_hilbert
    logger.debug(
        f"Linkage {step}: {surfaces_residual} surfaces through the residual, "
        f"{surfaces_source} through the curve"
    )
    return LinkageAccount(
        step=step,
        surfaces_source=surfaces_source,
        surfaces_residual=surfaces_residual,
        dim_residual_hilbert=dim_residual_hilbert,
        fiber_down=fiber_down,
        sigma_dim=sigma_dim,
        fiber_up=fiber_up,
        component_dim=sigma_dim - fiber_up,
        citations=list(ACCOUNT_CITATIONS),
    )
