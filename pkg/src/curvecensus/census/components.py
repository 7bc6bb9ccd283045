"""
This module assembles the known components of Hilbert schemes
and their dimensions from the models that build them.
"""

import math

from curvecensus.cubic import (
    CubicAnalysis,
    CubicClassSolution,
    classify_cubic_classes,
    cubic_family_dim,
)
from curvecensus.invariants import Triple, chi_min, pgl_dim
from curvecensus.liaison import grassmann_dim, linkage_dimension_account
from curvecensus.models import (
    ModelRecord,
    ResidualAnalysis,
    glevel_dim,
    hilbert_dim,
    severi_dim,
)
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings
from curvecensus.surfaces import QuadricClass
from curvecensus.utils import Tristate

from .pipeline import pipeline_components, residual_degree
from .records import ComponentRecord
from .theorems import read_theorems

QUADRICS_IN_SPACE_DIM = 9  # dim P H^0(P^3, O(2))
CUBICS_IN_SPACE = math.comb(6, 3)
LINKING_DEGREE = 4


def describe_residual_analysis(a: ResidualAnalysis, r: int) -> str:
    if isinstance(a.curve, QuadricClass):
        return (
            f"C ≅ C_E in |{a.curve}| on a smooth quadric, "
            f"embedded into P^{r} by |{a.residual}|"
        )
    assert a.curve is not None
    return f"C in {a.curve} on S_{a.curve.n}, embedded into P^{r} by {a.residual}"


def describe_cubic_analysis(a: CubicAnalysis, r: int) -> str:
    return (
        f"C ≅ C_E in {a.solution.cls} on a smooth cubic surface, "
        f"embedded into P^{r} by {a.residual}"
    )


def _quadric_space_component(t: Triple, c: int, d: int) -> ComponentRecord:
    model = ModelRecord.of(c, d, delta=0)
    dim = severi_dim(model.cls, 0) + QUADRICS_IN_SPACE_DIM
    return ComponentRecord(
        description=f"curves in |{model.cls}| on a smooth quadric",
        model=model,
        glevel_dim=dim - pgl_dim(3),
        dim=dim,
        dim_expected=chi_min(t),
    )


def _linkage_component(t: Triple) -> ComponentRecord:
    account = linkage_dimension_account(t.d, t.g, LINKING_DEGREE, LINKING_DEGREE)
    step = account.step
    return ComponentRecord(
        description=(
            f"general element directly linked to a curve of degree {step.e} "
            f"and genus {step.h} by two quartics"
        ),
        model=step,
        glevel_dim=account.component_dim - pgl_dim(3),
        dim=account.component_dim,
        dim_expected=chi_min(t),
    )


def _cubic_pencil_component(t: Triple) -> ComponentRecord:
    dim = grassmann_dim(1, CUBICS_IN_SPACE - 1)
    return ComponentRecord(
        description="complete intersections of two cubic surfaces",
        glevel_dim=dim - pgl_dim(3),
        dim=dim,
        dim_expected=chi_min(t),
    )


def _cubic_surface_component(
    t: Triple, settings: SearchSettings
) -> ComponentRecord:
    solutions = classify_cubic_classes(t.d, t.g)
    first: CubicClassSolution = solutions[0]
    dim = cubic_family_dim(first, settings)
    classes = ", ".join(str(s.cls) for s in solutions)
    return ComponentRecord(
        description=f"curves in {classes} on smooth cubic surfaces",
        model=first,
        glevel_dim=dim - pgl_dim(3),
        dim=dim,
        dim_expected=chi_min(t),
    )


def _from_analysis(
    t: Triple, a: ResidualAnalysis | CubicAnalysis
) -> ComponentRecord:
    if isinstance(a, CubicAnalysis):
        assert a.glevel_dim is not None
        glevel = a.glevel_dim
        return ComponentRecord(
            description=describe_cubic_analysis(a, t.r),
            model=a.solution,
            glevel_dim=glevel,
            dim=hilbert_dim(glevel, t.r),
            dim_expected=chi_min(t),
        )
    glevel = glevel_dim(a.model.cls, a.model.delta)
    return ComponentRecord(
        description=describe_residual_analysis(a, t.r),
        model=a.model,
        glevel_dim=glevel,
        dim=hilbert_dim(glevel, t.r),
        dim_expected=chi_min(t),
    )


def known_components(
    t: Triple, settings: SearchSettings = DEFAULT_SETTINGS
) -> list[ComponentRecord]:
    """
    The components of the Hilbert scheme that the census can describe.

    Returns an empty list when existence or irreducibility is not settled.
    """
    if t.r == 3:
        match (t.d, t.g):
            case (8, 9):
                return [_quadric_space_component(t, 4, 4)]
            case (9, 10):
                return [
                    _quadric_space_component(t, 3, 6),
                    _cubic_pencil_component(t),
                ]
            case (10, 11) | (11, 12):
                return [_linkage_component(t)]
            case (10, 12):
                return [
                    _quadric_space_component(t, 3, 7),
                    _cubic_surface_component(t, settings),
                ]
        return []

    reading = read_theorems(t)
    if (
        t.alpha != 4
        or reading.exists is not Tristate.YES
        or reading.irreducible is Tristate.UNKNOWN
        or residual_degree(t) not in (10, 11)
    ):
        return []
    return [_from_analysis(t, a) for a in pipeline_components(t, settings)]


def component_dims(
    t: Triple, settings: SearchSettings = DEFAULT_SETTINGS
) -> list[tuple[str, int]]:
    """
    Describe each component with its dimension.

    Falls back to the minimal dimension of any component
    when no component is known.
    """
    components = known_components(t, settings)
    if not components:
        return [("every component has dimension at least", chi_min(t))]
    return [
        (component.description, component.dim)
        for component in components
        if component.dim is not None
    ]

