"""Unit tests for pipeline module."""

import pytest

from curvecensus.census import pipeline_components, pipeline_existence
from curvecensus.cubic import CubicAnalysis
from curvecensus.errors import ScopeError
from curvecensus.invariants import Triple
from curvecensus.models import ResidualAnalysis
from curvecensus.utils import Tristate


@pytest.mark.parametrize(
    "r, count", [(4, 1), (5, 1), (6, 1), (7, 2), (8, 1), (9, 0)]
)
def test_components_genus_r_plus_8(r: int, count: int) -> None:
    assert len(pipeline_components(Triple.with_speciality(4, r + 8, r))) == count


@pytest.mark.parametrize("r, count", [(6, 2), (8, 1), (9, 2), (10, 1), (11, 1)])
def test_components_genus_r_plus_9(r: int, count: int) -> None:
    assert len(pipeline_components(Triple.with_speciality(4, r + 9, r))) == count


def test_cubic_component() -> None:
    components = pipeline_components(Triple.with_speciality(4, 15, 6))
    assert isinstance(components[0], ResidualAnalysis)
    assert isinstance(components[1], CubicAnalysis)
    assert str(components[1].solution) == "(10;4,3,3,3,3,3)"


def test_base_point_models_fill_no_component() -> None:
    t = Triple.with_speciality(4, 14, 5)
    assert pipeline_existence(t) is Tristate.YES
    assert pipeline_components(t) == []


@pytest.mark.parametrize(
    "g, r, expected",
    [
        (11, 5, Tristate.NO),
        (12, 5, Tristate.YES),
        (13, 5, Tristate.YES),
        (14, 5, Tristate.YES),
        (15, 5, Tristate.YES),
        (17, 9, Tristate.NO),
        (21, 12, Tristate.NO),
        (20, 11, Tristate.YES),
    ],
)
def test_pipeline_existence(g: int, r: int, expected: Tristate) -> None:
    assert pipeline_existence(Triple.with_speciality(4, g, r)) is expected


def test_pipeline_scope() -> None:
    with pytest.raises(ScopeError):
        pipeline_existence(Triple.with_speciality(4, 12, 4))
    with pytest.raises(ScopeError):
        pipeline_existence(Triple.with_speciality(3, 12, 6))
    with pytest.raises(ScopeError):
        pipeline_components(Triple.of(10, 11, 3))
