"""Unit tests for residual module."""

import pytest

from curvecensus.cubic import (
    CubicClassSolution,
    analyse_cubic_class,
    classify_cubic_classes,
    cubic_family_dim,
)
from curvecensus.surfaces import BlowupClass, parse_blowup_class
from curvecensus.utils import Tristate


@pytest.fixture
def degree_ten_classes() -> list[CubicClassSolution]:
    return classify_cubic_classes(10, 12)


def test_degree_ten_residuals_not_very_ample(
    degree_ten_classes: list[CubicClassSolution],
) -> None:
    analyses = [analyse_cubic_class(s) for s in degree_ten_classes]
    assert all(a.very_ample is Tristate.NO for a in analyses)
    assert [a.witness.as_divisor() for a in analyses if a.witness is not None] == [
        "e6",
        "l-e1-e2",
        "2l-e1-e2-e3-e4-e5",
    ]


def test_degree_ten_family(degree_ten_classes: list[CubicClassSolution]) -> None:
    for solution in degree_ten_classes:
        assert cubic_family_dim(solution) == 40


def test_degree_eleven_residuals_very_ample() -> None:
    for solution in classify_cubic_classes(11, 15):
        analysis = analyse_cubic_class(solution)
        assert analysis.very_ample is Tristate.YES
        assert analysis.witness is None
        assert analysis.family_dim == 44
        assert analysis.glevel_dim == 29


def test_residual_class() -> None:
    solution = CubicClassSolution.from_class(parse_blowup_class("(10;4,3^5)"))
    analysis = analyse_cubic_class(solution)
    assert analysis.residual == BlowupClass.of(4, 2, 1, 1, 1, 1, 1)
