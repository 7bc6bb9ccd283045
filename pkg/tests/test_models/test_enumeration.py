"""Unit tests for enumeration module."""

import pytest

from curvecensus.errors import OutOfRangeError
from curvecensus.invariants import castelnuovo_pi
from curvecensus.models import enumerate_quadric_models
from curvecensus.settings import SearchPresets


def test_models_of_degree_ten_genus_twelve() -> None:
    models = enumerate_quadric_models(10, 12)
    assert [(m.c, m.d, m.delta, m.base_points) for m in models] == [
        (3, 7, 0, 0),
        (4, 6, 3, 0),
        (5, 5, 4, 0),
        (4, 5, 0, 1),
    ]


def test_models_satisfy_degree_genus_law() -> None:
    for e in range(4, 14):
        for g in range(0, 22):
            for m in enumerate_quadric_models(e, g):
                assert m.c + m.d + m.base_points == e
                assert (m.c - 1) * (m.d - 1) - m.delta == g
                assert 1 <= m.c <= m.d


def test_base_point_budget() -> None:
    standard = enumerate_quadric_models(11, 9)
    exploratory = enumerate_quadric_models(11, 9, SearchPresets.EXPLORATORY)
    assert max(m.base_points for m in standard) <= 2
    assert set(standard) < set(exploratory)


def test_enumeration_range() -> None:
    with pytest.raises(OutOfRangeError):
        enumerate_quadric_models(3, 0)
    with pytest.raises(OutOfRangeError):
        enumerate_quadric_models(10, -1)


def test_no_models_above_castelnuovo() -> None:
    for e in range(4, 20):
        pi = castelnuovo_pi(e, 3)
        for g in range(pi + 1, pi + 10):
            assert enumerate_quadric_models(e, g) == []


def test_twisted_cubic_bidegree_with_base_points() -> None:
    models = enumerate_quadric_models(4, 0, SearchPresets.EXPLORATORY)
    assert (1, 2, 0, 1) in [(m.c, m.d, m.delta, m.base_points) for m in models]
