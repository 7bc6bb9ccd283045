"""Fixtures for census module unit tests."""

import pytest

from curvecensus.invariants import Triple


@pytest.fixture
def cubic_triple() -> Triple:
    return Triple.of(10, 12, 3)


@pytest.fixture
def two_component_triple() -> Triple:
    return Triple.with_speciality(4, 15, 7)
