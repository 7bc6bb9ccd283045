"""Fixtures for surfaces module unit tests."""

import pytest

from curvecensus.surfaces import BlowupClass


@pytest.fixture
def cubic_hyperplane() -> BlowupClass:
    return BlowupClass.of(3, 1, 1, 1, 1, 1, 1)


@pytest.fixture
def cubic_curve() -> BlowupClass:
    return BlowupClass.of(9, 3, 3, 3, 3, 3, 2)
