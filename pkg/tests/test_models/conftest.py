"""Fixtures for models module unit tests."""

import pytest

from curvecensus.models import ModelRecord


@pytest.fixture
def nodal_model() -> ModelRecord:
    return ModelRecord.of(5, 5, delta=4)


@pytest.fixture
def multisecant_model() -> ModelRecord:
    return ModelRecord.of(4, 6, delta=3)


@pytest.fixture
def base_point_model() -> ModelRecord:
    return ModelRecord.of(4, 5, delta=0, base_points=1)
