"""Unit tests for severi module."""

import pytest

from curvecensus.errors import OutOfRangeError
from curvecensus.models import glevel_dim, hilbert_dim, severi_dim
from curvecensus.surfaces import QuadricClass


def test_severi_dim() -> None:
    assert severi_dim(QuadricClass(a=5, b=5), 4) == 31
    with pytest.raises(OutOfRangeError):
        severi_dim(QuadricClass(a=3, b=3), 5)


def test_glevel_dim() -> None:
    assert glevel_dim(QuadricClass(a=5, b=5), 4) == 25
    assert glevel_dim(QuadricClass(a=4, b=7), 0) == 33
    assert glevel_dim(QuadricClass(a=5, b=6), 5) == 30


def test_hilbert_dim() -> None:
    assert hilbert_dim(25, 4) == 49
