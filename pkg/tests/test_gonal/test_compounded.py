"""Unit tests for compounded module."""

import pytest

from curvecensus.errors import OutOfRangeError, ScopeError
from curvecensus.gonal import (
    compounded_cases,
    compounded_excludes_very_ample,
    describe_compounded,
)


def test_compounded_cases_of_degree_ten() -> None:
    assert compounded_cases(10) == [(2, 5), (2, 4), (2, 3), (3, 3)]
    assert compounded_cases(6) == [(2, 3)]
    with pytest.raises(OutOfRangeError):
        compounded_cases(5)


def test_compounded_cases_brute_force() -> None:
    for e in range(6, 31):
        expected = {
            (k, f)
            for k in range(2, e + 1)
            for f in range(3, e + 1)
            if k * f <= e
        }
        cases = compounded_cases(e)
        assert len(cases) == len(expected)
        assert set(cases) == expected


def test_describe_compounded() -> None:
    assert describe_compounded(2, 4) == "bielliptic"
    assert describe_compounded(4, 3) == "4-sheeted cover of a degree 3 space curve"


def test_compounded_excludes_very_ample() -> None:
    assert not compounded_excludes_very_ample(10, 16, 8)
    assert compounded_excludes_very_ample(10, 17, 9)
    assert not compounded_excludes_very_ample(11, 20, 11)
    assert compounded_excludes_very_ample(11, 21, 12)


def test_compounded_excludes_scope() -> None:
    with pytest.raises(ScopeError):
        compounded_excludes_very_ample(12, 20, 10)
    with pytest.raises(OutOfRangeError):
        compounded_excludes_very_ample(10, 20, 10)
