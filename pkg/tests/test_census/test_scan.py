"""Unit tests for scan module."""

import pytest

from curvecensus.census import scan
from curvecensus.errors import OutOfRangeError


def test_scan_speciality_four() -> None:
    report = scan(4, r_max=12, show_progress=False)
    assert report.triples == 59 + 60 + 8 * 61
    assert report.castelnuovo_violations == []
    assert report.disagreements == []
    assert report.uncited == []
    assert report.consistent


def test_scan_other_speciality() -> None:
    report = scan(3, r_max=6, show_progress=False)
    assert report.consistent
    assert report.existing > 0


def test_scan_range() -> None:
    with pytest.raises(OutOfRangeError):
        scan(4, r_max=2, show_progress=False)
