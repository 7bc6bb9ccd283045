"""Unit tests for exceptional module."""

import pytest

from curvecensus.errors import OutOfRangeError
from curvecensus.surfaces import (
    BlowupClass,
    VanishingNotJustifiedError,
    contracted_multisecant,
    expected_h0_blowup,
    intersect_blowup,
    is_neg_curve,
    is_very_ample,
    neg_curves,
    pa_blowup,
)


@pytest.mark.parametrize(
    "n, count", [(1, 1), (2, 3), (3, 6), (4, 10), (5, 16), (6, 27), (7, 56), (8, 240)]
)
def test_neg_curve_count(n: int, count: int) -> None:
    assert len(neg_curves(n)) == count


def test_neg_curves_are_sorted() -> None:
    curves = neg_curves(6)
    assert curves[0] == BlowupClass.exceptional(1, 6)
    assert curves == sorted(curves, key=lambda c: c.sort_key)
    assert all(intersect_blowup(c, c) == -1 for c in curves)


def test_neg_curves_range() -> None:
    with pytest.raises(OutOfRangeError):
        neg_curves(0)
    with pytest.raises(OutOfRangeError):
        neg_curves(9)


def test_is_neg_curve() -> None:
    assert is_neg_curve(BlowupClass.of(2, 1, 1, 1, 1, 1, 0))
    assert not is_neg_curve(BlowupClass.of(1, 1, 0, 0, 0, 0, 0))


def test_is_very_ample(cubic_hyperplane: BlowupClass) -> None:
    assert is_very_ample(cubic_hyperplane)
    assert is_very_ample(BlowupClass.of(4, 2, 1, 1, 1, 1, 1))
    assert not is_very_ample(BlowupClass.of(3, 1, 1, 1, 1, 1, 0))


def test_contracted_multisecant(cubic_curve: BlowupClass) -> None:
    residual = BlowupClass.of(3, 1, 1, 1, 1, 1, 0)
    assert contracted_multisecant(residual, cubic_curve) == BlowupClass.exceptional(
        6, 6
    )
    assert contracted_multisecant(BlowupClass.of(3, *[1] * 6), cubic_curve) is None


def test_expected_h0(
    cubic_curve: BlowupClass, cubic_hyperplane: BlowupClass
) -> None:
    assert expected_h0_blowup(cubic_hyperplane) == 4
    assert expected_h0_blowup(cubic_curve) == 22


def test_expected_h0_not_justified() -> None:
    with pytest.raises(VanishingNotJustifiedError):
        expected_h0_blowup(BlowupClass.of(-3, 0, 0))
    with pytest.raises(VanishingNotJustifiedError):
        expected_h0_blowup(BlowupClass.of(1, 3, 0))


@pytest.mark.parametrize("n", range(1, 9))
def test_neg_curves_are_smooth_rational(n: int) -> None:
    assert all(pa_blowup(c) == 0 for c in neg_curves(n))


@pytest.mark.parametrize("n", range(1, 8))
def test_neg_curves_pull_back(n: int) -> None:
    larger = set(neg_curves(n + 1))
    assert all(c.padded(n + 1) in larger for c in neg_curves(n))
