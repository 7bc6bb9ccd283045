"""Unit tests for summary module."""

import pytest
from pydantic import ValidationError

from curvecensus.invariants import Triple, summarise


def test_triple_alpha() -> None:
    t = Triple.with_speciality(4, 12, 4)
    assert (t.d, t.g, t.r) == (12, 12, 4)
    assert t.alpha == 4
    assert str(t) == "(12,12,4)"


def test_triple_rejects_negative_genus() -> None:
    with pytest.raises(ValidationError):
        Triple.of(5, -1, 3)


def test_summarise() -> None:
    summary = summarise(Triple.of(10, 12, 3))
    assert summary.alpha == 5
    assert summary.rho == -8
    assert summary.lambda_ == 25
    assert summary.chi_min == 40
    assert summary.pi == 16
    assert summary.pi1_r3 == 12


def test_summarise_omits_undefined_bounds() -> None:
    summary = summarise(Triple.of(3, 0, 4))
    assert summary.pi is None
    assert summary.pi1_r3 is None
    assert "lambda" in summary.model_dump(by_alias=True)
