"""Unit tests for theorems module."""

import pytest

from curvecensus.census import read_theorems, theorem_existence
from curvecensus.census import citations
from curvecensus.census.theorems import R8_IRREDUCIBLE, R9_IRREDUCIBLE
from curvecensus.invariants import Triple
from curvecensus.utils import Tristate


@pytest.mark.parametrize("r, irreducible", R8_IRREDUCIBLE.items())
def test_genus_r_plus_8(r: int, irreducible: Tristate) -> None:
    reading = read_theorems(Triple.with_speciality(4, r + 8, r))
    assert reading.exists is Tristate.YES
    assert reading.irreducible is irreducible


@pytest.mark.parametrize("r, irreducible", R9_IRREDUCIBLE.items())
def test_genus_r_plus_9(r: int, irreducible: Tristate) -> None:
    reading = read_theorems(Triple.with_speciality(4, r + 9, r))
    assert reading.exists is Tristate.YES
    assert reading.irreducible is irreducible


def test_compounded_residuals_empty() -> None:
    reading = read_theorems(Triple.with_speciality(4, 17, 9))
    assert reading.exists is Tristate.NO
    assert citations.COMPOUNDED_NOT_VERY_AMPLE in reading.citations
    assert theorem_existence(Triple.with_speciality(4, 21, 12)) is Tristate.NO


def test_extremal_curves() -> None:
    assert read_theorems(Triple.with_speciality(4, 12, 5)).irreducible is Tristate.NO
    assert read_theorems(Triple.with_speciality(4, 13, 6)).irreducible is Tristate.YES


def test_speciality_three() -> None:
    assert theorem_existence(Triple.with_speciality(3, 9, 5)) is Tristate.NO
    reading = read_theorems(Triple.with_speciality(3, 13, 5))
    assert (reading.exists, reading.irreducible) == (Tristate.YES, Tristate.YES)
    assert theorem_existence(Triple.with_speciality(3, 16, 10)) is Tristate.NO


def test_speciality_five() -> None:
    assert theorem_existence(Triple.with_speciality(5, 14, 6)) is Tristate.NO
    assert theorem_existence(Triple.with_speciality(5, 15, 6)) is Tristate.YES
    assert theorem_existence(Triple.with_speciality(5, 19, 9)) is Tristate.NO
    reading = read_theorems(Triple.with_speciality(5, 25, 13))
    assert citations.TRIPLE_COVER_VERY_AMPLE in reading.citations


def test_every_reading_is_cited() -> None:
    for alpha in range(0, 8):
        for r in range(3, 14):
            for g in range(0, 30):
                if g + r - alpha >= 1:
                    t = Triple.with_speciality(alpha, g, r)
                    assert read_theorems(t).citations
