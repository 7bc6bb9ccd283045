"""Unit tests for classification module."""

import pytest
from pydantic import ValidationError

from curvecensus.cubic import (
    CubicClassSolution,
    brute_force_cubic_classes,
    brute_force_cubic_table,
    classify_cubic_classes,
    cubic_residual,
    line_decomposition,
    schwartz_range,
)
from curvecensus.errors import OutOfRangeError
from curvecensus.surfaces import BlowupClass, intersect_blowup


def test_schwartz_range() -> None:
    assert schwartz_range(10, 12) == (9, 11)
    assert schwartz_range(3, 5) is None
    with pytest.raises(OutOfRangeError):
        schwartz_range(0, 0)


def test_classes_of_degree_ten_genus_twelve() -> None:
    solutions = classify_cubic_classes(10, 12)
    assert [str(s) for s in solutions] == [
        "(9;3,3,3,3,3,2)",
        "(10;4,4,3,3,3,3)",
        "(11;4,4,4,4,4,3)",
    ]
    assert [s.orbit_size for s in solutions] == [6, 15, 6]


def test_lines_of_degree_ten_genus_twelve() -> None:
    lines = [line_decomposition(s) for s in classify_cubic_classes(10, 12)]
    assert [line.as_divisor() for line in lines if line is not None] == [
        "e6",
        "l-e1-e2",
        "2l-e1-e2-e3-e4-e5",
    ]


def test_classes_of_degree_eleven_genus_fifteen() -> None:
    solutions = classify_cubic_classes(11, 15)
    assert [str(s) for s in solutions] == [
        "(10;4,3,3,3,3,3)",
        "(11;4,4,4,4,3,3)",
        "(12;5,4,4,4,4,4)",
    ]
    assert schwartz_range(11, 15) == (10, 12)


def test_plane_sections_and_lines() -> None:
    assert [str(s) for s in classify_cubic_classes(3, 1)] == ["(3;1,1,1,1,1,1)"]
    assert [str(s) for s in classify_cubic_classes(1, 0)] == [
        "(1;1,1,0,0,0,0)",
        "(2;1,1,1,1,1,0)",
    ]


def test_oracle_agrees() -> None:
    for d in range(1, 13):
        table = brute_force_cubic_table(d, 14)
        for g in range(15):
            pruned = [s.cls for s in classify_cubic_classes(d, g)]
            assert pruned == [s.cls for s in table[g]], (d, g)


def test_brute_force_classes() -> None:
    assert brute_force_cubic_classes(10, 12) == classify_cubic_classes(10, 12)


def test_solution_invariants() -> None:
    with pytest.raises(ValidationError):
        CubicClassSolution(cls=BlowupClass.of(9, 2, 3, 3, 3, 3, 3), d=10, g=12)
    with pytest.raises(ValidationError):
        CubicClassSolution(cls=BlowupClass.of(9, 3, 3, 3, 3, 3, 2), d=11, g=12)
    with pytest.raises(ValidationError):
        CubicClassSolution(cls=BlowupClass.of(9, 3, 3, 3, 3, 3, 2), d=10, g=11)


def test_cubic_residual() -> None:
    solution = classify_cubic_classes(10, 12)[0]
    assert cubic_residual(solution) == BlowupClass.of(3, 1, 1, 1, 1, 1, 0)


def test_residual_degree_law() -> None:
    for d in range(1, 13):
        for g in range(0, 15):
            for s in classify_cubic_classes(d, g):
                residual = cubic_residual(s)
                assert intersect_blowup(residual, s.cls) == 2 * g - 2 - d
