"""Unit tests for classes module."""

import pytest
from pydantic import ValidationError

from curvecensus.surfaces import (
    BlowupClass,
    ClassSyntaxError,
    MismatchedRankError,
    QuadricClass,
    parse_blowup_class,
    parse_class,
    parse_quadric_class,
)


def test_parse_quadric_class() -> None:
    assert parse_class("(5,6)") == QuadricClass(a=5, b=6)
    assert parse_class(" ( 3 , -2 ) ") == QuadricClass(a=3, b=-2)


def test_parse_blowup_class_exponents() -> None:
    assert parse_class("(8;3^2,2^3)") == BlowupClass.of(8, 3, 3, 2, 2, 2)
    assert parse_class("(10;4,3^{5})") == BlowupClass.of(10, 4, 3, 3, 3, 3, 3)
    assert parse_class("(−3;−1^6)") == BlowupClass.canonical(6)


def test_output_is_expanded(cubic_curve: BlowupClass) -> None:
    assert str(cubic_curve) == "(9;3,3,3,3,3,2)"
    assert parse_class(str(cubic_curve)) == cubic_curve


@pytest.mark.parametrize(
    "text", ["", "(1)", "(1;)", "(1;2^0)", "(1,2,3)", "(1;a)", "(1;1^9)", "[1;1]"]
)
def test_parse_errors(text: str) -> None:
    with pytest.raises(ClassSyntaxError):
        parse_class(text)


def test_typed_parsers() -> None:
    with pytest.raises(ClassSyntaxError):
        parse_blowup_class("(1,1)")
    with pytest.raises(ClassSyntaxError):
        parse_quadric_class("(1;1)")


def test_rank_is_bounded() -> None:
    with pytest.raises(ValidationError):
        BlowupClass(a=1, b=())
    with pytest.raises(ValidationError):
        BlowupClass(a=1, b=(0,) * 9)


def test_arithmetic(cubic_hyperplane: BlowupClass) -> None:
    canonical = BlowupClass.canonical(6)
    assert cubic_hyperplane + canonical == BlowupClass(a=0, b=(0,) * 6)
    assert 2 * canonical == BlowupClass.of(-6, -2, -2, -2, -2, -2, -2)
    assert QuadricClass(a=5, b=5) - QuadricClass(a=1, b=1) == QuadricClass(a=4, b=4)
    with pytest.raises(MismatchedRankError):
        BlowupClass.canonical(5) + canonical


def test_exceptional_and_line() -> None:
    assert BlowupClass.exceptional(2, 3) == BlowupClass.of(0, 0, -1, 0)
    assert BlowupClass.line(2) == BlowupClass.of(1, 0, 0)
    assert BlowupClass.of(1, 1).padded(3) == BlowupClass.of(1, 1, 0, 0)


def test_as_divisor() -> None:
    assert BlowupClass.exceptional(6, 6).as_divisor() == "e6"
    assert BlowupClass.of(1, 1, 1, 0, 0, 0, 0).as_divisor() == "l-e1-e2"
    assert BlowupClass.of(2, 1, 1, 1, 1, 1, 0).as_divisor() == "2l-e1-e2-e3-e4-e5"
    assert BlowupClass(a=0, b=(0, 0)).as_divisor() == "0"


def test_serialises_as_text() -> None:
    assert QuadricClass(a=3, b=7).model_dump() == "(3,7)"
    assert BlowupClass.model_validate("(3;1^6)") == BlowupClass.of(3, *[1] * 6)
