"""
This module defines divisor classes on the smooth quadric
and on blow-ups of the plane, and their text grammar.

Quadric classes are written `(a,b)`.
Blow-up classes are written `(a;b1,...,bn)` for `a*l - sum(bi*ei)`;
the exponent shorthand `(8;3^2,2^3)` is accepted on input
and always expanded on output.
"""

from __future__ import annotations

import re
from typing import Any, Sequence

from pydantic import (
    BaseModel,
    ConfigDict,
    field_validator,
    model_serializer,
    model_validator,
)

from curvecensus.errors import OutOfRangeError

from .errors import ClassSyntaxError, MismatchedRankError

MAX_POINTS = 8

_MINUS_SIGNS = str.maketrans({"−": "-", "–": "-"})
_CLASS_PATTERN = re.compile(r"^\(\s*(-?\d+)\s*([,;])(.*)\)$")
_ENTRY_PATTERN = re.compile(r"^(-?\d+)(?:\^\{?(\d+)\}?)?$")


class QuadricClass(BaseModel):
    """
    A divisor class of bidegree `(a, b)` on the quadric P1 x P1.

    Attributes:
        a (int): Degree on the first ruling.
        b (int): Degree on the second ruling.
    """

    model_config = ConfigDict(frozen=True)

    a: int
    b: int

    @model_validator(mode="before")
    @classmethod
    def _parse_text(cls, data: Any) -> Any:
        if isinstance(data, str):
            parsed = parse_class(data)
            if not isinstance(parsed, QuadricClass):
                raise ValueError(f"'{data}' is not a quadric class")
            return {"a": parsed.a, "b": parsed.b}
        return data

    @model_serializer
    def _serialise(self) -> str:
        return str(self)

    @property
    def is_effective(self) -> bool:
        return self.a >= 0 and self.b >= 0

    def __str__(self) -> str:
        return f"({self.a},{self.b})"

    def __add__(self, other: QuadricClass) -> QuadricClass:
        return QuadricClass(a=self.a + other.a, b=self.b + other.b)

    def __sub__(self, other: QuadricClass) -> QuadricClass:
        return QuadricClass(a=self.a - other.a, b=self.b - other.b)

    def __mul__(self, scalar: int) -> QuadricClass:
        return QuadricClass(a=scalar * self.a, b=scalar * self.b)

    __rmul__ = __mul__


class BlowupClass(BaseModel):
    """
    The divisor class `a*l - sum(b_i*e_i)` on the blow-up S_n
    of the plane at `n` general points.

    Negative multiplicities are allowed,
    so the canonical class is `(-3;-1,...,-1)`
    and the exceptional curve `e_i` has `b_i = -1`.

    Attributes:
        a (int): Multiple of the pulled-back line class `l`.
        b (tuple[int, ...]): Subtracted multiples of the exceptional classes.
    """

    model_config = ConfigDict(frozen=True)

    a: int
    b: tuple[int, ...]

    @model_validator(mode="before")
    @classmethod
    def _parse_text(cls, data: Any) -> Any:
        if isinstance(data, str):
            parsed = parse_class(data)
            if not isinstance(parsed, BlowupClass):
                raise ValueError(f"'{data}' is not a blow-up class")
            return {"a": parsed.a, "b": parsed.b}
        return data

    @field_validator("b")
    @classmethod
    def _check_rank(cls, b: tuple[int, ...]) -> tuple[int, ...]:
        if not 1 <= len(b) <= MAX_POINTS:
            raise ValueError(
                f"a blow-up class needs 1 to {MAX_POINTS} multiplicities, "
                f"got {len(b)}"
            )
        return b

    @model_serializer
    def _serialise(self) -> str:
        return str(self)

    @property
    def n(self) -> int:
        """Number of blown-up points."""
        return len(self.b)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.a, self.b)

    @classmethod
    def of(cls, a: int, *b: int) -> BlowupClass:
        return cls(a=a, b=tuple(b))

    @classmethod
    def canonical(cls, n: int) -> BlowupClass:
        """The canonical class `-3l + e_1 + ... + e_n`."""
        return cls(a=-3, b=(-1,) * n)

    @classmethod
    def line(cls, n: int) -> BlowupClass:
        """The pull-back of a line."""
        return cls(a=1, b=(0,) * n)

    @classmethod
    def exceptional(cls, index: int, n: int) -> BlowupClass:
        """The exceptional curve over the `index`-th point (counting from 1)."""
        if not 1 <= index <= n:
            raise OutOfRangeError("index", index, f"1 <= index <= {n}")
        b = [0] * n
        b[index - 1] = -1
        return cls(a=0, b=tuple(b))

    def padded(self, n: int) -> BlowupClass:
        """The same class pulled back to S_n, `n >= self.n`."""
        if n < self.n:
            raise OutOfRangeError("n", n, f"n >= {self.n}")
        return BlowupClass(a=self.a, b=self.b + (0,) * (n - self.n))

    def _check_rank_matches(self, other: BlowupClass) -> None:
        if self.n != other.n:
            raise MismatchedRankError(self.n, other.n)

    def __add__(self, other: BlowupClass) -> BlowupClass:
        self._check_rank_matches(other)
        return BlowupClass(
            a=self.a + other.a, b=tuple(x + y for x, y in zip(self.b, other.b))
        )

    def __sub__(self, other: BlowupClass) -> BlowupClass:
        self._check_rank_matches(other)
        return BlowupClass(
            a=self.a - other.a, b=tuple(x - y for x, y in zip(self.b, other.b))
        )

    def __mul__(self, scalar: int) -> BlowupClass:
        return BlowupClass(a=scalar * self.a, b=tuple(scalar * x for x in self.b))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.a};{','.join(str(x) for x in self.b)})"

    def as_divisor(self) -> str:
        """
        Write the class as a combination of `l` and the `e_i`,
        e.g. `l-e1-e2` or `e6`.
        """
        terms = []
        if self.a:
            terms.append(_term(self.a, "l"))
        for index, multiplicity in enumerate(self.b, start=1):
            if multiplicity:
                terms.append(_term(-multiplicity, f"e{index}"))
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


def _term(coefficient: int, symbol: str) -> str:
    sign = "-" if coefficient < 0 else "+"
    magnitude = abs(coefficient)
    return f"{sign}{'' if magnitude == 1 else magnitude}{symbol}"


type DivisorClass = QuadricClass | BlowupClass


def parse_class(text: str) -> DivisorClass:
    """
    Parse a divisor class from its text form.

    Args:
        text (str): `(a,b)` for the quadric or `(a;b1,...,bn)` for a blow-up.

    Returns:
        cls (DivisorClass): The parsed class.

    Raises:
        ClassSyntaxError: If the text does not follow the grammar.
    """
    cleaned = text.strip().translate(_MINUS_SIGNS)
    match = _CLASS_PATTERN.match(cleaned)
    if match is None:
        raise ClassSyntaxError(text, "expected '(a,b)' or '(a;b1,...,bn)'")
    a = int(match.group(1))
    separator = match.group(2)
    entries = [entry.strip() for entry in match.group(3).split(",")]

    if separator == ",":
        if len(entries) != 1 or not re.fullmatch(r"-?\d+", entries[0]):
            raise ClassSyntaxError(text, "a quadric class has two integers")
        return QuadricClass(a=a, b=int(entries[0]))

    multiplicities = _expand_entries(text, entries)
    if not 1 <= len(multiplicities) <= MAX_POINTS:
        raise ClassSyntaxError(
            text, f"expected 1 to {MAX_POINTS} multiplicities"
        )
    return BlowupClass(a=a, b=tuple(multiplicities))


def _expand_entries(text: str, entries: Sequence[str]) -> list[int]:
    multiplicities: list[int] = []
    for entry in entries:
        match = _ENTRY_PATTERN.match(entry.replace(" ", ""))
        if match is None:
            raise ClassSyntaxError(text, f"bad multiplicity '{entry}'")
        value = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) is not None else 1
        if repeat < 1:
            raise ClassSyntaxError(text, f"bad exponent in '{entry}'")
        multiplicities.extend([value] * repeat)
    return multiplicities


def parse_blowup_class(text: str) -> BlowupClass:
    parsed = parse_class(text)
    if not isinstance(parsed, BlowupClass):
        raise ClassSyntaxError(text, "expected a blow-up class '(a;b1,...,bn)'")
    return parsed


def parse_quadric_class(text: str) -> QuadricClass:
    parsed = parse_class(text)
    if not isinstance(parsed, QuadricClass):
        raise ClassSyntaxError(text, "expected a quadric class '(a,b)'")
    return parsed
