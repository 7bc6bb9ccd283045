"""
This module transcribes the existence and irreducibility theorems
for Hilbert schemes of linearly normal curves
with index of speciality at most 5.
"""

from dataclasses import dataclass, field

from curvecensus.invariants import Triple
from curvecensus.utils import Tristate

from . import citations

YES, NO, UNKNOWN = Tristate.YES, Tristate.NO, Tristate.UNKNOWN

# Irreducibility of the families g = r + 8 and g = r + 9 by ambient dimension.
R8_IRREDUCIBLE = {3: YES, 4: YES, 5: YES, 6: YES, 7: NO, 8: YES}
R9_IRREDUCIBLE = {
    3: YES,
    4: UNKNOWN,
    5: UNKNOWN,
    6: NO,
    7: UNKNOWN,
    8: YES,
    9: NO,
    10: YES,
    11: YES,
}


@dataclass(frozen=True)
class TheoremReading(object):
    """
    What the theorems say about one triple.

    Attributes:
        exists (Tristate): Existence of smooth linearly normal curves.
        irreducible (Tristate): Irreducibility of the Hilbert scheme.
        citations (tuple[str, ...]): Anchors of the theorems used.
        notes (tuple[str, ...]): Remarks.
    """

    exists: Tristate
    irreducible: Tristate
    citations: tuple[str, ...]
    notes: tuple[str, ...] = field(default=())


def _empty(*anchors: str, note: str = "") -> TheoremReading:
    return TheoremReading(NO, NO, anchors, (note,) if note else ())


def _read_alpha_0(t: Triple) -> TheoremReading:
    return TheoremReading(
        YES,
        YES,
        (citations.NONSPECIAL_IRREDUCIBLE,),
        ("no lower bound on the genus is assumed",),
    )


def _read_alpha_1(t: Triple) -> TheoremReading:
    if t.g <= t.r:
        return _empty(citations.SPECIALITY_ONE, note="empty for g <= r")
    return TheoremReading(YES, YES, (citations.SPECIALITY_ONE,))


def _read_alpha_2(t: Triple) -> TheoremReading:
    if t.g < t.r + 3:
        return _empty(citations.SPECIALITY_TWO, note="empty for g < r + 3")
    return TheoremReading(YES, YES, (citations.SPECIALITY_TWO,))


def _read_alpha_3(t: Triple) -> TheoremReading:
    g, r = t.g, t.r
    if g <= r + 4:
        return _empty(citations.SPECIALITY_THREE, note="empty for g <= r + 4")
    if r <= 4:
        return TheoremReading(UNKNOWN, UNKNOWN, (citations.SPECIALITY_THREE,))
    if g == r + 6 and r >= 10:
        return _empty(citations.SPECIALITY_THREE, note="empty for g = r + 6, r >= 10")
    if g >= 2 * r + 3:
        return TheoremReading(
            YES,
            YES,
            (citations.SPECIALITY_THREE, citations.SPECIALITY_THREE_LARGE_GENUS),
        )
    return TheoremReading(
        YES,
        UNKNOWN,
        (citations.SPECIALITY_THREE,),
        ("reducible for almost all g in [r + 5, 2r + 2]",),
    )


def _read_alpha_4(t: Triple) -> TheoremReading:
    g, r = t.g, t.r
    anchors = (citations.SPECIALITY_FOUR, citations.IRREDUCIBILITY_TABLE)
    if r == 3:
        if g < 9:
            return _empty(*anchors, note="empty for g < 9 in P^3")
        return TheoremReading(YES, _irreducible_r3(g), anchors)
    if r == 4:
        if g < 11:
            return _empty(*anchors, note="empty for g < 11 in P^4")
        irreducible = {11: YES, 12: YES}.get(g, UNKNOWN)
        return TheoremReading(YES, irreducible, anchors)

    if g <= r + 6:
        return _empty(*anchors, note="empty for g <= r + 6")
    if g == r + 7:
        return TheoremReading(
            YES,
            NO if r == 5 else YES,
            (citations.SPECIALITY_FOUR, citations.EXTREMAL_CURVES),
            ("extremal curves",),
        )
    if g == r + 8:
        if r >= 9:
            return _empty(
                citations.SPECIALITY_FOUR,
                citations.COMPOUNDED_NOT_VERY_AMPLE,
                note="every residual g^3_10 is compounded",
            )
        return TheoremReading(YES, R8_IRREDUCIBLE[r], anchors)
    if g == r + 9:
        if r >= 12:
            return _empty(
                citations.SPECIALITY_FOUR,
                citations.COMPOUNDED_NOT_VERY_AMPLE,
                note="every residual g^3_11 is compounded",
            )
        return TheoremReading(YES, R9_IRREDUCIBLE[r], anchors)
    return TheoremReading(
        YES, UNKNOWN, (citations.SPECIALITY_FOUR, citations.GONAL_CONSTRUCTION)
    )


def _irreducible_r3(g: int) -> Tristate:
    # (8,9,3), (9,10,3), (10,11,3), (11,12,3)
    return {9: YES, 10: NO, 11: R8_IRREDUCIBLE[3], 12: R9_IRREDUCIBLE[3]}.get(
        g, UNKNOWN
    )


def _read_alpha_5(t: Triple) -> TheoremReading:
    g, r = t.g, t.r
    anchors = (citations.SPECIALITY_FIVE,)
    if (t.d, g, r) == (10, 12, 3):
        return TheoremReading(
            YES,
            NO,
            (
                citations.SPECIALITY_FIVE,
                citations.CUBIC_SURFACE_CLASSES,
                citations.SINGULAR_CUBICS_EXCLUDED,
                citations.NORMAL_CUBIC_SPECIALIZATION,
            ),
            ("two components of the same dimension",),
        )
    if r <= 5:
        return TheoremReading(UNKNOWN, UNKNOWN, anchors)
    if g <= r + 8:
        return _empty(*anchors, note="empty for g <= r + 8")
    if g == r + 9 or g >= r + 13:
        return TheoremReading(YES, UNKNOWN, anchors)
    if g == r + 10 and r >= 9:
        return _empty(*anchors, note="empty for g = r + 10, r >= 9")
    if g == r + 11 and r >= 12:
        return _empty(*anchors, note="empty for g = r + 11, r >= 12")
    if g == r + 12 and r >= 13:
        return TheoremReading(
            YES,
            UNKNOWN,
            (citations.SPECIALITY_FIVE, citations.TRIPLE_COVER_VERY_AMPLE),
            ("rests on very ample residuals of triple covers",),
        )
    return TheoremReading(UNKNOWN, UNKNOWN, anchors)


_READERS = {
    0: _read_alpha_0,
    1: _read_alpha_1,
    2: _read_alpha_2,
    3: _read_alpha_3,
    4: _read_alpha_4,
    5: _read_alpha_5,
}


def read_theorems(t: Triple) -> TheoremReading:
    """
    Look up the theorems for a triple with `r >= 3`.

    Triples with index of speciality outside `[0, 5]` are unknown.
    """
    reader = _READERS.get(t.alpha)
    if reader is None:
        return TheoremReading(
            UNKNOWN,
            UNKNOWN,
            (citations.OUT_OF_RANGE,),
            (f"index of speciality {t.alpha} is outside the census",),
        )
    return reader(t)


def theorem_existence(t: Triple) -> Tristate:
    return read_theorems(t).exists
