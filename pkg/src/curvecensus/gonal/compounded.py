"""
This module classifies compounded series of degree `e`,
whose maps factor through a cover of degree `k`
onto a curve of degree `f` in P^3.
"""

from curvecensus.errors import OutOfRangeError, ScopeError
from curvecensus.invariants import castelnuovo_pi

COMPOUNDED_DESCRIPTIONS = {
    (2, 5): "double cover of a genus 2 curve",
    (2, 4): "bielliptic",
    (2, 3): "hyperelliptic",
    (3, 3): "trigonal with base locus",
}

LEMMA_DEGREES = (10, 11)


def compounded_cases(e: int) -> list[tuple[int, int]]:
    """
    Every sheet number `k >= 2` and image degree `f >= 3` with `k*f <= e`.

    Returns:
        cases (list[tuple[int, int]]): Pairs `(k, f)` sorted by `k`,
            then by decreasing `f`.

    Raises:
        OutOfRangeError: If `e < 6`.
    """
    if e < 6:
        raise OutOfRangeError("e", e, "e >= 6")
    return [
        (k, f)
        for k in range(2, e // 3 + 1)
        for f in range(e // k, 2, -1)
    ]


def describe_compounded(k: int, f: int) -> str:
    return COMPOUNDED_DESCRIPTIONS.get(
        (k, f), f"{k}-sheeted cover of a degree {f} space curve"
    )


def compounded_excludes_very_ample(e: int, g: int, r: int) -> bool:
    """
    Check whether every `g^3_e` on a curve of genus `g` is compounded,
    so that the residual series is never very ample.

    This happens when `g` exceeds the Castelnuovo bound `pi(e, 3)`.

    Raises:
        ScopeError: If `e` is not 10 or 11.
        OutOfRangeError: If `e != g - r + 2`.
    """
    if e not in LEMMA_DEGREES:
        raise ScopeError(
            "compounded_excludes_very_ample", f"only e in {LEMMA_DEGREES}, got {e}"
        )
    if e != g - r + 2:
        raise OutOfRangeError("e", e, f"e = g - r + 2 = {g - r + 2}")
    return g > castelnuovo_pi(e, 3)
