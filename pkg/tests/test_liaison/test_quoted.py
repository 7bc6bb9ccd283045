"""Unit tests for quoted module."""

import pytest

from curvecensus.liaison import QuotedHilbertScheme, quoted_dimension
from curvecensus.utils.library import ItemNotFoundError


def test_library_items() -> None:
    assert QuotedHilbertScheme.list_items() == ["H_3_0_3", "H_5_0_3", "H_6_3_3"]
    assert QuotedHilbertScheme.item_exists("H_6_3_3")
    assert not QuotedHilbertScheme.item_exists("H_7_5_3")


def test_quoted_dimension() -> None:
    assert quoted_dimension(6, 3, 3) == 24
    assert quoted_dimension(5, 0, 3) == 20
    assert quoted_dimension(3, 0, 3) == 12
    with pytest.raises(ItemNotFoundError):
        quoted_dimension(7, 5, 3)


def test_library_loads_every_item() -> None:
    library = QuotedHilbertScheme.library()
    assert set(library) == {"H_3_0_3", "H_5_0_3", "H_6_3_3"}
    for item in library.values():
        # non-special space curves: 4d
        assert item.dimension == 4 * item.d
        assert item.citation


def test_item_from_name() -> None:
    item = QuotedHilbertScheme.model_validate("H_6_3_3")
    assert (item.d, item.g, item.r) == (6, 3, 3)
    assert QuotedHilbertScheme.model_validate_json(item.to_json()) == item
