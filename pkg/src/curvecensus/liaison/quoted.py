"""
This module loads Hilbert scheme dimensions quoted from the literature.
"""

from curvecensus.utils.library import LIBRARY_ROOT, HasLibrary


class QuotedHilbertScheme(HasLibrary, path=LIBRARY_ROOT / "hilbert_schemes"):
    """
    A Hilbert scheme of space curves with a known dimension.

    Attributes:
        print_name (str): Printable name of the Hilbert scheme.
        d (int): Degree.
        g (int): Genus.
        r (int): Ambient dimension.
        dimension (int): Dimension of the Hilbert scheme.
        citation (str): Where the dimension comes from.
    """

    print_name: str
    d: int
    g: int
    r: int
    dimension: int
    citation: str


def item_name(d: int, g: int, r: int) -> str:
    return f"H_{d}_{g}_{r}"


def quoted_dimension(d: int, g: int, r: int) -> int:
    """
    Raises:
        ItemNotFoundError: If no dimension is recorded for `(d, g, r)`.
    """
    return QuotedHilbertScheme.get_item(item_name(d, g, r)).dimension
