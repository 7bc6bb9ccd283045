"""
This module defines settings for the bounded searches.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class SearchSettings(object):
    """
    Settings for the bounded searches.

    Attributes:
        max_base_points (int): Largest base locus degree considered
            when enumerating quadric models.
        neg_curve_degree_max (int): Largest line multiple `a`
            searched for (-1)-curves.
        neg_curve_multiplicity_min (int): Smallest multiplicity searched.
        neg_curve_multiplicity_max (int): Largest multiplicity searched.
        criterion_only_rank (int): From this number of blown-up points on,
            very-ampleness answers rest on the (-1)-curve criterion alone.
        oracle_degree_margin (int): The unpruned cubic oracle searches
            `a` up to `d + oracle_degree_margin`.
        scan_r_max (int): Largest ambient dimension visited by scans.
        scan_g_max (int): Largest genus visited by scans.
    """

    max_base_points: int = 2
    neg_curve_degree_max: int = 6
    neg_curve_multiplicity_min: int = -1
    neg_curve_multiplicity_max: int = 3
    criterion_only_rank: int = 7
    oracle_degree_margin: int = 10
    scan_r_max: int = 20
    scan_g_max: int = 60

    def with_overrides(self, **overrides: int | None) -> "SearchSettings":
        """
        Copy the settings, replacing any values that are not `None`.
        """
        changes = {
            key: value for key, value in overrides.items() if value is not None
        }
        return replace(self, **changes)


class SearchPresets(object):
    """
    Search setting presets.

    Attributes:
        STANDARD: The bounds needed to reproduce the census tables.
        EXPLORATORY: Allows one more base point in the model search.
    """

    STANDARD: SearchSettings = SearchSettings()
    EXPLORATORY: SearchSettings = SearchSettings(max_base_points=3)

    @classmethod
    def names(cls) -> list[str]:
        return [name for name in vars(cls) if name.isupper()]

    @classmethod
    def get(cls, name: str) -> SearchSettings:
        try:
            return getattr(cls, name.upper())
        except AttributeError:
            raise KeyError(
                f"Unknown preset '{name}'. Available presets: {cls.names()}"
            ) from None


DEFAULT_SETTINGS = SearchPresets.STANDARD
