"""
This module assembles the census tables.

Each row lists the constructions of curves for one triple.
The constructions are transcribed, but every class, residual,
stratum, dimension and irreducibility entry is recomputed.
"""

from dataclasses import dataclass
from enum import StrEnum
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict

from curvecensus.cubic import CubicClassSolution, analyse_cubic_class
from curvecensus.gonal import existence_recipe, gonality_name
from curvecensus.invariants import Triple, pgl_dim
from curvecensus.liaison import linkage_dimension_account
from curvecensus.models import ModelRecord, analyse_model, glevel_dim
from curvecensus.settings import DEFAULT_SETTINGS, SearchSettings
from curvecensus.surfaces import parse_blowup_class
from curvecensus.utils import Tristate

from . import citations
from .components import (
    LINKING_DEGREE,
    describe_cubic_analysis,
    describe_residual_analysis,
)
from .errors import UnknownFamilyError
from .pipeline import residual_degree
from .verdict import verdict


class TableFamily(StrEnum):
    R8 = "r+8"
    R9 = "r+9"
    GG4 = "gg4"


@dataclass(frozen=True)
class _Model(object):
    c: int
    d: int
    delta: int
    base_points: int = 0
    component: bool = True


@dataclass(frozen=True)
class _Cubic(object):
    cls: str


@dataclass(frozen=True)
class _Linked(object):
    pass


@dataclass(frozen=True)
class _Recipe(object):
    pass


@dataclass(frozen=True)
class _Cited(object):
    description: str
    remark: str
    citation: str


type _Construction = _Model | _Cubic | _Linked | _Recipe | _Cited

_SCROLL = _Cited(
    "a curve in |3H+2L| on a rational normal scroll "
    "with a very ample |K - 3g^1_3|",
    "Trigonal",
    citations.SCROLL_CURVES,
)
_BORDIGA = _Cited("a curve on a Bordiga surface", "", citations.BORDIGA_CURVES)

# g = r + 8, keyed by r
R8_ROWS: dict[int, tuple[_Construction, ...]] = {
    3: (_Linked(), _Model(5, 5, 5, component=False)),
    4: (_Model(5, 5, 4),),
    5: (_Model(5, 5, 3),),
    6: (_Model(5, 5, 2),),
    7: (_Model(5, 5, 1), _Model(4, 6, 0)),
    8: (_Model(5, 5, 0),),
}

# g = r + 9, keyed by r
R9_ROWS: dict[int, tuple[_Construction, ...]] = {
    3: (_Model(5, 5, 4, base_points=1, component=False), _Linked()),
    4: (_Model(5, 5, 3, base_points=1), _Model(5, 6, 7)),
    5: (_Model(5, 5, 2, base_points=1), _Model(5, 6, 6)),
    6: (_Cubic("(10;4,3^5)"), _Model(5, 6, 5)),
    7: (_Model(5, 5, 0, base_points=1), _Model(5, 6, 4)),
    8: (_Model(5, 6, 3),),
    9: (_Model(4, 7, 0), _Model(5, 6, 2)),
    10: (_Model(5, 6, 1),),
    11: (_Model(5, 6, 0),),
}

# d = g in P^4, keyed by g
GG4_ROWS: dict[int, tuple[_Construction, ...]] = {
    11: (_SCROLL,),
    12: (_Model(5, 5, 4),),
    13: (_Model(5, 5, 3, base_points=1),),
    14: (_Recipe(),),
    15: (_Recipe(),),
    16: (_BORDIGA,),
    17: (_Recipe(),),
    18: (_Recipe(),),
    19: (_BORDIGA,),
}

TITLES = {
    TableFamily.GG4: "Smooth curves in H^L_{g,g,4} for 11 <= g <= 19",
    TableFamily.R8: "H^L_{2r+4,r+8,r} for 3 <= r <= 8",
    TableFamily.R9: "H^L_{2r+5,r+9,r} for 3 <= r <= 11",
}


class TableEntry(BaseModel):
    """
    One construction of curves in a table row.

    Attributes:
        description (str): The curves and their embedding.
        curve_class (str | None): Class of the curve on its surface.
        stratum (str | None): Severi stratum or surface of the residual curve.
        base_locus (bool | None): Whether the residual series has base points.
        glevel_dim (int | None): Dimension of the family of pairs
            (curve, series), modulo automorphisms.
        very_ample (Tristate | None): Recomputed verdict on the embedding.
        component (bool): Whether the curves fill a component.
        remark (str | None): Gonality or other annotation.
        citation (str | None): Anchor of a quoted construction.
    """

    model_config = ConfigDict(frozen=True)

    description: str
    curve_class: Optional[str] = None
    stratum: Optional[str] = None
    base_locus: Optional[bool] = None
    glevel_dim: Optional[int] = None
    very_ample: Optional[Tristate] = None
    component: bool = True
    remark: Optional[str] = None
    citation: Optional[str] = None


class TableRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    triple: Optional[Triple] = None
    entries: list[TableEntry]
    irreducible: Optional[Tristate] = None


class CensusTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: TableFamily
    title: str
    rows: list[TableRow]


def _model_entry(
    construction: _Model, t: Triple, gonality: bool, settings: SearchSettings
) -> TableEntry:
    m = ModelRecord.of(
        construction.c,
        construction.d,
        delta=construction.delta,
        base_points=construction.base_points,
    )
    if (m.e, m.g) != (residual_degree(t), t.g):
        raise ValueError(f"{m} does not model the residual series of {t}")
    analysis = analyse_model(m, settings)
    return TableEntry(
        description=describe_residual_analysis(analysis, t.r),
        curve_class=None if analysis.curve is None else str(analysis.curve),
        stratum=m.stratum,
        base_locus=m.base_points > 0,
        glevel_dim=glevel_dim(m.cls, m.delta),
        very_ample=analysis.very_ample,
        component=construction.component,
        remark=gonality_name(m.c) if gonality else None,
        citation=citations.QUADRIC_MODELS,
    )


def _cubic_entry(
    construction: _Cubic, t: Triple, settings: SearchSettings
) -> TableEntry:
    solution = CubicClassSolution.from_class(parse_blowup_class(construction.cls))
    if (solution.d, solution.g) != (residual_degree(t), t.g):
        raise ValueError(f"{solution} does not model the residual series of {t}")
    analysis = analyse_cubic_class(solution, settings)
    return TableEntry(
        description=describe_cubic_analysis(analysis, t.r),
        curve_class=str(solution.cls),
        stratum="on a smooth cubic surface",
        base_locus=False,
        glevel_dim=analysis.glevel_dim,
        very_ample=analysis.very_ample,
    )


def _linked_entry(t: Triple) -> TableEntry:
    account = linkage_dimension_account(t.d, t.g, LINKING_DEGREE, LINKING_DEGREE)
    step = account.step
    return TableEntry(
        description=(
            f"general element directly linked to a curve of degree {step.e} "
            f"and genus {step.h} in a complete intersection of two quartics"
        ),
        glevel_dim=account.component_dim - pgl_dim(t.r),
        remark=f"dim {account.component_dim}",
        citation=citations.LIAISON_IRREDUCIBLE,
    )


def _recipe_entry(t: Triple) -> TableEntry:
    recipe = existence_recipe(t.g, t.r)
    if recipe is None:
        raise ValueError(f"no k-gonal construction for {t}")
    return TableEntry(
        description=f"a curve with a very ample {recipe.series}",
        very_ample=Tristate.YES,
        remark=recipe.gonality,
        citation=citations.GONAL_CONSTRUCTION,
    )


def _entry(
    construction: _Construction, t: Triple, gonality: bool, settings: SearchSettings
) -> TableEntry:
    match construction:
        case _Model():
            return _model_entry(construction, t, gonality, settings)
        case _Cubic():
            return _cubic_entry(construction, t, settings)
        case _Linked():
            return _linked_entry(t)
        case _Recipe():
            return _recipe_entry(t)
        case _Cited():
            return TableEntry(
                description=construction.description,
                remark=construction.remark or None,
                citation=construction.citation,
            )
    raise TypeError(f"unexpected construction {construction!r}")


def _row(
    t: Triple,
    constructions: tuple[_Construction, ...],
    settings: SearchSettings,
    *,
    gonality: bool,
    with_irreducibility: bool,
) -> TableRow:
    label = f"({t.d},{t.g})" if gonality else str(t)
    return TableRow(
        label=label,
        triple=t,
        entries=[_entry(item, t, gonality, settings) for item in constructions],
        irreducible=verdict(t, settings).irreducible if with_irreducibility else None,
    )


def _empty_row(label: str) -> TableRow:
    return TableRow(
        label=label,
        entries=[
            TableEntry(
                description="empty",
                citation=citations.COMPOUNDED_NOT_VERY_AMPLE,
            )
        ],
    )


def build_table(
    family: TableFamily | str,
    include: Optional[Iterable[int]] = None,
    settings: SearchSettings = DEFAULT_SETTINGS,
) -> CensusTable:
    """
    Build a census table.

    Args:
        family (TableFamily | str): `r+8`, `r+9` or `gg4`.
        include (Iterable[int] | None): Restrict to these values of `r`
            (or of `g` for `gg4`). The closing empty row is only
            included when every row is.

    Raises:
        UnknownFamilyError: If the family is not recognised.
    """
    try:
        family = TableFamily(family)
    except ValueError:
        raise UnknownFamilyError(
            str(family), [f.value for f in TableFamily]
        ) from None
    wanted = None if include is None else set(include)

    rows = []
    match family:
        case TableFamily.GG4:
            for g, constructions in GG4_ROWS.items():
                if wanted is None or g in wanted:
                    rows.append(
                        _row(
                            Triple.of(g, g, 4),
                            constructions,
                            settings,
                            gonality=True,
                            with_irreducibility=False,
                        )
                    )
        case TableFamily.R8 | TableFamily.R9:
            offset, table_rows, closing = {
                TableFamily.R8: (8, R8_ROWS, "(2r+4,r+8,r), r >= 9"),
                TableFamily.R9: (9, R9_ROWS, "(2r+5,r+9,r), r >= 12"),
            }[family]
            for r, constructions in table_rows.items():
                if wanted is None or r in wanted:
                    t = Triple.with_speciality(4, r + offset, r)
                    rows.append(
                        _row(
                            t,
                            constructions,
                            settings,
                            gonality=False,
                            with_irreducibility=True,
                        )
                    )
            if wanted is None:
                rows.append(_empty_row(closing))
    return CensusTable(family=family, title=TITLES[family], rows=rows)
