"""
Command line entry point for the census.

Every subcommand prints a rich rendering by default
and a deterministic JSON document with `--json`.
Precondition failures exit with code 2.
"""

import argparse
from argparse import Namespace
import logging
import sys
from typing import Any, Callable, Optional, Sequence

from pydantic import BaseModel
from rich.console import Console
from rich.markdown import Markdown
from rich.table import Table

from curvecensus.census import (
    SCHEMA_VERSION,
    TableFamily,
    build_table,
    dump_json,
    render_table_json,
    render_table_markdown,
    render_verdict_json,
    render_verdict_markdown,
    scan,
    verdict,
)
from curvecensus.census.render import tristate_style
from curvecensus.cubic import (
    analyse_cubic_class,
    classify_cubic_classes,
    schwartz_range,
    singular_cubic_report,
)
from curvecensus.errors import CensusError, OutOfRangeError
from curvecensus.gonal import (
    build_recipe,
    compounded_cases,
    compounded_excludes_very_ample,
    describe_compounded,
)
from curvecensus.invariants import Triple, summarise
from curvecensus.liaison import (
    LiaisonStep,
    QuotedHilbertScheme,
    linkage_dimension_account,
)
from curvecensus.models import (
    analyse_model,
    enumerate_quadric_models,
    quadric_residual_very_ample,
)
from curvecensus.settings import SearchPresets, SearchSettings
from curvecensus.surfaces import (
    BlowupClass,
    intersect,
    intersect_blowup,
    is_criterion_only,
    is_very_ample,
    neg_curves,
    pa_blowup,
    pa_quadric,
    parse_class,
)
from curvecensus.utils import Tristate

logger = logging.getLogger(__name__)

type Handler = Callable[[Namespace, SearchSettings, Console], int]

ACCOUNT_ROWS = [
    "surfaces_residual",
    "surfaces_source",
    "dim_residual_hilbert",
    "fiber_down",
    "sigma_dim",
    "fiber_up",
    "component_dim",
]


def _triple(d: int, g: int, r: int) -> Triple:
    if d < 1:
        raise OutOfRangeError("d", d, "d >= 1")
    if g < 0:
        raise OutOfRangeError("g", g, "g >= 0")
    if r < 3:
        raise OutOfRangeError("r", r, "r >= 3")
    return Triple.of(d, g, r)


def _emit_json(payload: Any) -> None:
    sys.stdout.write(dump_json(payload))


def _dump(item: BaseModel) -> Any:
    return item.model_dump(mode="json", by_alias=True)


def _styled(value: Tristate) -> str:
    return f"[{tristate_style(value)}]{value}[/]"


def _invariants(args: Namespace, _: SearchSettings, console: Console) -> int:
    t = _triple(args.d, args.g, args.r)
    summary = summarise(t)
    if args.json:
        _emit_json({"triple": _dump(t), "invariants": _dump(summary)})
        return 0
    table = Table(title=f"Invariants of {t}")
    table.add_column("Invariant")
    table.add_column("Value", justify="right")
    for name, value in _dump(summary).items():
        table.add_row(name, "" if value is None else str(value))
    console.print(table)
    return 0


def _verdict(args: Namespace, settings: SearchSettings, console: Console) -> int:
    v = verdict(_triple(args.d, args.g, args.r), settings)
    if args.json:
        sys.stdout.write(render_verdict_json(v))
    else:
        console.print(Markdown(render_verdict_markdown(v)))
    return 0


def _table(args: Namespace, settings: SearchSettings, console: Console) -> int:
    table = build_table(args.family, args.only, settings)
    if args.json:
        sys.stdout.write(render_table_json(table))
    else:
        sys.stdout.write(render_table_markdown(table))
    return 0


def _quadric_models(
    args: Namespace, settings: SearchSettings, console: Console
) -> int:
    analyses = [
        analyse_model(m, settings)
        for m in enumerate_quadric_models(args.e, args.g, settings)
    ]
    if args.json:
        _emit_json({"schema": SCHEMA_VERSION, "models": [_dump(a) for a in analyses]})
        return 0
    table = Table(title=f"Quadric models of a g^3_{args.e} on a genus {args.g} curve")
    for column in ["Model", "Curve", "Residual", "Very ample", "Witness", "Note"]:
        table.add_column(column)
    for a in analyses:
        table.add_row(
            str(a.model),
            "" if a.curve is None else str(a.curve),
            "" if a.residual is None else str(a.residual),
            _styled(a.very_ample),
            "" if a.witness is None else a.witness.as_divisor(),
            a.note,
        )
    console.print(table)
    return 0


def _cubic_classify(
    args: Namespace, settings: SearchSettings, console: Console
) -> int:
    bounds = schwartz_range(args.d, args.g)
    analyses = [
        analyse_cubic_class(s, settings) for s in classify_cubic_classes(args.d, args.g)
    ]
    singular = None
    if args.d >= 3 and args.g >= 3:
        singular = singular_cubic_report(args.d, args.g)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA_VERSION,
                "a_range": None if bounds is None else list(bounds),
                "solutions": [_dump(a) for a in analyses],
                "singular_cubics": None if singular is None else _dump(singular),
            }
        )
        return 0
    console.print(f"Schwartz range: {bounds}")
    table = Table(title=f"Classes of curves of degree {args.d} and genus {args.g}")
    columns = ["Class", "Orbit", "Line", "Residual", "Very ample", "Witness", "Dim"]
    for column in columns:
        table.add_column(column)
    for a in analyses:
        s = a.solution
        table.add_row(
            str(s.cls),
            str(s.orbit_size),
            "" if s.line is None else s.line.as_divisor(),
            str(a.residual),
            _styled(a.very_ample),
            "" if a.witness is None else a.witness.as_divisor(),
            "" if a.family_dim is None else str(a.family_dim),
        )
    console.print(table)
    if singular is not None:
        console.print(
            f"Singular cubics: cone {singular.cone}, ruled k = {singular.ruled_k}, "
            f"triple covers {singular.triple_cover_total} vs lambda "
            f"{singular.lambda_bound}, excluded: {singular.excluded}"
        )
    return 0


def _neg_curves(args: Namespace, settings: SearchSettings, console: Console) -> int:
    curves = neg_curves(args.n, settings)
    if args.json:
        _emit_json(
            {"n": args.n, "count": len(curves), "curves": [str(c) for c in curves]}
        )
        return 0
    console.print(f"{len(curves)} (-1)-curves on S_{args.n}")
    for curve in curves:
        console.print(f"  {curve}  {curve.as_divisor()}")
    return 0


def _very_ample(args: Namespace, settings: SearchSettings, console: Console) -> int:
    x = parse_class(args.cls)
    if isinstance(x, BlowupClass):
        answer = is_very_ample(x, settings)
        criterion_only = is_criterion_only(x.n, settings)
        failing = [
            str(c)
            for c in neg_curves(x.n, settings)
            if intersect_blowup(x, c) <= 0
        ]
    else:
        answer = quadric_residual_very_ample(x)
        criterion_only = False
        failing = []
    if args.json:
        _emit_json(
            {
                "class": str(x),
                "very_ample": answer,
                "criterion_only": criterion_only,
                "non_positive_on": failing,
            }
        )
        return 0
    console.print(f"{x} very ample: {_styled(Tristate.from_bool(answer))}")
    if criterion_only:
        console.print(
            f"  [yellow]criterion only on S_{x.n}: "
            "the (-1)-curve test is not sufficient here[/yellow]"
        )
    for curve in failing:
        console.print(f"  meets {curve} non-positively")
    return 0


def _genus(args: Namespace, _: SearchSettings, console: Console) -> int:
    x = parse_class(args.cls)
    genus = pa_blowup(x) if isinstance(x, BlowupClass) else pa_quadric(x)
    if args.json:
        _emit_json({"class": str(x), "pa": genus})
    else:
        console.print(f"p_a{x} = {genus}")
    return 0


def _intersect(args: Namespace, _: SearchSettings, console: Console) -> int:
    x, y = parse_class(args.x), parse_class(args.y)
    value = intersect(x, y)
    if args.json:
        _emit_json({"x": str(x), "y": str(y), "intersection": value})
    else:
        console.print(f"{x} . {y} = {value}")
    return 0


def _recipe(args: Namespace, _: SearchSettings, console: Console) -> int:
    recipe = build_recipe(args.g, args.r)
    if args.json:
        _emit_json(_dump(recipe))
        return 0
    console.print(
        f"e = {recipe.e} = 3*{recipe.k} + {recipe.extra_points}: "
        f"{recipe.series} on a {recipe.gonality.lower()} curve"
    )
    for check in recipe.conditions:
        console.print(f"  {check.name}: {_styled(Tristate.from_bool(check.passed))}")
    for assumption in recipe.assumptions:
        console.print(f"  assuming {assumption}")
    console.print(f"valid: {_styled(Tristate.from_bool(recipe.valid))}")
    return 0


def _compounded(args: Namespace, _: SearchSettings, console: Console) -> int:
    cases = compounded_cases(args.e)
    excludes: Optional[bool] = None
    if args.g is not None and args.r is not None:
        excludes = compounded_excludes_very_ample(args.e, args.g, args.r)
    if args.json:
        _emit_json(
            {
                "e": args.e,
                "cases": [
                    {"k": k, "f": f, "description": describe_compounded(k, f)}
                    for k, f in cases
                ],
                "excludes_very_ample": excludes,
            }
        )
        return 0
    for k, f in cases:
        console.print(f"(k, f) = ({k}, {f}): {describe_compounded(k, f)}")
    if excludes is not None:
        console.print(f"every g^3_{args.e} compounded: {excludes}")
    return 0


def _liaison(args: Namespace, _: SearchSettings, console: Console) -> int:
    if args.s != args.t:
        step = LiaisonStep.link(args.d, args.g, args.s, args.t)
        if args.json:
            _emit_json({"step": _dump(step)})
        else:
            console.print(str(step))
        return 0
    account = linkage_dimension_account(
        args.d, args.g, args.s, args.t, args.dim_residual
    )
    if args.json:
        _emit_json(_dump(account))
        return 0
    console.print(str(account.step))
    table = Table(title="Dimension count")
    table.add_column("Quantity")
    table.add_column("Value", justify="right")
    for name in ACCOUNT_ROWS:
        table.add_row(name, str(getattr(account, name)))
    console.print(table)
    return 0


def _scan(args: Namespace, settings: SearchSettings, console: Console) -> int:
    report = scan(args.alpha, args.r_max, settings, show_progress=not args.json)
    if args.json:
        _emit_json(_dump(report))
    else:
        console.print(
            f"{report.triples} triples, {report.existing} exist, "
            f"{len(report.castelnuovo_violations)} Castelnuovo violations, "
            f"{len(report.disagreements)} disagreements"
        )
    return 0 if report.consistent else 1


def _libraries(args: Namespace, _: SearchSettings, console: Console) -> int:
    items = QuotedHilbertScheme.library()
    if args.json:
        _emit_json({name: _dump(item) for name, item in items.items()})
        return 0
    table = Table(title="Quoted Hilbert scheme dimensions")
    for column in ["Item", "Name", "(d,g,r)", "Dimension", "Citation"]:
        table.add_column(column)
    for name, item in items.items():
        table.add_row(
            name,
            item.print_name,
            f"({item.d},{item.g},{item.r})",
            str(item.dimension),
            item.citation,
        )
    console.print(table)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="census",
        description="Census of Hilbert schemes of linearly normal curves.",
    )
    parser.add_argument("--verbose", action="store_true", help="Log debug messages")
    parser.add_argument(
        "--preset",
        choices=[name.lower() for name in SearchPresets.names()],
        default="standard",
        help="Search bound preset",
    )
    parser.add_argument(
        "--max-base-points", type=int, help="Largest base locus of quadric models"
    )
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="Emit JSON")
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[output], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    for name, handler, help_text in [
        ("invariants", _invariants, "Closed-form invariants of a triple"),
        ("verdict", _verdict, "Existence and irreducibility of a Hilbert scheme"),
    ]:
        sub = add(name, handler, help_text)
        sub.add_argument("d", type=int)
        sub.add_argument("g", type=int)
        sub.add_argument("r", type=int)

    sub = add("table", _table, "Emit a census table")
    sub.add_argument("--family", required=True, help="r+8, r+9 or gg4")
    sub.add_argument("--md", action="store_true", help="Emit Markdown (default)")
    sub.add_argument(
        "--only", type=int, nargs="+", help="Restrict to these r (or g for gg4)"
    )

    sub = add("quadric-models", _quadric_models, "Quadric models of a residual series")
    sub.add_argument("--e", type=int, required=True)
    sub.add_argument("--g", type=int, required=True)

    sub = add("cubic-classify", _cubic_classify, "Curve classes on a cubic surface")
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--g", type=int, required=True)

    sub = add("neg-curves", _neg_curves, "(-1)-curves on S_n")
    sub.add_argument("--n", type=int, required=True)

    for name, handler, help_text in [
        ("very-ample", _very_ample, "(-1)-curve criterion for very ampleness"),
        ("genus", _genus, "Arithmetic genus of a class"),
    ]:
        sub = add(name, handler, help_text)
        sub.add_argument("--class", dest="cls", required=True)

    sub = add("intersect", _intersect, "Intersection number of two classes")
    sub.add_argument("--x", required=True)
    sub.add_argument("--y", required=True)

    sub = add("recipe", _recipe, "k-gonal construction for index of speciality 4")
    sub.add_argument("--g", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)

    sub = add("compounded", _compounded, "Compounded series of degree e")
    sub.add_argument("--e", type=int, required=True)
    sub.add_argument("--g", type=int)
    sub.add_argument("--r", type=int)

    sub = add("liaison", _liaison, "Linkage by two surfaces")
    for flag in ["--d", "--g", "--s", "--t"]:
        sub.add_argument(flag, type=int, required=True)
    sub.add_argument(
        "--dim-residual", type=int, help="Dimension of the residual Hilbert scheme"
    )

    sub = add("scan", _scan, "Check verdicts over a range of triples")
    sub.add_argument("--alpha", type=int, required=True)
    sub.add_argument("--r-max", type=int)

    add("libraries", _libraries, "List quoted Hilbert scheme dimensions")
    return parser


def _report_error(error: CensusError, as_json: bool) -> None:
    if as_json:
        sys.stderr.write(dump_json(error.to_record()))
    else:
        Console(stderr=True).print(f"[red]{error}[/red]")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="{asctime} {levelname}: {message}",
        style="{",
        datefmt="%H:%M:%S",
    )
    settings = SearchPresets.get(args.preset).with_overrides(
        max_base_points=args.max_base_points
    )
    console = Console()
    try:
        return args.handler(args, settings, console)
    except CensusError as error:
        logger.debug(f"{args.command} failed", exc_info=True)
        _report_error(error, args.json)
        return 2
