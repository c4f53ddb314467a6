"""Command-line front end: ``positroid-lab <command> ...``.

JSON goes to stdout and diagnostics to stderr. Exit codes are 0 on
success, 1 when a verification fails and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .convert import TARGETS, convert
from .core import DyckPath, count_paths, enumerate_paths, positroid_of_path, profile_of_path
from .errors import PositroidLabError
from .lediagram import LeDiagram
from .necklace import GrassmannNecklace, necklace_from_bases
from .permutation import DecoratedPermutation
from .plabic import PlabicGraph, build_plabic, graph_type, perfect_orientations, positroid_from_plabic, trip_permutation
from .polytope import CORRECTED, LITERAL, HPolytope, hrep_general, hrep_refined, polytopes_equal, vertices_from_bases, zero_one_points
from .verify import CHECKS, Caps, verify_sweep, verify_type

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_type(text: str) -> tuple[int, int]:
    try:
        m, d = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected M,D with positive integers, got {text!r}") from None
    if m < 1 or d < 1:
        raise argparse.ArgumentTypeError("M and D must be positive")
    return m, d


def _emit_json(data) -> None:
    sys.stdout.write(json.dumps(data, indent=2) + "\n")


def _emit_svg(fig) -> None:
    from .plotting import figure_to_svg

    sys.stdout.write(figure_to_svg(fig))


def _read_path(args) -> DyckPath:
    m, d = args.type if getattr(args, "type", None) else (None, None)
    return DyckPath.parse(args.path, m, d)


def _text(obj) -> str:
    if isinstance(obj, DecoratedPermutation):
        return obj.cycle_string() + "\n"
    if isinstance(obj, GrassmannNecklace):
        return "".join(f"I_{i} = {' '.join(map(str, e))}\n" for i, e in enumerate(obj.entries, 1))
    if isinstance(obj, HPolytope):
        return obj.to_text()
    if isinstance(obj, LeDiagram):
        return "\n".join(obj.fill) + "\n"
    if hasattr(obj, "rows"):
        return "\n".join(" ".join(f"{v:>2}" for v in row) for row in obj.rows) + "\n"
    return json.dumps(obj.to_json(), indent=2) + "\n"


# ---------------------------------------------------------------- commands


def cmd_enumerate(args) -> int:
    m, d = args.type
    paths = [str(p) for p in enumerate_paths(m, d)]
    if args.format == "text":
        sys.stdout.write("".join(p + "\n" for p in paths))
    else:
        _emit_json({"m": m, "d": d, "count": len(paths), "paths": paths})
    return EXIT_OK


def cmd_count(args) -> int:
    m, d = args.type
    counts = count_paths(m, d, args.method)
    value = next(iter(counts.values()))
    if args.format == "text":
        sys.stdout.write(f"{value}\n")
    else:
        _emit_json({"m": m, "d": d, "count": value, "methods": counts})
    return EXIT_OK


def cmd_convert(args) -> int:
    path = _read_path(args)
    variant = LITERAL if args.literal else CORRECTED
    result = convert(path, args.to, refined_variant=variant)
    if args.format == "svg":
        from .plotting import draw_le, draw_path, draw_plabic

        if args.to == "le":
            _emit_svg(draw_le(result, pipes=args.pipes))
        elif args.to == "plabic":
            _emit_svg(draw_plabic(result))
        elif args.to in ("matrix", "extended"):
            _emit_svg(draw_path(path))
        else:
            raise UsageError(f"no SVG drawing for target {args.to!r}")
    elif args.format == "text":
        sys.stdout.write(_text(result))
    else:
        _emit_json(result.to_json())
    return EXIT_OK


def _print_warnings(report) -> None:
    first = {}
    for note in report.notes:
        first.setdefault(note.code, note)
    for code, count in report.note_summary().items():
        note = first[code]
        sys.stderr.write(f"warning[{code}]: {count} path(s); e.g. {note.path}: {note.message}\n")


def cmd_verify(args) -> int:
    skip = [s for s in (args.skip or "").split(",") if s]
    caps = Caps.from_env()
    if args.type:
        report = verify_type(*args.type, skip=skip, caps=caps)
    else:
        report = verify_sweep(args.max_n, skip=skip, caps=caps)
    if args.format == "text":
        verdict = "pass" if report.passed else "FAIL"
        sys.stdout.write(f"{verdict}, {len(report.paths)} paths checked\n")
        for name, counts in report.tally().items():
            sys.stdout.write(f"  {name:<15} pass {counts['pass']:>4}  fail {counts['fail']:>4}  skip {counts['skip']:>4}\n")
    else:
        data = report.to_json()
        data.pop("warnings")
        data["warnings"] = report.note_summary()
        _emit_json(data)
    _print_warnings(report)
    if args.report_dir:
        from .plotting import write_report

        for written in write_report(report, args.report_dir):
            sys.stderr.write(f"wrote {written}\n")
    bad = report.counterexample()
    if bad is not None:
        sys.stderr.write(f"counterexample: {bad.path}\n")
        for check in bad.failures():
            sys.stderr.write(f"  {check.name}: {check.detail}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_polytope(args) -> int:
    path = _read_path(args)
    if args.certify:
        positroid = positroid_of_path(path)
        general = hrep_general(necklace_from_bases(positroid))
        refined = hrep_refined(profile_of_path(path), LITERAL if args.literal else CORRECTED)
        vertices = vertices_from_bases(positroid)
        result = {
            "path": str(path),
            "bases": len(vertices),
            "general_01_matches": zero_one_points(general, path.d) == vertices,
            "refined_01_matches": zero_one_points(refined, path.d) == vertices,
            "lp_equal": polytopes_equal(general, refined),
        }
        _emit_json(result)
        return EXIT_OK if all(v for k, v in result.items() if k.endswith(("matches", "equal"))) else EXIT_FAIL
    target = "polytope-general" if args.system == "general" else "polytope-refined"
    system = convert(path, target, refined_variant=LITERAL if args.literal else CORRECTED)
    if args.prune:
        system = system.pruned()
    if args.format == "text":
        sys.stdout.write(system.to_text())
    elif args.format == "svg":
        raise UsageError("polytope systems have no SVG drawing")
    else:
        _emit_json(system.to_json())
    return EXIT_OK


def cmd_plabic(args) -> int:
    if args.graph:
        try:
            graph = PlabicGraph.from_json(json.loads(Path(args.graph).read_text()))
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read graph {args.graph}: {exc}") from None
    elif args.path:
        graph = build_plabic(_read_path(args))
    else:
        raise UsageError("give a path or --graph FILE")
    orientation = None
    if args.orientation is not None:
        orientations = perfect_orientations(graph)
        if not 0 <= args.orientation < len(orientations):
            raise UsageError(f"orientation index must lie in [0, {len(orientations) - 1}]")
        orientation = orientations[args.orientation]
    if args.format == "svg":
        from .plotting import draw_plabic

        _emit_svg(draw_plabic(graph, orientation))
        return EXIT_OK
    d, n = graph_type(graph)
    trip = trip_permutation(graph)
    if args.format == "text":
        sys.stdout.write(f"type ({d}, {n})\ntrip {trip.cycle_string()}\n")
        if orientation is not None:
            sys.stdout.write(f"sources {' '.join(map(str, orientation.sources(graph)))}\n")
        return EXIT_OK
    data = {"graph": graph.to_json(), "type": [d, n], "trip": trip.to_json()}
    if args.bases:
        data["bases"] = positroid_from_plabic(graph).to_json()["bases"]
    if orientation is not None:
        data["sources"] = list(orientation.sources(graph))
    _emit_json(data)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="positroid-lab", description="Rational Dyck positroids in exact arithmetic."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("json", "text")):
        p.add_argument("--format", choices=choices, default="json")

    p = sub.add_parser("enumerate", help="list the rational Dyck paths of a type")
    p.add_argument("--type", type=_parse_type, required=True, metavar="M,D")
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count rational Dyck paths")
    p.add_argument("--type", type=_parse_type, required=True, metavar="M,D")
    p.add_argument("--method", choices=("formula", "bizley", "enumerate", "all"), default="all")
    fmt(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("convert", help="convert a path to another representation")
    p.add_argument("path")
    p.add_argument("--to", choices=TARGETS, required=True)
    p.add_argument("--type", type=_parse_type, metavar="M,D", help="declared type to check")
    p.add_argument("--pipes", action="store_true", help="draw the pipe dream (le, svg)")
    p.add_argument("--literal", action="store_true", help="literal m(i) refined system")
    fmt(p, ("json", "text", "svg"))
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="cross-check every representation")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--type", type=_parse_type, metavar="M,D")
    group.add_argument("--max-n", type=int, metavar="N", help="all types with d+m <= N")
    p.add_argument("--skip", metavar="CHECKS", help="comma-separated: " + ",".join(CHECKS))
    p.add_argument("--report-dir", metavar="DIR", help="write verify.tsv and verify.svg here")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("polytope", help="H-systems of the positroid polytope")
    p.add_argument("path")
    p.add_argument("--type", type=_parse_type, metavar="M,D")
    p.add_argument("--system", choices=("general", "refined"), default="refined")
    p.add_argument("--literal", action="store_true", help="literal m(i) refined system")
    p.add_argument("--prune", action="store_true", help="drop duplicate and vacuous rows")
    p.add_argument("--certify", action="store_true", help="compare both systems exactly")
    fmt(p, ("json", "text", "svg"))
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("plabic", help="plabic graph of a path, or of a JSON graph file")
    p.add_argument("path", nargs="?")
    p.add_argument("--type", type=_parse_type, metavar="M,D")
    p.add_argument("--graph", metavar="FILE")
    p.add_argument("--orientation", type=int, metavar="K", help="K-th perfect orientation")
    p.add_argument("--bases", action="store_true", help="include perfect-orientation source sets")
    fmt(p, ("json", "text", "svg"))
    p.set_defaults(func=cmd_plabic)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PositroidLabError) as exc:
        if isinstance(exc, AssertionError):
            sys.stderr.write(f"internal inconsistency: {exc}\n")
            return EXIT_FAIL
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
