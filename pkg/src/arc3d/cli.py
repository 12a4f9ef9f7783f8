"""Command-line interface.

Subcommands read a JSON document from --input (default stdin) and write
to --output (default stdout), so they compose as pipelines:

    arc3d generate star 8 | arc3d layout --method free | arc3d check

Exit codes: 0 success, 1 usage error, 2 parse/validation error,
3 a certified bound was violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .coloring import edge_coloring_vizing, localized_edge_coloring
from .errors import Arc3dError, BoundViolation, MissingRotation
from .generators import generate
from .graphs import rotation_from_drawing
from .layouts import (
    angular_resolution_3d,
    default_window_length,
    free_layout,
    guarantee_check,
    slanted_layout,
    sphere_layout,
    stationary_layout,
)
from .sceneio import emit_graph, emit_scene, export_obj, parse_graph, parse_scene, report_to_dict

USAGE_EXIT = 1
VALIDATION_EXIT = 2
BOUND_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("-i", "--input", default=None, help="input file (default: stdin)")
    p.add_argument("-o", "--output", default=None, help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="arc3d", description=__doc__,
                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a graph file for a named family")
    p.add_argument("family", choices=["star", "fan", "grid", "random"])
    p.add_argument("params", nargs="*", help="family parameters, e.g. star 8")
    p.add_argument("--seed", type=int, default=0)
    _add_io(p)

    p = sub.add_parser("color-edges", help="edge-color a graph file")
    p.add_argument("--localized", action="store_true",
                   help="window-localized coloring instead of the classical one")
    p.add_argument("--L", type=int, default=None, help="window length (even)")
    _add_io(p)

    p = sub.add_parser("layout", help="compute a 3D scene from a graph file")
    p.add_argument("--method", required=True,
                   choices=["sphere", "stationary", "slanted", "free"])
    p.add_argument("--L", type=int, default=None, help="window length for --method free")
    p.add_argument("--slanted-interpretation", choices=["inplane", "elevation"],
                   default="inplane")
    p.add_argument("--epsilon-fraction", type=float, default=0.125,
                   help="sphere cluster radius as a fraction of the cluster spacing")
    _add_io(p)

    p = sub.add_parser("measure", help="angular resolution of a scene file")
    _add_io(p)

    p = sub.add_parser("check", help="verify every certified pair bound of a scene")
    _add_io(p)

    p = sub.add_parser("export", help="export a scene file")
    p.add_argument("--obj", action="store_true", required=True,
                   help="OBJ polylines (the only export format)")
    p.add_argument("--samples", type=int, default=32)
    _add_io(p)

    return top


def _cmd_generate(args) -> int:
    g, dr, meta = generate(args.family, *args.params, seed=args.seed)
    meta = dict(meta)
    if args.family == "random":
        meta["seed"] = args.seed
    _write(args.output, emit_graph(g, dr, meta=meta))
    return 0


def _cmd_color_edges(args) -> int:
    doc = parse_graph(_read(args.input))
    if args.localized:
        rot = doc.rotation
        if rot is None:
            if doc.drawing is None:
                raise MissingRotation(
                    "localized coloring needs a rotation or vertex positions"
                )
            rot = rotation_from_drawing(doc.graph, doc.drawing)
        L = args.L if args.L is not None else default_window_length(doc.graph.max_degree)
        coloring = localized_edge_coloring(doc.graph, rot, L)
        method = "localized"
    else:
        coloring = edge_coloring_vizing(doc.graph)
        L = None
        method = "classical"
    out = {
        "format": "edge-coloring",
        "method": method,
        "L": L,
        "palette_size": coloring.palette_size,
        "colors": list(coloring.colors),
    }
    _write(args.output, json.dumps(out, indent=2) + "\n")
    return 0


def _cmd_layout(args) -> int:
    doc = parse_graph(_read(args.input))
    g = doc.graph
    if args.method == "sphere":
        diagram = sphere_layout(g, epsilon_fraction=args.epsilon_fraction)
    else:
        if doc.drawing is None:
            raise Arc3dError(
                f"--method {args.method} needs vertex positions in the graph file"
            )
        if args.method == "stationary":
            diagram = stationary_layout(g, doc.drawing)
        elif args.method == "slanted":
            diagram = slanted_layout(g, doc.drawing,
                                     interpretation=args.slanted_interpretation)
        else:
            diagram = free_layout(g, doc.drawing, L=args.L)
    try:
        report = guarantee_check(diagram, raise_on_violation=False)
    except Arc3dError:
        report = None  # no incident pairs: nothing to measure
    _write(args.output, emit_scene(diagram, report))
    return 0


def _cmd_measure(args) -> int:
    diagram, _ = parse_scene(_read(args.input))
    report = angular_resolution_3d(diagram)
    _write(args.output, json.dumps(report_to_dict(report), indent=2) + "\n")
    return 0


def _cmd_check(args) -> int:
    diagram, _ = parse_scene(_read(args.input))
    try:
        report = guarantee_check(diagram, raise_on_violation=False)
    except Arc3dError as exc:
        _write(args.output, f"nothing to check: {exc}\n")
        return 0
    failures = [c for c in report.bound_checks if not c.passed]
    if failures:
        for c in failures:
            print(
                f"FAIL at {c.vertex!r} edges ({c.edge_i}, {c.edge_j}): "
                f"measured {c.measured:.12g} < bound {c.bound:.12g}",
                file=sys.stderr,
            )
        return BOUND_EXIT
    _write(
        args.output,
        f"ok: {len(report.bound_checks)} pair bounds hold, "
        f"min angle {report.min_angle:.12g}\n",
    )
    return 0


def _cmd_export(args) -> int:
    diagram, _ = parse_scene(_read(args.input))
    _write(args.output, export_obj(diagram, samples=args.samples))
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "color-edges": _cmd_color_edges,
    "layout": _cmd_layout,
    "measure": _cmd_measure,
    "check": _cmd_check,
    "export": _cmd_export,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return _COMMANDS[args.command](args)
    except BoundViolation as exc:
        print(f"bound violation: {exc}", file=sys.stderr)
        return BOUND_EXIT
    except Arc3dError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_EXIT


if __name__ == "__main__":
    sys.exit(main())
