"""Command-line interface.

Subcommands: construct, verify, solve, table, conjecture, motif, augment,
render.  Primary output is deterministic JSON on stdout (stable key
order, no timing data); timings go to stderr.

Exit codes: 0 success (for ``verify``: the set is an efficient dominating
set), 1 a valid 2-packing that leaves voids (or a construction whose
audit missed its contract), 2 usage or parse errors, 3 the set is not a
2-packing.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from . import constructions, periodic, solver
from .lattice import Lattice, LatticeKind, rect
from .packing import (
    DominationReport,
    audit,
    report_to_json,
    set_from_json,
    transpose_set,
    vertex_to_json,
)
from .render import RenderStyle, ascii_board, svg_board

EXIT_OK = 0
EXIT_VOIDS = 1
EXIT_USAGE = 2
EXIT_CONFLICTS = 3


def _dumps(obj, pad: str = "") -> str:
    """Deterministic JSON: sorted keys, short collections kept on one line."""
    one_line = json.dumps(obj, sort_keys=True, separators=(", ", ": "))
    if len(one_line) + len(pad) <= 76:
        return one_line
    inner = pad + "  "
    if isinstance(obj, dict):
        items = [f"{inner}{json.dumps(k)}: {_dumps(obj[k], inner)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, list):
        items = [f"{inner}{_dumps(v, inner)}" for v in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return one_line


def _emit(obj) -> None:
    print(_dumps(obj))


def _style(args) -> RenderStyle:
    glyphs = getattr(args, "glyphs", None)
    if not glyphs:
        return RenderStyle()
    if len(glyphs) != 3:
        raise ValueError("--glyphs needs exactly three characters: dominator, dominated, void")
    return RenderStyle(dominator=glyphs[0], dominated=glyphs[1], void=glyphs[2])


def _render_text(fmt: str, lattice: Lattice, members, report: DominationReport, style: RenderStyle) -> str:
    if fmt == "svg":
        return svg_board(lattice, tuple(members), report)
    return ascii_board(lattice, tuple(members), report, style)


def _load_set_file(path: str) -> tuple[Lattice, tuple]:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return set_from_json(json.loads(text))


# -- construct ----------------------------------------------------------------

_CONSTRUCTIONS = ("eds-p2", "p2-even", "p3", "square", "knight")


def _run_construction(name: str, n: int) -> tuple[Lattice, tuple]:
    if name == "eds-p2":
        return rect(2, n), constructions.eds_pn_p2(n)
    if name == "p2-even":
        return rect(2, n), constructions.fset_pn_p2_even(n)
    if name == "p3":
        return rect(3, n), constructions.fset_pn_p3(n)
    if name == "square":
        if n == 4:
            return rect(4, 4), constructions.eds_p4_p4()
        return rect(n, n), constructions.fset_square_small(n)
    if name == "knight":
        pattern = constructions.knight_construction(n)
        return pattern.lattice(), pattern.full_set
    raise ValueError(f"unknown construction {name!r}")


def _construction_contract(name: str, n: int, report: DominationReport) -> bool:
    if name == "eds-p2":
        return report.is_eds and report.influence == 2 * n
    if name == "p2-even":
        return report.is_two_packing and report.influence == 2 * n - 1 and len(report.voids) == 1
    if name == "p3":
        expected = 7 if n == 3 else 3 * n - n // 3
        expected_voids = 2 if n == 3 else n // 3
        return (
            report.is_two_packing
            and report.influence == expected
            and len(report.voids) == expected_voids
        )
    if name == "square":
        if n == 4:
            return report.is_eds
        return report.is_two_packing and report.influence == {5: 23, 6: 33}[n]
    if name == "knight":
        boundary = all(i in (1, n) or j in (1, n) for i, j in report.voids)
        return (
            report.is_two_packing
            and boundary
            and len(report.voids) == constructions.predicted_voids(n)
        )
    return False


def cmd_construct(args) -> int:
    lattice, members = _run_construction(args.name, args.n)
    report = audit(lattice, members)
    payload = {
        "construction": args.name,
        "n": args.n,
        "lattice": lattice.descriptor(),
        "set": [vertex_to_json(v) for v in members],
        "report": report_to_json(report),
    }
    _emit(payload)
    if args.render:
        print(_render_text(args.render, lattice, members, report, _style(args)))
    return EXIT_OK if _construction_contract(args.name, args.n, report) else EXIT_VOIDS


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    lattice, members = _load_set_file(args.set_file)
    if args.lattice:
        lattice = Lattice.from_descriptor(args.lattice)
    report = audit(lattice, members)
    _emit(
        {
            "lattice": lattice.descriptor(),
            "set": [vertex_to_json(v) for v in members],
            "report": report_to_json(report),
        }
    )
    if not report.is_two_packing:
        return EXIT_CONFLICTS
    return EXIT_OK if report.is_eds else EXIT_VOIDS


# -- solve --------------------------------------------------------------------


def _solve_lattice(lattice: Lattice, method: str, brute_limit: int, dp_width: int) -> solver.SolveResult:
    rectangular = lattice.kind is LatticeKind.RECTANGULAR and not lattice.torus
    if method == "auto":
        method = "dp" if rectangular and min(lattice.rows, lattice.cols) <= dp_width else "brute"
    if method == "dp":
        if not rectangular:
            raise ValueError("the column DP only handles bounded rectangular lattices")
        if lattice.rows <= dp_width:
            return solver.dp_F_rect(lattice.rows, lattice.cols, width_limit=dp_width)
        result = solver.dp_F_rect(lattice.cols, lattice.rows, width_limit=dp_width)
        return solver.SolveResult(
            f_value=result.f_value,
            witness=transpose_set(result.witness),
            explored=result.explored,
            elapsed=result.elapsed,
        )
    return solver.brute_force_F(lattice, limit=brute_limit)


def _warn_raised_limits(args) -> None:
    brute_limit = getattr(args, "brute_limit", solver.BRUTE_FORCE_LIMIT)
    dp_width = getattr(args, "dp_width", solver.DP_WIDTH_LIMIT)
    if brute_limit > solver.BRUTE_FORCE_LIMIT:
        print(
            f"warning: brute-force limit raised to {brute_limit} vertices; "
            "runtime grows exponentially",
            file=sys.stderr,
        )
    if dp_width > solver.DP_WIDTH_LIMIT:
        print(
            f"warning: DP width raised to {dp_width} rows; "
            "the profile state space grows exponentially",
            file=sys.stderr,
        )


def cmd_solve(args) -> int:
    _warn_raised_limits(args)
    lattice = Lattice.from_descriptor(args.lattice)
    result = _solve_lattice(lattice, args.method, args.brute_limit, args.dp_width)
    _emit(
        {
            "lattice": lattice.descriptor(),
            "F": result.f_value,
            "witness": [vertex_to_json(v) for v in result.witness],
            "explored": result.explored,
        }
    )
    print(f"elapsed_ms={int(result.elapsed * 1000)}", file=sys.stderr)
    return EXIT_OK


# -- table / conjecture ---------------------------------------------------------


def cmd_table(args) -> int:
    _warn_raised_limits(args)
    rows = solver.table_voids(args.lo, args.hi, width_limit=args.dp_width)
    _emit(
        {
            "rows": [
                {
                    "n": r.n,
                    "predicted_voids": r.predicted,
                    "dp_voids": r.dp_voids,
                    "match": r.matches,
                    "verified": r.dp_voids is not None,
                }
                for r in rows
            ]
        }
    )
    return EXIT_OK


def cmd_conjecture(args) -> int:
    _warn_raised_limits(args)
    rows = solver.check_conjecture(args.lo, args.hi, width_limit=args.dp_width)
    _emit(
        {
            "rows": [
                {
                    "n": r.n,
                    "conjectured": r.conjectured,
                    "dp_value": r.dp_value,
                    "match": r.matches,
                    "verified": r.dp_value is not None,
                }
                for r in rows
            ]
        }
    )
    return EXIT_OK


# -- motif ----------------------------------------------------------------------


def _parse_window(text: str) -> tuple[int, int]:
    rows_s, _, cols_s = text.partition("x")
    try:
        return int(rows_s), int(cols_s)
    except ValueError:
        raise ValueError(f"window must look like RxC, got {text!r}") from None


def cmd_motif(args) -> int:
    if args.lattice == "rect":
        motif = periodic.rect_code_motif(args.residue)
    elif args.lattice == "tri":
        motif = periodic.tri_code_motif(args.residue)
    else:
        if args.residue:
            raise ValueError("the hexagonal motif takes no residue")
        motif = periodic.hex_code_motif()
    report = periodic.verify_perfect(motif)
    payload = {
        "kind": motif.kind.value,
        "periods": list(motif.periods),
        "cells": [vertex_to_json(v) for v in motif.cells],
        "density": motif.density,
        "perfect": report.is_eds,
        "report": report_to_json(report),
    }
    window_board = None
    if args.window:
        rows, cols = _parse_window(args.window)
        expansion = periodic.expand_motif(motif, rows, cols)
        window = periodic.window_lattice(motif, rows, cols)
        window_report = audit(window, expansion)
        payload["window"] = window.descriptor()
        payload["expansion"] = [vertex_to_json(v) for v in expansion]
        payload["window_report"] = report_to_json(window_report)
        window_board = (window, expansion, window_report)
    if args.format == "json":
        _emit(payload)
    else:
        if window_board is None:
            torus = motif.torus_lattice()
            print(ascii_board(torus, motif.cells, report))
        else:
            print(ascii_board(*window_board))
    return EXIT_OK if report.is_eds else EXIT_VOIDS


# -- augment ---------------------------------------------------------------------


def cmd_augment(args) -> int:
    lattice, members = _load_set_file(args.set_file)
    augmented, eds = constructions.near_grid_augment(lattice, members)
    report = audit(augmented, eds)
    _emit(
        {
            "base_lattice": lattice.descriptor(),
            "set": [vertex_to_json(v) for v in members],
            "pendants": [p.to_json() for p in augmented.pendants],
            "vertex_count": augmented.vertex_count,
            "eds": [vertex_to_json(v) for v in eds],
            "report": report_to_json(report),
        }
    )
    return EXIT_OK if report.is_eds else EXIT_VOIDS


# -- render ----------------------------------------------------------------------


def cmd_render(args) -> int:
    lattice, members = _load_set_file(args.set_file)
    report = audit(lattice, members)
    text = _render_text(args.format, lattice, members, report, _style(args))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="effdom",
        description="Efficient domination (perfect 1-codes) on lattice graphs: "
        "constructions, audits, exact solvers and periodic motifs.",
        epilog="Exit codes: 0 ok / efficient dominating set; 1 valid 2-packing "
        "with voids; 2 usage or parse error; 3 not a 2-packing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named set construction and audit it")
    p.add_argument("name", choices=_CONSTRUCTIONS)
    p.add_argument("--n", type=int, required=True, help="strip length / square side")
    p.add_argument("--render", choices=("ascii", "svg"), help="append a board rendering")
    p.add_argument("--glyphs", help="three characters: dominator, dominated, void")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="audit a vertex-set JSON file")
    p.add_argument("set_file", help="path to a set file, or - for stdin")
    p.add_argument("--lattice", help="override the lattice descriptor from the file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="compute F exactly for a lattice descriptor")
    p.add_argument("lattice", help="e.g. rect:5x5, rect-torus:6x6, tri:4, hex:4x6")
    p.add_argument("--method", choices=("auto", "dp", "brute"), default="auto")
    p.add_argument("--brute-limit", type=int, default=solver.BRUTE_FORCE_LIMIT)
    p.add_argument("--dp-width", type=int, default=solver.DP_WIDTH_LIMIT)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="voids n^2 - F(n x n): DP value vs prediction")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--dp-width", type=int, default=solver.DP_WIDTH_LIMIT)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("conjecture", help="DP value vs conjectured F(n x n)")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--dp-width", type=int, default=solver.DP_WIDTH_LIMIT)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("motif", help="verify a periodic perfect-code motif")
    p.add_argument("--lattice", choices=("rect", "tri", "hex"), required=True)
    p.add_argument("--residue", type=int, default=0)
    p.add_argument("--window", help="expand into a bounded RxC window")
    p.add_argument("--format", choices=("json", "ascii"), default="json")
    p.set_defaults(func=cmd_motif)

    p = sub.add_parser("augment", help="pendant-augment a 2-packing into a near-grid EDS")
    p.add_argument("set_file", help="path to a set file, or - for stdin")
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("render", help="draw a set file as ASCII or SVG")
    p.add_argument("set_file", help="path to a set file, or - for stdin")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.add_argument("--glyphs", help="three characters: dominator, dominated, void")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
