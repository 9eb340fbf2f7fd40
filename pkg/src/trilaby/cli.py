"""Command-line surface: validate, counts, matrix, classify, dims, arc, render.

Exit codes: 0 on success, 1 on validation failure, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import sys as _sys
from pathlib import Path

from .arcs import arc_table, chord_lower_bound, refine_arc
from .classify import (
    arc_dimensions,
    classify_blocked,
    fractal_dimension,
    global_radius,
)
from .core import CapExceededError, Color, PatternError, counts, parse_system, substitute
from .graph import build_graph, to_dot
from .pathmatrix import PAIRS, path_lengths, path_matrices
from .render import RenderStyle, render_svg
from .validate import ValidationError, validate_system

_PAIR_FLAG = {"12": (1, 2), "13": (1, 3), "23": (2, 3)}


def _load(path: str):
    return parse_system(Path(path).read_text(encoding="utf-8"))


def _grid(rows) -> str:
    cells = [[str(x) for x in row] for row in rows]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  " + " ".join(c.rjust(width) for c in row) for row in cells)


def _cmd_validate(args) -> int:
    report = validate_system(_load(args.file))
    print(report.to_text())
    print()
    print(report.to_kv())
    return 0 if report.overall else 1


def _cmd_counts(args) -> int:
    w, wd, y, yd = counts(_load(args.file), args.n)
    print(f"level {args.n}")
    print(f"white_up={w}")
    print(f"white_down={wd}")
    print(f"yellow_up={y}")
    print(f"yellow_down={yd}")
    return 0


def _cmd_matrix(args) -> int:
    pm = path_matrices(_load(args.file))
    print("global path matrix M:")
    print(_grid(pm.global_matrix))
    print("white block Mw:")
    print(_grid(pm.mw))
    print("yellow block My:")
    print(_grid(pm.my))
    sums = [sum(row) for row in pm.global_matrix]
    print("row sums (path lengths at level 1):")
    print("  " + " ".join(str(s) for s in sums))
    if args.n is not None:
        lengths = path_lengths(_load(args.file), args.n)
        print(f"path lengths at level {args.n}:")
        print("  " + " ".join(str(v) for v in lengths))
    return 0


def _cmd_classify(args) -> int:
    report = classify_blocked(_load(args.file))
    print(report.describe())
    return 0


def _cmd_dims(args) -> int:
    sys_ = _load(args.file)
    fd = fractal_dimension(sys_)
    print(f"lambda = {fd.lam} = {fd.lam.to_float():.12f}")
    print(f"fractal dimension = {fd.value:.12f}")
    rho = global_radius(sys_)
    print(f"global path matrix spectral radius = {rho.describe()}")
    print("arc dimensions:")
    for (color, pair), value in arc_dimensions(sys_).items():
        print(f"  {color.value} {{{pair[0]},{pair[1]}}}: {value:.12f}")
    return 0


def _cmd_arc(args) -> int:
    sys_ = _load(args.file)
    color = Color(args.color)
    arc = refine_arc(sys_, color, _PAIR_FLAG[args.pair], args.n, cap=args.cap)
    print(f"{color.value} arc {{{arc.pair[0]},{arc.pair[1]}}} at level {arc.n}: "
          f"{len(arc)} triangles, {len(arc.polyline)} polyline points")
    print(arc_table(arc))
    if args.bound:
        print(f"chord length lower bound = {chord_lower_bound(arc):.12f}")
    if args.svg:
        ls = substitute(sys_, color, args.n, cap=args.cap)
        Path(args.svg).write_text(render_svg(ls, RenderStyle(), [arc]), encoding="utf-8")
        print(f"wrote {args.svg}")
    return 0


def _cmd_render(args) -> int:
    sys_ = _load(args.file)
    color = Color(args.color)
    ls = substitute(sys_, color, args.n, cap=args.cap)
    Path(args.output).write_text(render_svg(ls, RenderStyle()), encoding="utf-8")
    print(f"wrote {args.output} ({len(ls)} triangles)")
    if args.dot:
        Path(args.dot).write_text(to_dot(build_graph(ls)), encoding="utf-8")
        print(f"wrote {args.dot}")
    return 0


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="trilaby", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the three labyrinth properties")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("counts", help="triangle counts at level n")
    p.add_argument("file")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_counts)

    p = sub.add_parser("matrix", help="print the global path matrix")
    p.add_argument("file")
    p.add_argument("-n", type=int, default=None, help="also print path lengths at level n")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("classify", help="blockedness classification")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("dims", help="fractal and arc dimensions")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("arc", help="exit-to-exit arc approximation")
    p.add_argument("file")
    p.add_argument("--color", choices=["white", "yellow"], required=True)
    p.add_argument("--pair", choices=["12", "13", "23"], required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--svg", default=None, help="write level sets plus arc overlay")
    p.add_argument("--bound", action="store_true", help="print the chord lower bound")
    p.add_argument("--cap", type=int, default=8, help="enumeration cap override")
    p.set_defaults(func=_cmd_arc)

    p = sub.add_parser("render", help="render level sets to SVG")
    p.add_argument("file")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--color", choices=["white", "yellow"], required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--dot", default=None, help="also export the neighbour graph as DOT")
    p.add_argument("--cap", type=int, default=8, help="enumeration cap override")
    p.set_defaults(func=_cmd_render)
    return top


def run_cli(argv: list[str]) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (PatternError, CapExceededError, OSError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run_cli(_sys.argv[1:]))
