"""Fractal exits, exit points of triangles, arc approximations, chord bounds.

An exit-to-exit arc is approximated at level n by the typed triangle path
obtained from the level-1 path through n-1 rounds of type-directed
replacement.  The polyline through the triangles' exit points lies on the
arc itself, so its length is a rigorous lower bound for the arc length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .core import (
    BaryPoint,
    CapExceededError,
    Color,
    Orient,
    PatternSystem,
    TriIndex,
    compose_child,
    dist2,
    level_system,
    project_point,
    substitute,
)
from .graph import build_graph, tree_path
from .pathmatrix import Pair, TypedPath, as_pair, typed_paths
from .validate import exit_triangles, require_valid


@dataclass(frozen=True)
class FractalExits:
    """The three exits of one fractal, each with a zero i-th coordinate."""

    color: Color
    points: tuple[BaryPoint, BaryPoint, BaryPoint]

    def point(self, side: int) -> BaryPoint:
        return self.points[side - 1]


def fractal_exits(sys: PatternSystem, color: Color) -> FractalExits:
    """Exit points of the fractal: fixed points of the exit projections.

    The level-1 exit triangle of type i is upright with triple k, and the
    fixed point of its projection is k/(m-1) componentwise.
    """
    require_valid(sys)
    return _fractal_exits_unchecked(sys, color)


def _fractal_exits_unchecked(sys: PatternSystem, color: Color) -> FractalExits:
    m = sys.m
    tris = exit_triangles(sys, color)
    pts = []
    for side in (1, 2, 3):
        t = tris[side]
        p = BaryPoint.of(t.k1, t.k2, t.k3, m - 1)
        if project_point(t, m, p) != p:
            raise AssertionError(f"exit of side {side} is not a fixed point")
        pts.append(p)
    return FractalExits(color, (pts[0], pts[1], pts[2]))


def exit_point(
    t: TriIndex,
    side: int,
    scale: int,
    white: FractalExits,
    yellow: FractalExits,
    context: Color,
) -> BaryPoint:
    """The exit of type `side` of a triangle inside the `context` fractal.

    Upright triangles project their own fractal's exit, upside-down ones
    the opposite fractal's; j-neighbours then share the point exactly.
    """
    own, opp = (white, yellow) if context is Color.WHITE else (yellow, white)
    e = (own if t.orient is Orient.UP else opp).point(side)
    return project_point(t, scale, e)


class ArcStep(NamedTuple):
    """One path triangle with the sides through which the arc enters/leaves."""

    tri: TriIndex
    entry: int
    exit: int


@dataclass(frozen=True)
class ArcApprox:
    """Level-n typed path realising an arc, plus its exact exit polyline."""

    color: Color
    pair: Pair
    n: int
    m: int
    scale: int
    steps: tuple[ArcStep, ...]
    polyline: tuple[BaryPoint, ...]

    @property
    def triangles(self) -> tuple[TriIndex, ...]:
        return tuple(s.tri for s in self.steps)

    @property
    def types(self) -> tuple[Pair, ...]:
        return tuple(as_pair(s.entry, s.exit) for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def _steps_of(tp: TypedPath) -> tuple[ArcStep, ...]:
    i, j = tp.pair
    entries = (i,) + tp.labels
    exits = tp.labels + (j,)
    return tuple(ArcStep(t, a, b) for t, a, b in zip(tp.triangles, entries, exits))


def _reverse_steps(steps: tuple[ArcStep, ...]) -> tuple[ArcStep, ...]:
    return tuple(ArcStep(s.tri, s.exit, s.entry) for s in reversed(steps))


def refine_arc(sys: PatternSystem, color: Color, pair: Pair, n: int, cap: int = 8) -> ArcApprox:
    """Approximate the exit-to-exit arc at level n.

    Each refinement round replaces a triangle of ordered type (a, b) by the
    base path of type {a,b}: the own colour's path for upright triangles,
    the opposite colour's for upside-down ones, traversed from side a to
    side b.  Projection preserves side types, so labels carry over.
    """
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"level {n} exceeds cap {cap}")
    pair = as_pair(*pair)
    base = {key: _steps_of(tp) for key, tp in typed_paths(sys).items()}
    m = sys.m
    path = base[(color, pair)]
    for _ in range(n - 1):
        new: list[ArcStep] = []
        for t, a, b in path:
            bcolor = color if t.orient is Orient.UP else color.opposite
            block = base[(bcolor, as_pair(a, b))]
            if a > b:
                block = _reverse_steps(block)
            for u, ua, ub in block:
                new.append(ArcStep(compose_child(t, u, m), ua, ub))
        path = tuple(new)
    scale = m**n
    polyline = _polyline(sys, color, path, scale)
    return ArcApprox(color, pair, n, m, scale, path, polyline)


def _polyline(sys: PatternSystem, color: Color, path, scale: int) -> tuple[BaryPoint, ...]:
    """Exit points along the path, all over the denominator scale*(m-1)."""
    m = sys.m
    r = m - 1
    den = scale * r
    exits = {
        Color.WHITE: _fractal_exits_unchecked(sys, Color.WHITE),
        Color.YELLOW: _fractal_exits_unchecked(sys, Color.YELLOW),
    }
    # fractal exit coordinates have denominator dividing m-1
    enum = {
        (ctx, side): tuple(int(a * r) for a in exits[ctx].point(side))
        for ctx in Color
        for side in (1, 2, 3)
    }

    def nums(t: TriIndex, side: int) -> tuple[int, int, int]:
        ctx = color if t.orient is Orient.UP else color.opposite
        ei = enum[(ctx, side)]
        if t.orient is Orient.UP:
            return (t.k1 * r + ei[0], t.k2 * r + ei[1], t.k3 * r + ei[2])
        return (t.k1 * r + r - ei[0], t.k2 * r + r - ei[1], t.k3 * r + r - ei[2])

    first = path[0]
    points = [BaryPoint.of(*nums(first.tri, first.entry), den)]
    for t, _, b in path:
        points.append(BaryPoint.of(*nums(t, b), den))
    return tuple(points)


def _fraction_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None."""
    pn, qn = x.numerator, x.denominator
    rp, rq = isqrt(pn), isqrt(qn)
    if rp * rp == pn and rq * rq == qn:
        return Fraction(rp, rq)
    return None


def chord_lower_bound(arc: ArcApprox) -> float:
    """Sum of the polyline's segment lengths: a lower bound for arc length.

    Squared distances are exact rationals; segments with rational length
    accumulate exactly, only irrational ones take a floating square root.
    """
    if len(arc.polyline) < 2:
        raise ValueError("polyline needs at least two points")
    rational = Fraction(0)
    irrational: list[float] = []
    for p, q in zip(arc.polyline, arc.polyline[1:]):
        d2 = dist2(p, q)
        root = _fraction_sqrt(d2)
        if root is not None:
            rational += root
        else:
            irrational.append(math.sqrt(d2.numerator / d2.denominator))
    if not irrational:
        return float(rational)
    return math.fsum(irrational + [float(rational)])


def find_w_star(sys: PatternSystem, color: Color, n: int, cap: int = 8) -> TriIndex:
    """The unique level-n triangle common to all three exit-to-exit paths."""
    require_valid(sys)
    if n > cap:
        raise CapExceededError(f"level {n} exceeds cap {cap}")
    lsys = level_system(sys, n, cap)
    g = build_graph(substitute(sys, color, n, cap))
    exits = exit_triangles(lsys, color)
    common: set[TriIndex] | None = None
    for i, j in ((1, 2), (1, 3), (2, 3)):
        tris = set(tree_path(g, exits[i], exits[j]).triangles)
        common = tris if common is None else common & tris
    if common is None or len(common) != 1:
        raise AssertionError(f"junction triangle not unique: {sorted(common or ())}")
    return common.pop()


def arc_table(arc: ArcApprox) -> str:
    """Plain-text polyline table: exact rationals plus Cartesian doubles."""
    lines = ["idx  a1  a2  a3  x  y"]
    for i, p in enumerate(arc.polyline):
        x, y = p.to_cartesian()
        lines.append(f"{i}  {p.a1}  {p.a2}  {p.a3}  {x:.12f}  {y:.12f}")
    return "\n".join(lines)
