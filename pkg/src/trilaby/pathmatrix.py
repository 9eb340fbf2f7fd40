"""Typed exit-to-exit paths, the 6x6 global path matrix, and length iteration."""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .core import Color, Orient, PatternSystem, TriIndex
from .graph import TriGraph, build_graph, tree_path
from .core import substitute
from .validate import exit_triangles, require_valid

Pair = tuple[int, int]

PAIRS: tuple[Pair, Pair, Pair] = ((1, 2), (1, 3), (2, 3))

ARC_KEYS: tuple[tuple[Color, Pair], ...] = tuple(
    (color, pair) for color in (Color.WHITE, Color.YELLOW) for pair in PAIRS
)


def as_pair(i: int, j: int) -> Pair:
    if i == j or not {i, j} <= {1, 2, 3}:
        raise ValueError(f"not a pair of distinct side types: {{{i},{j}}}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class TypedPath:
    """Exit-to-exit tree path with a triangle type assigned to every vertex.

    Interior triangles take the unordered pair of their incident edge
    labels; the endpoint on side i takes {i, first label}, the one on side
    j takes {last label, j}.
    """

    color: Color
    pair: Pair
    scale: int
    triangles: tuple[TriIndex, ...]
    labels: tuple[int, ...]
    types: tuple[Pair, ...]

    def __len__(self) -> int:
        return len(self.triangles)


def _assign_types(pair: Pair, triangles, labels) -> tuple[Pair, ...]:
    i, j = pair
    if len(triangles) == 1:
        raise ValueError("exit path degenerated to a single triangle")
    types = [as_pair(i, labels[0])]
    for h in range(1, len(triangles) - 1):
        types.append(as_pair(labels[h - 1], labels[h]))
    types.append(as_pair(labels[-1], j))
    return tuple(types)


def _typed_path(g: TriGraph, exits: dict[int, TriIndex], color: Color, pair: Pair) -> TypedPath:
    i, j = pair
    p = tree_path(g, exits[i], exits[j])
    return TypedPath(
        color, pair, g.scale, p.triangles, p.labels, _assign_types(pair, p.triangles, p.labels)
    )


def exit_path_typed(sys: PatternSystem, color: Color, pair: Pair) -> TypedPath:
    """The typed path between the colour's exits of the given pair."""
    require_valid(sys)
    pair = as_pair(*pair)
    g = build_graph(substitute(sys, color, 1))
    return _typed_path(g, exit_triangles(sys, color), color, pair)


def typed_paths(sys: PatternSystem) -> dict[tuple[Color, Pair], TypedPath]:
    """All six exit paths, validating the system once."""
    require_valid(sys)
    out: dict[tuple[Color, Pair], TypedPath] = {}
    for color in (Color.WHITE, Color.YELLOW):
        g = build_graph(substitute(sys, color, 1))
        exits = exit_triangles(sys, color)
        for pair in PAIRS:
            out[(color, pair)] = _typed_path(g, exits, color, pair)
    return out


Matrix3 = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class PathMatrices:
    """The four 3x3 type-count matrices and the assembled 6x6 matrix.

    Row/column order is ({1,2}, {1,3}, {2,3}); the white block precedes the
    yellow one in the 6x6 assembly [[Mw, Mw-I], [My-I, My]].
    """

    mw: Matrix3
    tmw: Matrix3
    my: Matrix3
    tmy: Matrix3
    global_matrix: tuple[tuple[int, ...], ...]


def _count_matrices(paths, color) -> tuple[list[list[int]], list[list[int]]]:
    up = [[0] * 3 for _ in range(3)]
    dn = [[0] * 3 for _ in range(3)]
    for r, pair in enumerate(PAIRS):
        tp = paths[(color, pair)]
        for t, gamma in zip(tp.triangles, tp.types):
            c = PAIRS.index(gamma)
            if t.orient is Orient.UP:
                up[r][c] += 1
            else:
                dn[r][c] += 1
    return up, dn


def matrices_from_paths(paths: dict[tuple[Color, Pair], TypedPath]) -> PathMatrices:
    """Assemble the path matrices from precomputed typed paths.

    The upside-down counts must reproduce the upright counts minus the
    identity; that relation is asserted, not assumed.
    """
    mw, tmw = _count_matrices(paths, Color.WHITE)
    my, tmy = _count_matrices(paths, Color.YELLOW)
    for a, ta in ((mw, tmw), (my, tmy)):
        for r in range(3):
            for c in range(3):
                want = a[r][c] - (1 if r == c else 0)
                if ta[r][c] != want:
                    raise AssertionError(
                        f"tilde relation violated at ({r},{c}): {ta[r][c]} != {want}"
                    )
    g = [mw[r] + tmw[r] for r in range(3)] + [tmy[r] + my[r] for r in range(3)]

    def freeze(rows):
        return tuple(tuple(r) for r in rows)

    return PathMatrices(freeze(mw), freeze(tmw), freeze(my), freeze(tmy), freeze(g))


def path_matrices(sys: PatternSystem) -> PathMatrices:
    """Count triangle types along all six exit paths of a valid system."""
    return matrices_from_paths(typed_paths(sys))


def path_lengths(sys: PatternSystem, n: int) -> tuple[int, int, int, int, int, int]:
    """Exit-path lengths (l12, l13, l23, l'12, l'13, l'23) at level n.

    Equals M**n applied to the all-ones vector.  Computed by fast
    exponentiation of the 3x3 system obtained from the block structure:
    with A = Mw + My - I and B = Mw - My the white lengths are
    A**n 1 + B S_n 1 and the yellow ones A**n 1 - B S_n 1, where S_n is the
    geometric sum I + A + ... + A**(n-1).
    """
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    if n == 0:
        return (1, 1, 1, 1, 1, 1)
    pm = path_matrices(sys)
    a = [[pm.mw[r][c] + pm.my[r][c] - (1 if r == c else 0) for c in range(3)] for r in range(3)]
    b = [[pm.mw[r][c] - pm.my[r][c] for c in range(3)] for r in range(3)]
    power, geo = intmat.pow_geom(a, n)
    an1 = intmat.mat_vec(power, [1, 1, 1])
    bs1 = intmat.mat_vec(b, geo)
    white = [x + y for x, y in zip(an1, bs1)]
    yellow = [x - y for x, y in zip(an1, bs1)]
    return tuple(int(v) for v in white + yellow)  # type: ignore[return-value]
