"""Labyrinth property checks: tree, exits, corners, and level preservation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .core import (
    CapExceededError,
    Color,
    Pattern,
    PatternSystem,
    TriIndex,
    level_system,
    substitute,
    tri_up,
)
from .graph import build_graph, is_tree


class ValidationError(ValueError):
    pass


class NoExitError(ValidationError):
    def __init__(self, side: int):
        super().__init__(f"no admissible exit on side {side}")
        self.side = side


class MultipleExitsError(ValidationError):
    def __init__(self, side: int, ks: list[int]):
        super().__init__(f"multiple admissible exits on side {side}: {ks}")
        self.side = side
        self.ks = ks


class InvalidSystemError(ValidationError):
    """Operation requires a valid triangular labyrinth patterns system."""


class ExitTriple(NamedTuple):
    k1: int
    k2: int
    k3: int


def _admissible(sys: PatternSystem, side: int, k: int) -> bool:
    m = sys.m
    r = m - 1 - k
    if side == 1:
        w, y = tri_up(0, k, r), tri_up(0, r, k)
    elif side == 2:
        w, y = tri_up(k, 0, r), tri_up(r, 0, k)
    else:
        w, y = tri_up(k, r, 0), tri_up(r, k, 0)
    return w in sys.white.up and y in sys.yellow.up


def find_exits(sys: PatternSystem) -> ExitTriple:
    """Scan each side for the unique admissible exit offset k."""
    found = []
    for side in (1, 2, 3):
        ks = [k for k in range(sys.m) if _admissible(sys, side, k)]
        if not ks:
            raise NoExitError(side)
        if len(ks) > 1:
            raise MultipleExitsError(side, ks)
        found.append(ks[0])
    return ExitTriple(*found)


def exit_triangles(sys: PatternSystem, color: Color) -> dict[int, TriIndex]:
    """The three exit triangles of one colour, keyed by side type."""
    k1, k2, k3 = find_exits(sys)
    m = sys.m
    if color is Color.WHITE:
        return {
            1: tri_up(0, k1, m - 1 - k1),
            2: tri_up(k2, 0, m - 1 - k2),
            3: tri_up(k3, m - 1 - k3, 0),
        }
    return {
        1: tri_up(0, m - 1 - k1, k1),
        2: tri_up(m - 1 - k2, 0, k2),
        3: tri_up(m - 1 - k3, k3, 0),
    }


def corner_triangles(pat: Pattern) -> frozenset[TriIndex]:
    """Upright pattern members touching a vertex of the unit triangle.

    Detected by some component equalling m-1, which forces the other two
    to vanish.
    """
    r = pat.m - 1
    return frozenset(t for t in pat.up if r in t.k)


@dataclass(frozen=True)
class ValidationReport:
    tree_ok_white: bool
    tree_ok_yellow: bool
    exits: ExitTriple | None
    corners_ok: bool
    overall: bool
    diagnostics: tuple[str, ...] = field(default=())

    def to_text(self) -> str:
        lines = [
            f"tree property (white):  {'ok' if self.tree_ok_white else 'FAIL'}",
            f"tree property (yellow): {'ok' if self.tree_ok_yellow else 'FAIL'}",
            f"exits property:         "
            + (f"ok, triple {tuple(self.exits)}" if self.exits else "FAIL"),
            f"corners property:       {'ok' if self.corners_ok else 'FAIL'}",
            f"overall:                {'valid' if self.overall else 'INVALID'}",
        ]
        for d in self.diagnostics:
            lines.append(f"  - {d}")
        return "\n".join(lines)

    def to_kv(self) -> str:
        exits = ",".join(str(k) for k in self.exits) if self.exits else "-"
        return "\n".join(
            [
                f"tree_white={str(self.tree_ok_white).lower()}",
                f"tree_yellow={str(self.tree_ok_yellow).lower()}",
                f"exits={exits}",
                f"corners={str(self.corners_ok).lower()}",
                f"overall={str(self.overall).lower()}",
            ]
        )


def validate_system(sys: PatternSystem) -> ValidationReport:
    """Check the three labyrinth properties; diagnostics list every failure."""
    diags: list[str] = []

    tree_ok = {}
    for color in Color:
        g = build_graph(substitute(sys, color, 1))
        tree_ok[color] = is_tree(g)
        if not tree_ok[color]:
            diags.append(f"{color.value} graph is not a tree")

    exits: ExitTriple | None = None
    try:
        exits = find_exits(sys)
    except ValidationError as exc:
        diags.append(str(exc))

    cw = corner_triangles(sys.white)
    cy = corner_triangles(sys.yellow)
    corners_ok = len(cw) <= 1 and len(cy) <= 1 and not (cw & cy)
    if len(cw) > 1:
        diags.append(f"white pattern holds {len(cw)} corner triangles")
    if len(cy) > 1:
        diags.append(f"yellow pattern holds {len(cy)} corner triangles")
    if cw & cy:
        diags.append("white and yellow corner triangles overlap")

    overall = (
        tree_ok[Color.WHITE]
        and tree_ok[Color.YELLOW]
        and exits is not None
        and corners_ok
    )
    return ValidationReport(
        tree_ok[Color.WHITE],
        tree_ok[Color.YELLOW],
        exits,
        corners_ok,
        overall,
        tuple(diags),
    )


def validate_level(sys: PatternSystem, n: int, cap: int = 8) -> ValidationReport:
    """Validate the level-n sets as an m**n pattern system."""
    if n > cap:
        raise CapExceededError(f"level {n} exceeds cap {cap}")
    return validate_system(level_system(sys, n, cap))


def require_valid(sys: PatternSystem) -> ValidationReport:
    report = validate_system(sys)
    if not report.overall:
        raise InvalidSystemError("; ".join(report.diagnostics) or "invalid system")
    return report
