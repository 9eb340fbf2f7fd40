"""Triangle index arithmetic, pattern systems, exact geometry, substitution.

The unit triangle at scale s splits into s*s triangles addressed by an
orientation plus an integer triple (k1, k2, k3): upright triangles satisfy
k1+k2+k3 == s-1, upside-down ones k1+k2+k3 == s-2.  Points live in
homogeneous (barycentric) coordinates with exact Fraction entries; floats
appear only at the rendering and reporting boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from typing import NamedTuple

from .intmat import mat_pow

SQRT3_HALF = math.sqrt(3.0) / 2.0


class PatternError(ValueError):
    """Base class for pattern-file and triangle-index violations."""


class PatternSyntaxError(PatternError):
    """Malformed line in a pattern file."""


class TriIndexError(PatternError):
    """Triple violates the orientation sum rule or the component range."""


class DuplicateTriangleError(PatternError):
    """The same triangle appears twice in one pattern section."""


class CapExceededError(PatternError):
    """Requested enumeration level exceeds the configured cap."""


class Orient(IntEnum):
    UP = 0
    DOWN = 1


class Color(Enum):
    WHITE = "white"
    YELLOW = "yellow"

    @property
    def opposite(self) -> "Color":
        return Color.YELLOW if self is Color.WHITE else Color.WHITE


class TriIndex(NamedTuple):
    """One oriented triangle; the ambient scale is carried by the caller.

    Sorting TriIndex tuples gives the canonical order: all upright
    triangles first, each block ordered lexicographically by the triple.
    """

    orient: Orient
    k1: int
    k2: int
    k3: int

    @property
    def k(self) -> tuple[int, int, int]:
        return (self.k1, self.k2, self.k3)

    def check(self, scale: int) -> None:
        want = scale - 1 if self.orient is Orient.UP else scale - 2
        if min(self.k) < 0 or sum(self.k) != want:
            raise TriIndexError(f"{self!r} is not valid at scale {scale}")


def tri_up(k1: int, k2: int, k3: int) -> TriIndex:
    return TriIndex(Orient.UP, k1, k2, k3)


def tri_down(k1: int, k2: int, k3: int) -> TriIndex:
    return TriIndex(Orient.DOWN, k1, k2, k3)


class CartPoint(NamedTuple):
    x: float
    y: float


class BaryPoint(NamedTuple):
    """Exact homogeneous coordinates: a1 + a2 + a3 == 1, each in [0, 1]."""

    a1: Fraction
    a2: Fraction
    a3: Fraction

    @staticmethod
    def of(n1: int, n2: int, n3: int, den: int) -> "BaryPoint":
        return BaryPoint(Fraction(n1, den), Fraction(n2, den), Fraction(n3, den))

    def to_cartesian(self) -> CartPoint:
        # P1=(0,0), P2=(1,0), P3=(1/2, sqrt(3)/2)
        x = self.a2 + Fraction(self.a3, 2)
        return CartPoint(float(x), float(self.a3) * SQRT3_HALF)


def dist2(p: BaryPoint, q: BaryPoint) -> Fraction:
    """Squared Euclidean distance of two homogeneous points, exactly.

    With the fixed anchor choice the Cartesian difference is determined by
    (u, v) = (da2, da3) and the squared distance collapses to u^2 + uv + v^2.
    """
    u = p.a2 - q.a2
    v = p.a3 - q.a3
    return u * u + u * v + v * v


def neighbour(t: TriIndex, j: int, scale: int) -> TriIndex | None:
    """The j-neighbour of t (opposite orientation), or None at the border.

    An upright T(k) and an upside-down T'(k') are j-neighbours iff
    k_j == k'_j + 1 and the other two components coincide.
    """
    if j not in (1, 2, 3):
        raise ValueError(f"side type must be 1, 2 or 3, got {j}")
    t.check(scale)
    ks = list(t.k)
    if t.orient is Orient.UP:
        ks[j - 1] -= 1
        if ks[j - 1] < 0:
            return None
        return TriIndex(Orient.DOWN, *ks)
    ks[j - 1] += 1
    return TriIndex(Orient.UP, *ks)


def compose_child(parent: TriIndex, child: TriIndex, child_scale: int) -> TriIndex:
    """Index of the child triangle mapped into the parent.

    Upright parents keep the child orientation and shift: c = m*K + k.
    Upside-down parents flip the orientation and reflect: c = m*K + (m-1-k).
    Equals the triangle spanned by projecting the child's vertices.
    """
    m = child_scale
    if parent.orient is Orient.UP:
        return TriIndex(
            child.orient,
            m * parent.k1 + child.k1,
            m * parent.k2 + child.k2,
            m * parent.k3 + child.k3,
        )
    r = m - 1
    flipped = Orient.DOWN if child.orient is Orient.UP else Orient.UP
    return TriIndex(
        flipped,
        m * parent.k1 + r - child.k1,
        m * parent.k2 + r - child.k2,
        m * parent.k3 + r - child.k3,
    )


def vertices(t: TriIndex, scale: int) -> tuple[BaryPoint, BaryPoint, BaryPoint]:
    """The three vertices A1, A2, A3 of t as exact homogeneous points."""
    t.check(scale)
    k = t.k
    pts = []
    for i in range(3):
        if t.orient is Orient.UP:
            nums = [k[j] + (1 if j == i else 0) for j in range(3)]
        else:
            nums = [k[j] + (0 if j == i else 1) for j in range(3)]
        pts.append(BaryPoint.of(nums[0], nums[1], nums[2], scale))
    return (pts[0], pts[1], pts[2])


def project_point(t: TriIndex, scale: int, p: BaryPoint) -> BaryPoint:
    """Image of p under the projection map onto triangle t."""
    if t.orient is Orient.UP:
        return BaryPoint(
            (t.k1 + p.a1) / scale, (t.k2 + p.a2) / scale, (t.k3 + p.a3) / scale
        )
    return BaryPoint(
        (t.k1 + 1 - p.a1) / scale, (t.k2 + 1 - p.a2) / scale, (t.k3 + 1 - p.a3) / scale
    )


def contains_point(t: TriIndex, scale: int, p: BaryPoint) -> bool:
    """Exact closed-triangle membership test."""
    if t.orient is Orient.UP:
        return all(a * scale >= ki for a, ki in zip(p, t.k))
    return all(a * scale <= ki + 1 for a, ki in zip(p, t.k))


@dataclass(frozen=True)
class Pattern:
    """One colour's base pattern: chosen triangles at scale m."""

    m: int
    up: frozenset[TriIndex]
    down: frozenset[TriIndex]

    def __post_init__(self):
        if self.m < 2:
            raise PatternSyntaxError(f"base scale must be >= 2, got {self.m}")
        for t in self.up:
            if t.orient is not Orient.UP:
                raise TriIndexError(f"{t!r} in the upright section")
            t.check(self.m)
        for t in self.down:
            if t.orient is not Orient.DOWN:
                raise TriIndexError(f"{t!r} in the upside-down section")
            t.check(self.m)


@dataclass(frozen=True)
class PatternSystem:
    white: Pattern
    yellow: Pattern

    def __post_init__(self):
        if self.white.m != self.yellow.m:
            raise PatternSyntaxError("white and yellow patterns disagree on m")

    @property
    def m(self) -> int:
        return self.white.m

    def pattern(self, color: Color) -> Pattern:
        return self.white if color is Color.WHITE else self.yellow


@dataclass(frozen=True)
class LevelSets:
    """One colour's enumerated triangles at level n (scale m**n), sorted."""

    color: Color
    n: int
    m: int
    scale: int
    up: tuple[TriIndex, ...]
    down: tuple[TriIndex, ...]

    def __len__(self) -> int:
        return len(self.up) + len(self.down)


_TAGS = {
    "WU": (Color.WHITE, Orient.UP),
    "WD": (Color.WHITE, Orient.DOWN),
    "YU": (Color.YELLOW, Orient.UP),
    "YD": (Color.YELLOW, Orient.DOWN),
}


def parse_system(text: str) -> PatternSystem:
    """Parse the line-oriented pattern format.

    Comment lines start with '#'.  The first non-comment line is
    "m <integer>"; every further line is "<tag> <k1> <k2> <k3>" with tag in
    WU, WD, YU, YD.  Records are order-insensitive within a tag.
    """
    m: int | None = None
    buckets: dict[str, set[TriIndex]] = {tag: set() for tag in _TAGS}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if m is None:
            if len(toks) != 2 or toks[0] != "m":
                raise PatternSyntaxError(f"line {lineno}: expected 'm <integer>'")
            try:
                m = int(toks[1])
            except ValueError:
                raise PatternSyntaxError(f"line {lineno}: bad scale {toks[1]!r}") from None
            if m < 2:
                raise PatternSyntaxError(f"line {lineno}: scale must be >= 2")
            continue
        if len(toks) != 4 or toks[0] not in _TAGS:
            raise PatternSyntaxError(f"line {lineno}: expected '<tag> k1 k2 k3'")
        try:
            ks = tuple(int(x) for x in toks[1:])
        except ValueError:
            raise PatternSyntaxError(f"line {lineno}: non-integer component") from None
        _, orient = _TAGS[toks[0]]
        t = TriIndex(orient, *ks)
        try:
            t.check(m)
        except TriIndexError as exc:
            raise TriIndexError(f"line {lineno}: {exc}") from None
        if t in buckets[toks[0]]:
            raise DuplicateTriangleError(f"line {lineno}: repeated record {line!r}")
        buckets[toks[0]].add(t)
    if m is None:
        raise PatternSyntaxError("missing 'm <integer>' line")
    white = Pattern(m, frozenset(buckets["WU"]), frozenset(buckets["WD"]))
    yellow = Pattern(m, frozenset(buckets["YU"]), frozenset(buckets["YD"]))
    return PatternSystem(white, yellow)


def format_system(sys: PatternSystem) -> str:
    """Inverse of parse_system, canonical record order."""
    out = [f"m {sys.m}"]
    for tag, (color, orient) in _TAGS.items():
        pat = sys.pattern(color)
        block = pat.up if orient is Orient.UP else pat.down
        for t in sorted(block):
            out.append(f"{tag} {t.k1} {t.k2} {t.k3}")
    return "\n".join(out) + "\n"


def substitute(sys: PatternSystem, color: Color, n: int, cap: int = 8) -> LevelSets:
    """Enumerate the level-n triangle sets of one colour.

    Level 1 is the base pattern.  One step replaces every upright parent by
    copies of its own colour's pattern and every upside-down parent by
    reflected copies of the opposite colour's pattern.
    """
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(f"level {n} exceeds cap {cap}")
    m = sys.m
    own = sys.pattern(color)
    opp = sys.pattern(color.opposite)
    cur_up: set[TriIndex] = set(own.up)
    cur_down: set[TriIndex] = set(own.down)
    for _ in range(n - 1):
        nxt_up: set[TriIndex] = set()
        nxt_down: set[TriIndex] = set()
        for parent in cur_up:
            for c in own.up:
                nxt_up.add(compose_child(parent, c, m))
            for c in own.down:
                nxt_down.add(compose_child(parent, c, m))
        for parent in cur_down:
            for c in opp.up:
                nxt_down.add(compose_child(parent, c, m))
            for c in opp.down:
                nxt_up.add(compose_child(parent, c, m))
        cur_up, cur_down = nxt_up, nxt_down
    return LevelSets(
        color, n, m, m**n, tuple(sorted(cur_up)), tuple(sorted(cur_down))
    )


def level_system(sys: PatternSystem, n: int, cap: int = 8) -> PatternSystem:
    """The level-n sets of both colours, packaged as an m**n pattern system."""
    w = substitute(sys, Color.WHITE, n, cap)
    y = substitute(sys, Color.YELLOW, n, cap)
    scale = sys.m**n
    return PatternSystem(
        Pattern(scale, frozenset(w.up), frozenset(w.down)),
        Pattern(scale, frozenset(y.up), frozenset(y.down)),
    )


def counts(sys: PatternSystem, n: int) -> tuple[int, int, int, int]:
    """Cardinalities (|W_n|, |W'_n|, |Y_n|, |Y'_n|), never by enumeration.

    The set recursion linearises to a 2x2 integer system, solved by fast
    matrix exponentiation; level 0 is the unit triangle, counted (1,0,1,0).
    """
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    w, wd = len(sys.white.up), len(sys.white.down)
    y, yd = len(sys.yellow.up), len(sys.yellow.down)
    pw = mat_pow([[w, yd], [wd, y]], n)
    py = mat_pow([[y, wd], [yd, w]], n)
    return (int(pw[0][0]), int(pw[1][0]), int(py[0][0]), int(py[1][0]))
