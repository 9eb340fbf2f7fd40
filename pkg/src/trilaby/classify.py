"""Blockedness classes, fractal dimension, and certified spectral radii.

Eigenvalues of the small integer matrices are located exactly: rational
roots split off the characteristic polynomial by integer deflation, a
remaining quadratic factor is kept as an exact surd, and anything harder
is isolated by bisection on Sturm counts over rationals.  Every reported
root comes with a certified enclosing interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt

from .core import Color, PatternSystem
from .pathmatrix import (
    ARC_KEYS,
    PAIRS,
    Pair,
    PathMatrices,
    TypedPath,
    matrices_from_paths,
    path_matrices,
    typed_paths,
)
from .validate import ValidationError


class SpectralError(ValueError):
    pass


class DegenerateSizeError(SpectralError):
    """dominant_eigenvalue handles 2x2 and 3x3 matrices only."""


class ReducibleMatrixError(SpectralError):
    """Matrix is not irreducible: (I+A)**n has a zero entry."""


class EmptyDownSetError(ValidationError):
    """The dimension formula needs non-empty upside-down pattern sets."""


# ---------------------------------------------------------------------------
# exact quadratic surds


@dataclass(frozen=True)
class QuadraticSurd:
    """(a + b*sqrt(d)) / q, normalised so d is squarefree and q > 0."""

    a: int
    b: int
    d: int
    q: int

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.q)

    def to_float(self) -> float:
        return (self.a + self.b * math.sqrt(self.d)) / self.q

    def interval(self) -> tuple[Fraction, Fraction]:
        """Certified rational enclosure of width at most 1e-13."""
        if self.is_rational:
            f = Fraction(self.a, self.q)
            return f, f
        rlo, rhi = _sqrt_interval(self.d)
        c1 = (self.a + self.b * rlo) / self.q
        c2 = (self.a + self.b * rhi) / self.q
        return (c1, c2) if c1 <= c2 else (c2, c1)

    def __str__(self) -> str:
        if self.is_rational:
            return str(Fraction(self.a, self.q))
        root = f"sqrt({self.d})"
        if self.b == -1:
            num = f"{self.a}-{root}" if self.a else f"-{root}"
        elif self.b == 1:
            num = f"{self.a}+{root}" if self.a else root
        else:
            sign = "+" if self.b > 0 else "-"
            num = f"{self.a}{sign}{abs(self.b)}*{root}" if self.a else f"{self.b}*{root}"
        return f"({num})/{self.q}" if self.q != 1 else num


def make_surd(a: int, b: int, d: int, q: int) -> QuadraticSurd:
    if q == 0:
        raise ValueError("zero denominator")
    if d < 0:
        raise ValueError("negative radicand")
    if q < 0:
        a, b, q = -a, -b, -q
    if b == 0 or d == 0:
        b, d = 0, 0
    else:
        f, rest, p = 1, d, 2
        while p * p <= rest:
            while rest % (p * p) == 0:
                rest //= p * p
                f *= p
            p += 1
        b, d = b * f, rest
        if d == 1:
            a, b, d = a + b, 0, 0
    g = gcd(gcd(abs(a), abs(b)), q)
    if g > 1:
        a, b, q = a // g, b // g, q // g
    return QuadraticSurd(a, b, d, q)


def _sqrt_interval(d: int) -> tuple[Fraction, Fraction]:
    scale = 10**13
    r = isqrt(d * scale * scale)
    return Fraction(r, scale), Fraction(r + 1, scale)


def _surd_cmp_fraction(s: QuadraticSurd, f: Fraction) -> int:
    """Sign of s - f, exactly."""
    rat = Fraction(s.a, s.q) - f
    if s.b == 0:
        return (rat > 0) - (rat < 0)
    rad2 = Fraction(s.b * s.b * s.d, s.q * s.q)
    if s.b > 0:
        if rat >= 0:
            return 1
        return (rad2 > rat * rat) - (rad2 < rat * rat)
    if rat <= 0:
        return -1
    return (rat * rat > rad2) - (rat * rat < rad2)


def _surd_lt(x: QuadraticSurd, y: QuadraticSurd) -> bool:
    """x < y, exactly; supports operands sharing at most one radicand."""
    if x.is_rational:
        return _surd_cmp_fraction(y, x.as_fraction()) > 0
    if y.is_rational:
        return _surd_cmp_fraction(x, y.as_fraction()) < 0
    if x.d == y.d:
        # x - y = (aq' - a'q + (bq' - b'q) sqrt(d)) / qq'
        return _surd_cmp_fraction(
            make_surd(x.a * y.q - y.a * x.q, x.b * y.q - y.b * x.q, x.d, x.q * y.q),
            Fraction(0),
        ) < 0
    xl, xh = x.interval()
    yl, yh = y.interval()
    if xh < yl:
        return True
    if yh < xl:
        return False
    raise SpectralError(f"cannot order {x} and {y} at interval precision")


# ---------------------------------------------------------------------------
# exact polynomial root machinery (Sturm sequences over Fractions)

Poly = list[Fraction]  # coefficients, leading term first


def _poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in p:
        acc = acc * x + c
    return acc


def _poly_deriv(p: Poly) -> Poly:
    n = len(p) - 1
    return [c * (n - i) for i, c in enumerate(p[:-1])]


def _poly_rem(a: Poly, b: Poly) -> Poly:
    a = a[:]
    while len(a) >= len(b):
        if a[0] != 0:
            factor = a[0] / b[0]
            for i in range(len(b)):
                a[i] -= factor * b[i]
        a.pop(0)
        while a and a[0] == 0:
            a.pop(0)
    return a


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, _poly_deriv(p)]
    while chain[-1]:
        r = _poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [q for q in chain if q]


def _variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = _poly_eval(q, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _count_roots(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


_TOL = Fraction(1, 10**13)


def _rightmost_root(chain: list[Poly], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Certified interval (lo, hi] around the largest real root in (lo, hi]."""
    if _count_roots(chain, lo, hi) < 1:
        raise SpectralError("no real root in the expected range")
    while hi - lo > _TOL:
        mid = (lo + hi) / 2
        if _count_roots(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _isolate_real_roots(chain: list[Poly], lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals of width <= _TOL covering all real roots, sorted."""
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        if _count_roots(chain, a, b) == 0:
            continue
        if b - a <= _TOL:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort()
    return out


def _char_poly(a: list[list[int]]) -> list[int]:
    """Monic characteristic polynomial det(xI - A), leading term first.

    Faddeev-LeVerrier recursion; the divisions are exact for integer input.
    """
    n = len(a)
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            mk[i][i] += coeffs[-1]
        mk = [
            [sum(Fraction(a[i][t]) * mk[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(mk[i][i] for i in range(n))
        coeffs.append(-trace / k)
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("characteristic polynomial not integral")
        out.append(int(c))
    return out


def _deflate_integer_roots(coeffs: list[int]) -> tuple[list[int], list[int]]:
    """Split off integer roots of a monic integer polynomial."""
    roots: list[int] = []
    p = coeffs[:]
    while len(p) > 1:
        if p[-1] == 0:
            roots.append(0)
            p = p[:-1]
            continue
        tail = abs(p[-1])
        divisors = set()
        for c in range(1, isqrt(tail) + 1):
            if tail % c == 0:
                divisors.update((c, -c, tail // c, -(tail // c)))
        hit = None
        for r in sorted(divisors):
            if sum(c * r ** (len(p) - 1 - i) for i, c in enumerate(p)) == 0:
                hit = r
                break
        if hit is None:
            break
        roots.append(hit)
        q = [p[0]]
        for c in p[1:-1]:
            q.append(c + hit * q[-1])
        p = q
    return roots, p


@dataclass(frozen=True)
class Spectrum:
    """Certified dominant eigenvalue of a small non-negative integer matrix.

    low/high enclose the dominant (largest) real root with width at most
    1e-12; exact carries the root as integer or quadratic surd when the
    characteristic polynomial splits that far; other_real_bound is a
    certified upper bound on the modulus of every other real root.
    """

    char_coeffs: tuple[int, ...]
    low: Fraction
    high: Fraction
    exact: QuadraticSurd | None
    other_real_bound: Fraction

    @property
    def value(self) -> float:
        if self.exact is not None:
            return self.exact.to_float()
        return float((self.low + self.high) / 2)

    def describe(self) -> str:
        if self.exact is not None:
            return f"{self.exact} = {self.value:.12f}"
        return f"in [{float(self.low):.13f}, {float(self.high):.13f}]"


def _radius(a: list[list[int]]) -> Spectrum:
    """Certified spectral radius of a non-negative integer matrix (any size)."""
    n = len(a)
    if n == 1:
        v = a[0][0]
        return Spectrum((1, -v), Fraction(v), Fraction(v), make_surd(v, 0, 0, 1), Fraction(0))
    coeffs = _char_poly(a)

    int_roots, rest = _deflate_integer_roots(coeffs)
    if len(rest) <= 3:
        candidates = [make_surd(r, 0, 0, 1) for r in int_roots]
        if len(rest) == 3:
            b, c = rest[1], rest[2]
            disc = b * b - 4 * c
            if disc >= 0:
                candidates.append(make_surd(-b, 1, disc, 2))
                candidates.append(make_surd(-b, -1, disc, 2))
        if candidates:
            dominant = candidates[0]
            for cand in candidates[1:]:
                if _surd_lt(dominant, cand):
                    dominant = cand
            other_bound = Fraction(0)
            for cand in candidates:
                if cand is dominant:
                    continue
                lo_c, hi_c = cand.interval()
                other_bound = max(other_bound, abs(lo_c), abs(hi_c))
            lo, hi = dominant.interval()
            return Spectrum(tuple(coeffs), lo, hi, dominant, other_bound)

    chain = _sturm_chain([Fraction(c) for c in coeffs])
    bound = Fraction(max(sum(row) for row in a))
    lo, hi = _rightmost_root(chain, -bound - 1, bound)
    intervals = _isolate_real_roots(chain, -bound - 1, bound)
    other_bound = Fraction(0)
    for a_i, b_i in intervals[:-1]:
        other_bound = max(other_bound, abs(a_i), abs(b_i))
    return Spectrum(tuple(coeffs), lo, hi, None, other_bound)


def dominant_eigenvalue(a) -> Spectrum:
    """Dominant eigenvalue of an irreducible non-negative 2x2 or 3x3 matrix.

    The characteristic polynomial is exact; the root is reported as an
    integer or quadratic surd when possible and always with a certified
    interval of width at most 1e-12.
    """
    rows = [list(r) for r in a]
    n = len(rows)
    if n not in (2, 3) or any(len(r) != n for r in rows):
        raise DegenerateSizeError(f"need a 2x2 or 3x3 matrix, got {rows!r}")
    if any(x < 0 for r in rows for x in r):
        raise ValueError("matrix entries must be non-negative")
    power = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    bump = [[rows[i][j] + (i == j) for j in range(n)] for i in range(n)]
    for _ in range(n):
        power = [
            [sum(power[i][t] * bump[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    if any(x == 0 for r in power for x in r):
        raise ReducibleMatrixError(f"(I+A)^{n} has zero entries for {rows!r}")
    return _radius(rows)


# ---------------------------------------------------------------------------
# blockedness


class BlockClass(Enum):
    GLOBALLY_BLOCKED = "globally-blocked"
    TWO_BLOCKED = "two-blocked"
    ONE_BLOCKED = "one-blocked"


@dataclass(frozen=True)
class BlockReport:
    """Per-pair blockedness flags and the derived class.

    distinguished is the unblocked pair for TWO_BLOCKED and the blocked
    pair for ONE_BLOCKED; None when globally blocked.
    """

    white_blocked: tuple[bool, bool, bool]
    yellow_blocked: tuple[bool, bool, bool]
    pair_blocked: tuple[bool, bool, bool]
    kind: BlockClass
    distinguished: Pair | None

    def describe(self) -> str:
        lines = []
        for idx, pair in enumerate(PAIRS):
            lines.append(
                f"pair {{{pair[0]},{pair[1]}}}: white "
                f"{'blocked' if self.white_blocked[idx] else 'straight'}, yellow "
                f"{'blocked' if self.yellow_blocked[idx] else 'straight'} -> "
                f"{'blocked' if self.pair_blocked[idx] else 'unblocked'}"
            )
        tail = f"class: {self.kind.value}"
        if self.distinguished is not None:
            role = "unblocked" if self.kind is BlockClass.TWO_BLOCKED else "blocked"
            tail += f" ({role} pair {{{self.distinguished[0]},{self.distinguished[1]}}})"
        lines.append(tail)
        return "\n".join(lines)


def _path_blocked(tp: TypedPath, pair: Pair) -> bool:
    comp = ({1, 2, 3} - set(pair)).pop()
    strips = {t.k[comp - 1] for t in tp.triangles}
    return len(strips) > 1


def _block_report(paths: dict[tuple[Color, Pair], TypedPath]) -> BlockReport:
    white = tuple(_path_blocked(paths[(Color.WHITE, p)], p) for p in PAIRS)
    yellow = tuple(_path_blocked(paths[(Color.YELLOW, p)], p) for p in PAIRS)
    both = tuple(w or y for w, y in zip(white, yellow))
    blocked_count = sum(both)
    if blocked_count == 0:
        raise AssertionError("no blocked pair: impossible for a labyrinth system")
    if blocked_count == 3:
        kind, special = BlockClass.GLOBALLY_BLOCKED, None
    elif blocked_count == 2:
        kind, special = BlockClass.TWO_BLOCKED, PAIRS[both.index(False)]
    else:
        kind, special = BlockClass.ONE_BLOCKED, PAIRS[both.index(True)]
    return BlockReport(white, yellow, both, kind, special)


def classify_blocked(sys: PatternSystem) -> BlockReport:
    """Blockedness of every exit path, decided from strip coordinates.

    A path of type {i,j} is blocked iff its triangles do not all share the
    same component of the complementary type.
    """
    return _block_report(typed_paths(sys))


# ---------------------------------------------------------------------------
# dimensions


class FractalDimension:
    """Hausdorff (= box) dimension of both fractals, with the exact base."""

    def __init__(self, lam: QuadraticSurd, m: int):
        self.lam = lam
        self.m = m
        self.value = math.log(lam.to_float()) / math.log(m)

    def __repr__(self):
        return f"FractalDimension(lam={self.lam}, m={self.m}, value={self.value:.12f})"


def fractal_dimension(sys: PatternSystem) -> FractalDimension:
    """log(lambda)/log(m) with lambda from the four pattern cardinalities.

    Both fractals share the value.  Requires non-empty upside-down sets,
    which make the two-vertex construction multigraph strongly connected.
    """
    w, wd = len(sys.white.up), len(sys.white.down)
    y, yd = len(sys.yellow.up), len(sys.yellow.down)
    if wd == 0 or yd == 0:
        raise EmptyDownSetError("both upside-down pattern sets must be non-empty")
    lam = make_surd(w + y, 1, (w - y) ** 2 + 4 * wd * yd, 2)
    return FractalDimension(lam, sys.m)


def _sccs(adj: list[list[int]]) -> list[list[int]]:
    """Strongly connected components (Kosaraju), in topological order."""
    n = len(adj)
    order: list[int] = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [(start, iter(adj[start]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                order.append(v)
                stack.pop()
    radj: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for w in adj[v]:
            radj[w].append(v)
    comp = [-1] * n
    comps: list[list[int]] = []
    for v in reversed(order):
        if comp[v] != -1:
            continue
        cid = len(comps)
        comps.append([])
        todo = [v]
        comp[v] = cid
        while todo:
            u = todo.pop()
            comps[cid].append(u)
            for w in radj[u]:
                if comp[w] == -1:
                    comp[w] = cid
                    todo.append(w)
    return comps


def arc_dimensions(sys: PatternSystem) -> dict[tuple[Color, Pair], float]:
    """Certified Hausdorff dimension of the six exit-to-exit arcs.

    The arcs are the invariant sets of a graph-directed system on six
    vertices whose incidence matrix is the global path matrix; all maps
    contract by 1/m.  A vertex's dimension is log_m of the largest
    spectral radius among the strongly connected components it reaches.
    """
    paths = typed_paths(sys)
    pm = matrices_from_paths(paths)
    g = pm.global_matrix
    adj = [[j for j in range(6) if g[i][j] > 0] for i in range(6)]
    comps = _sccs(adj)
    comp_of = [0] * 6
    for cid, members in enumerate(comps):
        for v in members:
            comp_of[v] = cid
    radii = [
        _radius([[g[i][j] for j in members] for i in members]) for members in comps
    ]
    reach: list[set[int]] = [set() for _ in comps]
    for cid in reversed(range(len(comps))):  # sinks first
        reach[cid].add(cid)
        for v in comps[cid]:
            for w in adj[v]:
                if comp_of[w] != cid:
                    reach[cid] |= reach[comp_of[w]]
    m = sys.m
    out: dict[tuple[Color, Pair], float] = {}
    for idx, key in enumerate(ARC_KEYS):
        best = max(
            (radii[cid] for cid in reach[comp_of[idx]]),
            key=lambda s: (s.value, s.high),
        )
        if best.exact is not None and best.exact.is_rational:
            out[key] = math.log(int(best.exact.as_fraction())) / math.log(m)
        else:
            out[key] = math.log(best.value) / math.log(m)
    return out


def global_radius(sys: PatternSystem) -> Spectrum:
    """Certified spectral radius of the 6x6 global path matrix."""
    return _radius([list(r) for r in path_matrices(sys).global_matrix])
