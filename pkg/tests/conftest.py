"""Shared fixtures: the three pattern files and a seeded system generator."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from trilaby import (
    Color,
    ExitTriple,
    Orient,
    Pattern,
    PatternSystem,
    TriIndex,
    find_exits,
    neighbour,
    parse_system,
    tri_up,
    validate_system,
)

EXAMPLES = Path(__file__).resolve().parents[1] / "examples"


def load(name: str) -> PatternSystem:
    return parse_system((EXAMPLES / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def ex1() -> PatternSystem:
    return load("ex1.pat")


@pytest.fixture(scope="session")
def ex2() -> PatternSystem:
    return load("ex2.pat")


@pytest.fixture(scope="session")
def ex3() -> PatternSystem:
    return load("ex3.pat")


@pytest.fixture(scope="session")
def fixtures(ex1, ex2, ex3) -> dict[str, PatternSystem]:
    return {"ex1": ex1, "ex2": ex2, "ex3": ex3}


def _grow_induced_tree(rng: random.Random, m: int, seeds: list[TriIndex]) -> tuple[frozenset, frozenset] | None:
    """Random vertex set containing the seeds whose induced graph is a tree.

    Grows by adding vertices whose selected neighbours lie in pairwise
    distinct components; that keeps the induced graph a forest and merges
    components when possible.  Corner triangles are never added.
    """
    corners = {tri_up(*(m - 1 if i == j else 0 for j in range(3))) for i in range(3)}
    selected: set[TriIndex] = set(seeds)
    comp: dict[TriIndex, int] = {t: i for i, t in enumerate(seeds)}

    def nbs(t: TriIndex) -> list[TriIndex]:
        out = []
        for j in (1, 2, 3):
            nb = neighbour(t, j, m)
            if nb is not None:
                out.append(nb)
        return out

    extras = rng.randint(0, 2 * m)
    for _ in range(80 * m * m):
        ncomp = len(set(comp.values()))
        if ncomp == 1 and extras == 0:
            break
        merges: list[tuple[TriIndex, list[int]]] = []
        leafs: list[tuple[TriIndex, list[int]]] = []
        cand_pool: set[TriIndex] = set()
        for t in selected:
            for v in nbs(t):
                if v not in selected and v not in corners:
                    cand_pool.add(v)
        for v in sorted(cand_pool):
            comps = [comp[w] for w in nbs(v) if w in selected]
            if len(set(comps)) != len(comps):
                continue
            (merges if len(comps) > 1 else leafs).append((v, comps))
        if ncomp > 1:
            pool = merges if merges and rng.random() < 0.8 else (leafs or merges)
            if not pool:
                return None
            v, comps = rng.choice(pool)
        else:
            if not leafs:
                break
            v, comps = rng.choice(leafs)
            extras -= 1
        selected.add(v)
        target = min(comps)
        for t, c in comp.items():
            if c in comps:
                comp[t] = target
        comp[v] = target
    if len(set(comp.values())) != 1:
        return None
    up = frozenset(t for t in selected if t.orient is Orient.UP)
    down = frozenset(t for t in selected if t.orient is Orient.DOWN)
    if not down:
        return None
    return up, down


def random_valid_system(seed: int) -> PatternSystem | None:
    """One random triangular labyrinth patterns system, or None on a dud seed."""
    rng = random.Random(seed)
    m = rng.choice([3, 4, 4, 5, 5])
    ks = [rng.randint(1, m - 2) for _ in range(3)]
    r = [m - 1 - k for k in ks]
    white_exits = [tri_up(0, ks[0], r[0]), tri_up(ks[1], 0, r[1]), tri_up(ks[2], r[2], 0)]
    yellow_exits = [tri_up(0, r[0], ks[0]), tri_up(r[1], 0, ks[1]), tri_up(r[2], ks[2], 0)]
    white = _grow_induced_tree(rng, m, white_exits)
    yellow = _grow_induced_tree(rng, m, yellow_exits)
    if white is None or yellow is None:
        return None
    sys = PatternSystem(Pattern(m, *white), Pattern(m, *yellow))
    if not validate_system(sys).overall:
        return None
    if find_exits(sys) != ExitTriple(*ks):
        return None
    return sys


def generate_systems(count: int, seed0: int = 0) -> list[PatternSystem]:
    out: list[PatternSystem] = []
    seed = seed0
    while len(out) < count:
        if seed - seed0 > 200 * count:
            raise RuntimeError(f"system generator starving after {seed - seed0} seeds")
        sys = random_valid_system(seed)
        seed += 1
        if sys is not None:
            out.append(sys)
    return out


@pytest.fixture(scope="session")
def random_systems() -> list[PatternSystem]:
    return generate_systems(200)


@pytest.fixture(scope="session")
def small_random_systems(random_systems) -> list[PatternSystem]:
    return random_systems[:40]
