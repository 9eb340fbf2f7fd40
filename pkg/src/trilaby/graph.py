"""Labelled neighbour graphs over triangle sets, tree checks, tree paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from collections import deque

from .core import LevelSets, Orient, TriIndex, neighbour


class GraphError(ValueError):
    pass


class NotATreeError(GraphError):
    pass


class VertexMissingError(GraphError):
    pass


@dataclass(frozen=True)
class TriGraph:
    """Undirected graph of one colour's triangles at one scale.

    Vertices are in canonical sort order (upright block first).  Every edge
    joins an upright and an upside-down triangle and carries the label j of
    the shared side type.
    """

    scale: int
    vertices: tuple[TriIndex, ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]
    index: dict[TriIndex, int] = field(compare=False, repr=False)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


@dataclass(frozen=True)
class TreePath:
    """A simple path: vertex ids, their triangles, and the edge labels."""

    vertices: tuple[int, ...]
    triangles: tuple[TriIndex, ...]
    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def reversed(self) -> "TreePath":
        return TreePath(
            self.vertices[::-1], self.triangles[::-1], self.labels[::-1]
        )


def build_graph(ls: LevelSets) -> TriGraph:
    """Connect j-neighbours within one colour's level sets."""
    verts = ls.up + ls.down
    index = {t: i for i, t in enumerate(verts)}
    adj: list[list[tuple[int, int]]] = [[] for _ in verts]
    for i, t in enumerate(verts):
        if t.orient is not Orient.UP:
            continue
        for j in (1, 2, 3):
            nb = neighbour(t, j, ls.scale)
            if nb is None:
                continue
            d = index.get(nb)
            if d is not None:
                adj[i].append((d, j))
                adj[d].append((i, j))
    return TriGraph(
        ls.scale, verts, tuple(tuple(sorted(a)) for a in adj), index
    )


def is_tree(g: TriGraph) -> bool:
    """Connected and |E| == |V| - 1."""
    n = len(g.vertices)
    if n == 0:
        return False
    if g.edge_count != n - 1:
        return False
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for w, _ in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                queue.append(w)
    return reached == n


def tree_path(g: TriGraph, a: TriIndex, b: TriIndex) -> TreePath:
    """The unique simple path from a to b in a tree graph."""
    if not is_tree(g):
        raise NotATreeError("graph is not a tree")
    try:
        start = g.index[a]
        goal = g.index[b]
    except KeyError as exc:
        raise VertexMissingError(f"vertex {exc.args[0]!r} not in graph") from None
    parent: dict[int, tuple[int, int]] = {start: (-1, 0)}
    queue = deque([start])
    while queue and goal not in parent:
        v = queue.popleft()
        for w, lab in g.adjacency[v]:
            if w not in parent:
                parent[w] = (v, lab)
                queue.append(w)
    ids = [goal]
    labels = []
    while ids[-1] != start:
        prev, lab = parent[ids[-1]]
        labels.append(lab)
        ids.append(prev)
    ids.reverse()
    labels.reverse()
    return TreePath(
        tuple(ids), tuple(g.vertices[i] for i in ids), tuple(labels)
    )


def to_dot(g: TriGraph) -> str:
    """DOT export: vertex label 'U|D k1,k2,k3', edge label j."""
    lines = ["graph trigraph {"]
    for i, t in enumerate(g.vertices):
        tag = "U" if t.orient is Orient.UP else "D"
        lines.append(f'  v{i} [label="{tag} {t.k1},{t.k2},{t.k3}"];')
    for i, adj in enumerate(g.adjacency):
        for w, lab in adj:
            if i < w:
                lines.append(f'  v{i} -- v{w} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
