"""Undirected simple graphs over dense integer vertex ids 0..n-1.

Graphs are immutable values; every operation returns a new graph.  All
iteration is in ascending vertex id so downstream solvers are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, TYPE_CHECKING

if TYPE_CHECKING:
    from .recognition import ClassLabel

VertexSet = tuple[int, ...]


class GraphInputError(ValueError):
    """Malformed graph input: bad ids, bad file syntax, broken invariants."""


def vset(vertices: Iterable[int]) -> VertexSet:
    """Canonical vertex set: ascending, duplicate-free tuple."""
    return tuple(sorted(set(vertices)))


@dataclass(frozen=True)
class Graph:
    """Adjacency-set representation of an undirected simple graph.

    Invariants: adjacency is symmetric, there are no self loops, and the
    vertex ids are exactly 0..n-1.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphInputError(f"adjacency length {len(self.adj)} != n = {self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphInputError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphInputError(f"neighbor {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise GraphInputError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n = {n}")
            if u == v:
                raise GraphInputError(f"self-loop ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, ascending."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))


@dataclass(frozen=True)
class DeletionResult:
    """A deletion set together with the class it certifies and who found it."""

    deleted: VertexSet
    target_class: "ClassLabel"
    method: str = ""

    @property
    def size(self) -> int:
        return len(self.deleted)


def check_vertex_set(g: Graph, s: Iterable[int]) -> VertexSet:
    out = vset(s)
    for v in out:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} out of range for n = {g.n}")
    return out


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the survivors, re-indexed to 0..n-|s|-1.

    Returns the new graph and the old-to-new id map for the survivors.
    """
    dead = set(check_vertex_set(g, s))
    survivors = [v for v in g.vertices() if v not in dead]
    old_to_new = {v: i for i, v in enumerate(survivors)}
    adj = tuple(
        frozenset(old_to_new[u] for u in g.adj[v] if u not in dead) for v in survivors
    )
    return Graph(len(survivors), adj), old_to_new


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on `keep`, with the old-to-new id map."""
    kept = set(check_vertex_set(g, keep))
    return delete_vertices(g, [v for v in g.vertices() if v not in kept])


def complement(g: Graph) -> Graph:
    all_v = frozenset(g.vertices())
    adj = tuple(all_v - g.adj[v] - {v} for v in g.vertices())
    return Graph(g.n, adj)


def connected_components(g: Graph) -> list[VertexSet]:
    """Partition into maximal connected vertex sets, each ascending."""
    seen = [False] * g.n
    comps: list[VertexSet] = []
    for start in g.vertices():
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(vset(comp))
    return comps


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    ss = check_vertex_set(g, s)
    return all(g.has_edge(u, v) for i, u in enumerate(ss) for v in ss[i + 1 :])


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    ss = check_vertex_set(g, s)
    return not any(g.has_edge(u, v) for i, u in enumerate(ss) for v in ss[i + 1 :])


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 followed by g2, with g2's ids shifted up by g1.n."""
    off = g1.n
    adj = tuple(g1.adj) + tuple(frozenset(u + off for u in s) for s in g2.adj)
    return Graph(g1.n + g2.n, adj)


def add_edges(g: Graph, extra: Iterable[tuple[int, int]]) -> Graph:
    edges = set(g.edges())
    for u, v in extra:
        if u == v:
            raise GraphInputError(f"self-loop ({u}, {v})")
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(g.n, sorted(edges))


def remove_edges(g: Graph, gone: Iterable[tuple[int, int]]) -> Graph:
    drop = {(min(u, v), max(u, v)) for u, v in gone}
    return Graph.from_edges(g.n, [e for e in g.edges() if e not in drop])


def bipartition_classes(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Two-color g by BFS; None when some component has an odd cycle."""
    color = [-1] * g.n
    for start in g.vertices():
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in g.adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    left = vset(v for v in g.vertices() if color[v] == 0)
    right = vset(v for v in g.vertices() if color[v] == 1)
    return left, right
