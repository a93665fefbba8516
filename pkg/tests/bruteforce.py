"""Independent brute-force oracles for the test suite.

Everything here enumerates: subsets, bipartitions, matchings, permutations.
Deliberately naive so it can be trusted, and kept apart from the library
paths it checks.
"""

from itertools import combinations, permutations

from chordel import Graph, induced_subgraph


def induced(g: Graph, subset) -> Graph:
    return induced_subgraph(g, subset)[0]


def has_hole(g: Graph) -> bool:
    """Induced cycle of length >= 4: a connected 2-regular induced subgraph."""
    for ell in range(4, g.n + 1):
        for sub in combinations(range(g.n), ell):
            h = induced(g, sub)
            if h.m == ell and all(h.degree(v) == 2 for v in h.vertices()):
                seen = {0}
                stack = [0]
                while stack:
                    v = stack.pop()
                    for u in h.adj[v]:
                        if u not in seen:
                            seen.add(u)
                            stack.append(u)
                if len(seen) == ell:
                    return True
    return False


def contains_induced(g: Graph, f: Graph) -> bool:
    """Induced subgraph isomorphism by permutation enumeration."""
    if f.n > g.n:
        return False
    for sub in combinations(range(g.n), f.n):
        h = induced(g, sub)
        if h.m != f.m:
            continue
        for perm in permutations(range(f.n)):
            if all(
                f.has_edge(u, v) == h.has_edge(perm[u], perm[v])
                for u in range(f.n)
                for v in range(u + 1, f.n)
            ):
                return True
    return False


def min_deletion(g: Graph, feasible) -> int:
    """Smallest k with feasible(g - S) for some |S| = k."""
    for k in range(g.n + 1):
        for sub in combinations(range(g.n), k):
            if feasible(induced(g, [v for v in g.vertices() if v not in sub])):
                return k
    raise AssertionError("even deleting everything failed")


def max_induced(g: Graph, feasible) -> int:
    """Largest vertex count of an induced subgraph satisfying the predicate."""
    for k in range(g.n, -1, -1):
        for sub in combinations(range(g.n), k):
            if feasible(induced(g, sub)):
                return k
    raise AssertionError("empty graph rejected")


def split_partitions(g: Graph) -> set:
    """All clique sides (C, I) over every bipartition of the vertices."""
    out = set()
    verts = list(g.vertices())
    for mask in range(1 << g.n):
        cliq = [v for v in verts if mask >> v & 1]
        indep = [v for v in verts if not mask >> v & 1]
        ok = all(g.has_edge(u, v) for i, u in enumerate(cliq) for v in cliq[i + 1 :])
        ok = ok and not any(
            g.has_edge(u, v) for i, u in enumerate(indep) for v in indep[i + 1 :]
        )
        if ok:
            out.add(tuple(cliq))
    return out


def max_clique(g: Graph) -> int:
    return max_induced(g, lambda h: h.m == h.n * (h.n - 1) // 2)


def max_independent_set(g: Graph) -> int:
    return max_induced(g, lambda h: h.m == 0)


def max_matching_size(g: Graph) -> int:
    """Enumerate all matchings recursively."""
    edges = g.edges()

    def grow(i: int, used: frozenset) -> int:
        if i == len(edges):
            return 0
        best = grow(i + 1, used)
        u, v = edges[i]
        if u not in used and v not in used:
            best = max(best, 1 + grow(i + 1, used | {u, v}))
        return best

    return grow(0, frozenset())


def min_vertex_cover_size(g: Graph) -> int:
    edges = g.edges()
    for k in range(g.n + 1):
        for sub in combinations(range(g.n), k):
            s = set(sub)
            if all(u in s or v in s for u, v in edges):
                return k
    raise AssertionError("unreachable")


def is_cluster(g: Graph) -> bool:
    """Every component a clique, checked straight from the definition."""
    seen = set()
    for start in g.vertices():
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        members = sorted(comp)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if not g.has_edge(u, v):
                    return False
    return True
