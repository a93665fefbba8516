"""Interval models and the sweep solvers that run on them.

Endpoints are exact rationals, never floats.  The solvers assume general
position (all 2n endpoints distinct); models that violate it are repaired
first by an order-preserving re-spacing onto the integers 1..2n, with ties
resolved so that the intersection graph is unchanged (left endpoints come
before right endpoints at equal coordinates).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphInputError, VertexSet, induced_subgraph, vset
from .recognition import CLUSTER, COMPLETE_SPLIT, recognize


@dataclass(frozen=True)
class IntervalModel:
    """Closed interval [l(v), r(v)] per vertex v = 0..n-1."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        norm = []
        for i, (l, r) in enumerate(self.intervals):
            lf, rf = Fraction(l), Fraction(r)
            if lf > rf:
                raise GraphInputError(f"interval {i} has l > r")
            norm.append((lf, rf))
        object.__setattr__(self, "intervals", tuple(norm))

    @property
    def n(self) -> int:
        return len(self.intervals)

    def left(self, v: int) -> Fraction:
        return self.intervals[v][0]

    def right(self, v: int) -> Fraction:
        return self.intervals[v][1]

    def is_general_position(self) -> bool:
        pts = [p for l, r in self.intervals for p in (l, r)]
        return len(set(pts)) == 2 * self.n and all(l < r for l, r in self.intervals)

    def normalized(self) -> "IntervalModel":
        """Re-space endpoints to 1..2n preserving order and the graph.

        At equal coordinates all left endpoints precede all right endpoints,
        so touching intervals keep touching; ties within a kind break by
        vertex id.
        """
        events = []
        for v, (l, r) in enumerate(self.intervals):
            events.append((l, 0, v))
            events.append((r, 1, v))
        events.sort()
        spots: dict[tuple[int, int], Fraction] = {}
        for pos, (_, kind, v) in enumerate(events, start=1):
            spots[(kind, v)] = Fraction(pos)
        return IntervalModel(
            tuple((spots[(0, v)], spots[(1, v)]) for v in range(self.n))
        )


def model_to_graph(m: IntervalModel) -> Graph:
    """Intersection graph of the closed intervals."""
    edges = []
    for u in range(m.n):
        for v in range(u + 1, m.n):
            if max(m.left(u), m.left(v)) <= min(m.right(u), m.right(v)):
                edges.append((u, v))
    return Graph.from_edges(m.n, edges)


def parse_interval_model(text: str) -> tuple[IntervalModel, list[str]]:
    """One vertex per line: "label l r", integer or rational endpoints."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 3:
            raise GraphInputError(f"model line must be 'label l r', got {line!r}")
        try:
            rows.append((toks[0], Fraction(toks[1]), Fraction(toks[2])))
        except (ValueError, ZeroDivisionError):
            raise GraphInputError(f"bad endpoint in {line!r}") from None
    labels = [lab for lab, _, _ in rows]
    if len(set(labels)) != len(labels):
        raise GraphInputError("duplicate vertex labels in model")
    return IntervalModel(tuple((l, r) for _, l, r in rows)), labels


def write_interval_model(m: IntervalModel, labels: list[str] | None = None) -> str:
    if labels is None:
        labels = [str(i) for i in range(m.n)]
    lines = [
        f"{labels[v]} {m.left(v)} {m.right(v)}" for v in range(m.n)
    ]
    return "\n".join(lines) + "\n"


def _prepared(m: IntervalModel) -> IntervalModel:
    return m if m.is_general_position() else m.normalized()


def max_clique_window(m: IntervalModel, lo, hi) -> VertexSet:
    """Maximum clique among intervals lying inside [lo, hi].

    Left-to-right sweep counting simultaneous overlap; the first sweep
    position attaining the maximum supplies the clique.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    members = [v for v in range(m.n) if lo <= m.left(v) and m.right(v) <= hi]
    events = []
    for v in members:
        events.append((m.left(v), 0, v))
        events.append((m.right(v), 1, v))
    events.sort()
    active: set[int] = set()
    best: tuple[int, ...] = ()
    for _, kind, v in events:
        if kind == 0:
            active.add(v)
            if len(active) > len(best):
                best = vset(active)
        else:
            active.discard(v)
    return best


def _max_clique_global(m: IntervalModel) -> VertexSet:
    if m.n == 0:
        return ()
    lo = min(m.left(v) for v in range(m.n))
    hi = max(m.right(v) for v in range(m.n))
    return max_clique_window(m, lo, hi)


def _greedy_interval_mis(m: IntervalModel, members: list[int]) -> VertexSet:
    """Maximum set of pairwise disjoint intervals: earliest right end first."""
    chosen = []
    frontier = None
    for v in sorted(members, key=lambda v: (m.right(v), v)):
        if frontier is None or m.left(v) > frontier:
            chosen.append(v)
            frontier = m.right(v)
    return vset(chosen)


def max_complete_split_subgraph(m: IntervalModel) -> VertexSet:
    """Largest vertex set whose induced subgraph is a complete split graph.

    The non-clique case is driven by the two extreme independent vertices:
    alpha is the least right endpoint over I and beta the largest left one,
    so the clique is exactly the intervals containing [alpha, beta] and the
    rest of I is a maximum independent set strictly inside (alpha, beta).
    All O(n^2) extreme pairs are enumerated; a pure clique covers |I| <= 1.
    """
    m = _prepared(m)
    best = _max_clique_global(m)
    for vl in range(m.n):
        alpha = m.right(vl)
        for vr in range(m.n):
            beta = m.left(vr)
            if vr == vl or alpha >= beta:
                continue
            cliq = [
                v
                for v in range(m.n)
                if m.left(v) <= alpha and beta <= m.right(v)
            ]
            inside = [
                v
                for v in range(m.n)
                if alpha < m.left(v) and m.right(v) < beta
            ]
            cand = vset(set(cliq) | {vl, vr} | set(_greedy_interval_mis(m, inside)))
            if len(cand) > len(best) or (len(cand) == len(best) and cand < best):
                best = cand
    _verify(m, best, COMPLETE_SPLIT)
    return best


def max_cluster_subgraph(m: IntervalModel) -> VertexSet:
    """Largest vertex set inducing a cluster graph.

    Every clique of an optimal solution lives in a window spanned by one
    left and one right endpoint, and the windows of distinct cliques are
    disjoint.  Build all windows weighted by their maximum clique size and
    take a maximum-weight disjoint subfamily by the classic dynamic program
    over windows sorted by right endpoint.
    """
    m = _prepared(m)
    if m.n == 0:
        return ()
    windows = []
    for va in range(m.n):
        lo = m.left(va)
        for vb in range(m.n):
            hi = m.right(vb)
            if lo >= hi:
                continue
            cliq = max_clique_window(m, lo, hi)
            if cliq:
                windows.append((hi, lo, cliq))
    windows.sort()

    rights = [w[0] for w in windows]
    k = len(windows)
    dp = [0] * (k + 1)
    for j in range(1, k + 1):
        hi, lo, cliq = windows[j - 1]
        prev = bisect.bisect_left(rights, lo)
        dp[j] = max(dp[j - 1], dp[prev] + len(cliq))

    chosen: list[tuple[Fraction, Fraction, VertexSet]] = []
    j = k
    while j > 0:
        hi, lo, cliq = windows[j - 1]
        prev = bisect.bisect_left(rights, lo)
        if dp[prev] + len(cliq) > dp[j - 1]:
            chosen.append((lo, hi, cliq))
            j = prev
        else:
            j -= 1

    for (l1, r1, _), (l2, r2, _) in zip(chosen, chosen[1:]):
        if not (r2 < l1 or r1 < l2):
            raise AssertionError("chosen windows overlap")
    out = vset(v for _, _, cliq in chosen for v in cliq)
    _verify(m, out, CLUSTER)
    return out


def _verify(m: IntervalModel, kept: VertexSet, label) -> None:
    g = model_to_graph(m)
    sub, _ = induced_subgraph(g, kept)
    if not recognize(sub, label).member:
        raise AssertionError(f"interval solver output is not {label.spelling}")
