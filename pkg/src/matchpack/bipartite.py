"""Bipartite matching with Hall violators, and matching under a degree budget.

A :class:`BipartiteGraph` has parts ``X = 0..x_size-1`` and ``Y = 0..y_size-1``
(indexed separately).  When a bipartite matching is returned as a
:class:`~matchpack.matching.Matching` the Y side is shifted by ``x_size``, the
same convention the graph text format uses for bipartite graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, InternalContradiction, PreconditionViolated
from .graph import Graph
from .matching import Matching


@dataclass(frozen=True)
class BipartiteGraph:
    x_size: int
    y_size: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.x_size:
            raise ValueError("adjacency must list every X vertex")
        fixed = []
        for x, ys in enumerate(self.adj):
            ys = tuple(sorted(set(ys)))
            if len(ys) != len(self.adj[x]):
                raise ValueError(f"repeated neighbour at X vertex {x}")
            if ys and not (0 <= ys[0] and ys[-1] < self.y_size):
                raise IndexOutOfRange(f"Y index out of range at X vertex {x}")
            fixed.append(ys)
        object.__setattr__(self, "adj", tuple(fixed))

    @classmethod
    def from_edges(cls, x_size: int, y_size: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        adj: list[set[int]] = [set() for _ in range(x_size)]
        for x, y in edges:
            if not (0 <= x < x_size and 0 <= y < y_size):
                raise IndexOutOfRange(f"edge ({x},{y}) out of range")
            adj[x].add(y)
        return cls(x_size, y_size, tuple(tuple(a) for a in adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.x_size) for y in self.adj[x]]

    def x_degree(self, x: int) -> int:
        return len(self.adj[x])

    def y_degrees(self) -> list[int]:
        deg = [0] * self.y_size
        for ys in self.adj:
            for y in ys:
                deg[y] += 1
        return deg

    def without(self, x_removed: Iterable[int] = (), y_removed: Iterable[int] = (),
                edges: Iterable[tuple[int, int]] = ()) -> "BipartiteGraph":
        """Same index space with some vertices isolated and some edges dropped."""
        xr, yr, er = set(x_removed), set(y_removed), set(edges)
        adj = tuple(
            () if x in xr else tuple(y for y in ys if y not in yr and (x, y) not in er)
            for x, ys in enumerate(self.adj)
        )
        return BipartiteGraph(self.x_size, self.y_size, adj)

    def as_graph(self) -> Graph:
        n = self.x_size + self.y_size
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for x, y in self.edges():
            nbrs[x].append(self.x_size + y)
            nbrs[self.x_size + y].append(x)
        return Graph(n, nbrs)


@dataclass(frozen=True)
class HallViolator:
    """``W`` within X whose neighbourhood is strictly smaller than ``W``."""

    W: tuple[int, ...]
    neighborhood: tuple[int, ...]


def hopcroft_karp(B: BipartiteGraph, xs: Sequence[int] | None = None,
                  ys: Iterable[int] | None = None) -> dict[int, int]:
    """Maximum matching of ``B`` restricted to ``xs`` and ``ys``, as an X->Y map."""
    xs = list(range(B.x_size)) if xs is None else sorted(xs)
    allowed = set(range(B.y_size)) if ys is None else set(ys)
    adj = {x: [y for y in B.adj[x] if y in allowed] for x in xs}
    pair_x: dict[int, int] = {}
    pair_y: dict[int, int] = {}
    inf = len(xs) + 1

    while True:
        dist: dict[int, int] = {}
        queue = deque()
        for x in xs:
            if x not in pair_x:
                dist[x] = 0
                queue.append(x)
        found = inf
        while queue:
            x = queue.popleft()
            if dist[x] >= found:
                continue
            for y in adj[x]:
                x2 = pair_y.get(y)
                if x2 is None:
                    found = min(found, dist[x] + 1)
                elif x2 not in dist:
                    dist[x2] = dist[x] + 1
                    queue.append(x2)
        if found == inf:
            return pair_x

        def dfs(x: int) -> bool:
            for y in adj[x]:
                x2 = pair_y.get(y)
                if (x2 is None and dist[x] + 1 == found) or (
                        x2 is not None and dist.get(x2) == dist[x] + 1 and dfs(x2)):
                    pair_x[x] = y
                    pair_y[y] = x
                    return True
            dist[x] = inf
            return False

        for x in xs:
            if x not in pair_x:
                dfs(x)


def _as_matching(B: BipartiteGraph, pairs: dict[int, int]) -> Matching:
    return Matching(tuple((x, B.x_size + y) for x, y in pairs.items()), B.x_size + B.y_size)


def bipartite_matching_or_violator(B: BipartiteGraph, xs: Sequence[int] | None = None,
                                   ys: Iterable[int] | None = None) -> Matching | HallViolator:
    """A matching saturating every X vertex, or a Hall violator.

    ``xs``/``ys`` restrict the search to an induced bipartite subgraph.  The
    violator is the set of X vertices reachable by alternating paths from an
    unmatched X vertex once the matching is maximum.
    """
    xs = list(range(B.x_size)) if xs is None else sorted(xs)
    allowed = set(range(B.y_size)) if ys is None else set(ys)
    pairs = hopcroft_karp(B, xs, allowed)
    free = [x for x in xs if x not in pairs]
    if not free:
        return _as_matching(B, pairs)
    pair_y = {y: x for x, y in pairs.items()}
    W = {free[0]}
    N: set[int] = set()
    queue = deque([free[0]])
    while queue:
        x = queue.popleft()
        for y in B.adj[x]:
            if y in allowed and y not in N:
                N.add(y)
                x2 = pair_y[y]
                if x2 not in W:
                    W.add(x2)
                    queue.append(x2)
    return HallViolator(tuple(sorted(W)), tuple(sorted(N)))


def neighborhood(B: BipartiteGraph, W: Iterable[int], ys: Iterable[int] | None = None) -> set[int]:
    allowed = None if ys is None else set(ys)
    return {y for x in W for y in B.adj[x] if allowed is None or y in allowed}


def check_budget_preconditions(B: BipartiteGraph, d: int, k: int,
                               S_ex: Iterable[int], U_ex: Iterable[int]) -> None:
    """Raise :class:`PreconditionViolated` naming the first failed hypothesis."""
    s = B.x_size
    S_ex, U_ex = set(S_ex), set(U_ex)
    if B.y_size != s + 1:
        raise PreconditionViolated("part-orders", f"|U|={B.y_size} but |S|+1={s + 1}")
    if k < 0 or len(S_ex) != k or not S_ex <= set(range(s)):
        raise PreconditionViolated("exclusion-S", f"need {k} excluded S vertices, got {sorted(S_ex)}")
    if len(U_ex) != k + 1 or not U_ex <= set(range(s + 1)):
        raise PreconditionViolated("exclusion-U", f"need {k + 1} excluded U vertices, got {sorted(U_ex)}")
    if 2 * d < s + k + 2:
        raise PreconditionViolated("d>=(s+k)/2+1", f"d={d}, s={s}, k={k}")
    if d < k + 1:
        raise PreconditionViolated("d>=k+1", f"d={d}, k={k}")
    ydeg = B.y_degrees()
    low = [u for u in range(B.y_size) if ydeg[u] < d]
    if low:
        raise PreconditionViolated("min-degree-U", f"U vertex {low[0]} has degree {ydeg[low[0]]} < {d}")
    xdeg = [B.x_degree(x) for x in range(s)]
    high = [x for x in range(s) if xdeg[x] > d + 2]
    if high:
        raise PreconditionViolated("max-degree-S", f"S vertex {high[0]} has degree {xdeg[high[0]]} > {d + 2}")
    top = [x for x in range(s) if xdeg[x] == d + 2]
    if len(top) > 1:
        raise PreconditionViolated("single-top-degree-S", f"S vertices {top} all have degree {d + 2}")


def budget_matching(B: BipartiteGraph, d: int, k: int,
                    S_ex: Iterable[int], U_ex: Iterable[int]) -> Matching:
    """Perfect matching of ``B - S_ex - U_ex`` under the degree budget.

    ``B`` has parts ``S`` (X side, ``s`` vertices) and ``U`` (Y side, ``s+1``
    vertices).  If every U vertex has degree at least ``d``, every S vertex has
    degree at most ``d+2`` with at most one reaching ``d+2``, and
    ``d >= (s+k)/2 + 1``, ``d >= k+1``, then removing any ``k`` vertices of S
    and ``k+1`` of U leaves a graph with a perfect matching.  The matching is
    found by Hopcroft-Karp; a Hall violator at that point means the guarantee
    failed, which is reported as :class:`InternalContradiction`.
    """
    S_ex, U_ex = set(S_ex), set(U_ex)
    check_budget_preconditions(B, d, k, S_ex, U_ex)
    xs = [x for x in range(B.x_size) if x not in S_ex]
    ys = [y for y in range(B.y_size) if y not in U_ex]
    out = bipartite_matching_or_violator(B, xs, ys)
    if isinstance(out, HallViolator):
        raise InternalContradiction(
            f"no perfect matching after removing S{sorted(S_ex)} U{sorted(U_ex)}: "
            f"|N(W)|={len(out.neighborhood)} < |W|={len(out.W)}")
    return out

