"""Constructive Hamiltonian cycles and paths under minimum-degree conditions.

Both constructions start from a cyclic (or u..v) ordering of all vertices that
may use non-edges, then remove the non-edges one at a time by a crossing-pair
exchange.  When the two ends of a non-edge have degree sum at least ``n``
(cycles) or ``n + 1`` (paths with fixed ends), pigeonhole guarantees the
exchange exists, so each repair strictly lowers the number of non-edges and the
whole procedure is O(n^2) per call.  Below ``EXHAUSTIVE_CUTOFF`` vertices an
exhaustive search backs up the exchange when the caller skipped the degree
check.
"""

from __future__ import annotations

from typing import Sequence

from .errors import OddCycle, PreconditionViolated, SearchExhausted
from .graph import Graph
from .matching import Matching

EXHAUSTIVE_CUTOFF = 14


def _greedy_walk(G: Graph, start: int, avoid: set[int]) -> list[int]:
    path = [start]
    seen = {start} | avoid
    while True:
        nxt = next((w for w in G.adj[path[-1]] if w not in seen), None)
        if nxt is None:
            return path
        path.append(nxt)
        seen.add(nxt)


def _close_cycle(G: Graph, cyc: list[int]) -> list[int] | None:
    n = len(cyc)
    while True:
        bad = next((t for t in range(n) if not G.has_edge(cyc[t], cyc[(t + 1) % n])), None)
        if bad is None:
            return cyc
        # rotate so the non-edge joins the last vertex back to the first
        p = cyc[bad + 1:] + cyc[:bad + 1]
        first, last = p[0], p[-1]
        for i in range(n - 1):
            if G.has_edge(first, p[i + 1]) and G.has_edge(last, p[i]):
                cyc = p[:i + 1] + p[:i:-1]
                break
        else:
            return None


def _repair_path(G: Graph, path: list[int]) -> list[int] | None:
    n = len(path)
    while True:
        i = next((t for t in range(n - 1) if not G.has_edge(path[t], path[t + 1])), None)
        if i is None:
            return path
        a, b = path[i], path[i + 1]
        for j in range(n - 1):
            if j == i or not (G.has_edge(a, path[j]) and G.has_edge(b, path[j + 1])):
                continue
            if j > i:
                path = path[:i + 1] + path[j:i:-1] + path[j + 1:]
            else:
                path = path[:j + 1] + path[i:j:-1] + path[i + 1:]
            break
        else:
            return None


def _exhaustive_path(G: Graph, u: int, v: int | None, cycle: bool = False) -> list[int] | None:
    n = G.n
    path = [u]
    seen = [False] * n
    seen[u] = True

    def rec() -> bool:
        x = path[-1]
        if len(path) == n:
            if cycle:
                return G.has_edge(x, u)
            return v is None or x == v
        for w in G.adj[x]:
            if seen[w] or (w == v and len(path) < n - 1):
                continue
            seen[w] = True
            path.append(w)
            if rec():
                return True
            path.pop()
            seen[w] = False
        return False

    return list(path) if rec() else None


def dirac_cycle(G: Graph, check: bool = True) -> tuple[int, ...]:
    """Hamiltonian cycle of a graph with minimum degree at least half its order."""
    n = G.n
    if check:
        if n < 3:
            raise PreconditionViolated("order>=3", f"n={n}")
        if 2 * G.min_degree() < n:
            raise PreconditionViolated("dirac", f"min degree {G.min_degree()} < n/2 = {n / 2}")
    walk = _greedy_walk(G, 0, set())
    on = set(walk)
    cyc = _close_cycle(G, walk + [v for v in range(n) if v not in on])
    if cyc is None and n < EXHAUSTIVE_CUTOFF:
        cyc = _exhaustive_path(G, 0, None, cycle=True) if n >= 3 else None
    if cyc is None:
        raise SearchExhausted("no Hamiltonian cycle found")
    return tuple(cyc)


def _ore_condition(G: Graph) -> bool:
    deg = G.degrees()
    return all(deg[a] + deg[b] >= G.n + 1
               for a in range(G.n) for b in range(a + 1, G.n) if not G.has_edge(a, b))


def ore_path(G: Graph, u: int, v: int, check: bool = True) -> tuple[int, ...]:
    """Hamiltonian path from ``u`` to ``v``.

    Guaranteed when the minimum degree exceeds ``n/2``; the weaker condition
    that every non-adjacent pair has degree sum at least ``n + 1`` is accepted
    as well.
    """
    n = G.n
    if u == v:
        raise PreconditionViolated("distinct-ends", f"u = v = {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise PreconditionViolated("ends-in-range", f"u={u}, v={v}, n={n}")
    if check and 2 * G.min_degree() <= n and not _ore_condition(G):
        raise PreconditionViolated(
            "min-degree>n/2", f"min degree {G.min_degree()} <= n/2 = {n / 2}")
    walk = _greedy_walk(G, u, {v})
    on = set(walk) | {v}
    path = _repair_path(G, walk + [w for w in range(n) if w not in on] + [v])
    if path is None and n < EXHAUSTIVE_CUTOFF:
        path = _exhaustive_path(G, u, v)
    if path is None:
        raise SearchExhausted(f"no Hamiltonian path from {u} to {v} found")
    return tuple(path)


def path_matching(path: Sequence[int], host_n: int) -> Matching:
    """The unique perfect matching of a path on an even number of vertices."""
    if len(path) % 2:
        raise ValueError("path has an odd number of vertices")
    return Matching(tuple((path[i], path[i + 1]) for i in range(0, len(path), 2)), host_n)


def even_cycle_matchings(cycle: Sequence[int], host_n: int | None = None) -> tuple[Matching, Matching]:
    """The two alternating edge classes of an even cycle."""
    k = len(cycle)
    if k % 2:
        raise OddCycle(f"cycle has odd length {k}")
    if k < 4:
        raise ValueError("a cycle needs at least 4 vertices here")
    n = max(cycle) + 1 if host_n is None else host_n
    first = tuple((cycle[i], cycle[i + 1]) for i in range(0, k, 2))
    second = tuple((cycle[i], cycle[(i + 1) % k]) for i in range(1, k, 2))
    return Matching(first, n), Matching(second, n)


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    k = len(cycle)
    return [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
