"""Exhaustive ground truth for small graphs.

Perfect matchings are enumerated by branching on the neighbours of the
smallest uncovered vertex, which lists them in lexicographic order.  The
maximum number of pairwise edge-disjoint perfect matchings is then found by
branch and bound set packing over that list, with matchings encoded as edge
bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import Cancelled, CapExceeded, OddOrder
from .graph import Graph, canon
from .matching import Matching

DEFAULT_CAP = 200_000


@dataclass
class PackingResult:
    max_disjoint: int
    witness: list[Matching]
    pm_count: int
    nodes_explored: int


def enumerate_perfect_matchings(G: Graph, cap: int = DEFAULT_CAP) -> list[Matching]:
    """Every perfect matching of ``G`` in lexicographic order.

    Raises :class:`CapExceeded` as soon as more than ``cap`` are found.
    """
    n = G.n
    if n % 2:
        raise OddOrder(f"graph has odd order {n}")
    covered = [False] * n
    stack: list[tuple[int, int]] = []
    out: list[Matching] = []

    def rec(v: int) -> None:
        while v < n and covered[v]:
            v += 1
        if v == n:
            if len(out) >= cap:
                raise CapExceeded(f"more than {cap} perfect matchings")
            out.append(Matching(tuple(stack), n))
            return
        covered[v] = True
        for u in G.adj[v]:
            if not covered[u]:
                covered[u] = True
                stack.append((v, u))
                rec(v + 1)
                stack.pop()
                covered[u] = False
        covered[v] = False

    rec(0)
    return out


def max_disjoint_pm(G: Graph, cap: int = DEFAULT_CAP,
                    cancel: Callable[[], bool] | None = None) -> PackingResult:
    """Largest family of pairwise edge-disjoint perfect matchings of ``G``.

    ``cancel`` is polled once per search node; returning true aborts the search
    with :class:`Cancelled`.
    """
    pms = enumerate_perfect_matchings(G, cap)
    if not pms or G.n == 0:
        return PackingResult(0, [], len(pms), 0)
    eid = {e: i for i, e in enumerate(G.edges())}
    masks = [sum(1 << eid[e] for e in M.edges) for M in pms]
    half = G.n // 2
    incident = [sum(1 << eid[canon(v, u)] for u in G.adj[v]) for v in range(G.n)]

    def upper(used: int) -> tuple[int, int]:
        counts = [(incident[v] & used).bit_count() for v in range(G.n)]
        v = min(range(G.n), key=lambda x: counts[x])
        return min(counts[v], used.bit_count() // half), v

    # greedy lower bound
    best: list[int] = []
    taken = 0
    for i, m in enumerate(masks):
        if not m & taken:
            best.append(i)
            taken |= m
    nodes = 0
    chosen: list[int] = []

    def rec(avail: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if cancel is not None and cancel():
            raise Cancelled("oracle search cancelled")
        if len(chosen) > len(best):
            best = list(chosen)
        if not avail:
            return
        live = 0
        for i in avail:
            live |= masks[i]
        bound, v = upper(live)
        if len(chosen) + bound <= len(best):
            return
        # branch on the lowest edge at the tightest vertex: used by some member, or by none
        at_v = incident[v] & live
        edge_bit = at_v & -at_v
        with_e = [i for i in avail if masks[i] & edge_bit]
        without_e = [i for i in avail if not masks[i] & edge_bit]
        for i in with_e:
            chosen.append(i)
            rec([k for k in without_e if not masks[k] & masks[i]])
            chosen.pop()
        rec(without_e)

    rec(list(range(len(pms))))
    return PackingResult(len(best), [pms[i] for i in best], len(pms), nodes)
