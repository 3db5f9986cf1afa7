"""Small independent checkers shared by the test modules."""

import random
from itertools import combinations

from matchpack.graph import Graph, build_graph, canon


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def dense_graph(n: int, min_deg: int, rng: random.Random) -> Graph:
    """Random graph with every degree at least ``min_deg``."""
    while True:
        p = rng.uniform(min_deg / max(n - 1, 1), 1.0)
        G = random_graph(n, p, rng)
        if G.n == 0 or G.min_degree() >= min_deg:
            return G


def is_path_of(G: Graph, path, vertices=None) -> bool:
    want = set(range(G.n)) if vertices is None else set(vertices)
    return (len(path) == len(set(path)) and set(path) == want
            and all(G.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)))


def is_cycle_of(G: Graph, cyc, vertices=None) -> bool:
    return is_path_of(G, cyc, vertices) and G.has_edge(cyc[-1], cyc[0])


def brute_matching_number(G: Graph) -> int:
    """Maximum matching by exhaustive search over the lowest free vertex."""
    best = 0

    def rec(free: frozenset, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + len(free) // 2 <= best or not free:
            return
        v = min(free)
        rest = free - {v}
        for u in G.adj[v]:
            if u in rest:
                rec(rest - {u}, size + 1)
        rec(rest, size)

    rec(frozenset(range(G.n)), 0)
    return best


def edge_set(M) -> set:
    return {canon(*e) for e in M}
