"""Hand-built stuck states for exercising the augmentation step.

Natural peeling runs essentially never strand, so these states are made
backwards: pick a residual ``H`` without a perfect matching whose degrees sit
in the window ``{D-l, D-l+1}``, then plant ``l`` disjoint perfect matchings in
the complement of ``H``.  The host is ``H`` plus the planted family, a
``{D, D+1}``-graph by construction.
"""

from __future__ import annotations

import random
from itertools import combinations

from matchpack.graph import Graph, build_graph, canon
from matchpack.matching import Matching, perfect_matching

N = 34
D = 17


def complement_edges(H: Graph, forbidden=()) -> list[tuple[int, int]]:
    bad = {canon(*e) for e in forbidden}
    return [(u, v) for u, v in combinations(range(H.n), 2)
            if not H.has_edge(u, v) and (u, v) not in bad]


def plant(H: Graph, l: int, seed: int, fixed: list[Matching] = (), forbidden=()) -> list[Matching]:
    """``l`` disjoint perfect matchings of the complement of ``H``, ``fixed`` first."""
    rng = random.Random(seed)
    fixed = list(fixed)
    used = {e for M in fixed for e in M.edges}
    base = [e for e in complement_edges(H, forbidden) if e not in used]
    for _ in range(500):
        K = build_graph(H.n, base)
        fam = list(fixed)
        while len(fam) < l:
            perm = list(range(H.n))
            rng.shuffle(perm)
            M = perfect_matching(K, perm)
            if M is None:
                break
            fam.append(M)
            K = K.without_edges(M.edges)
        if len(fam) == l:
            return fam
    raise RuntimeError("could not plant the family")


def host_of(H: Graph, family: list[Matching]) -> Graph:
    return H.with_edges(e for M in family for e in M.edges)


def _clique_minus(vertices, removed) -> list[tuple[int, int]]:
    gone = {canon(*e) for e in removed}
    return [canon(u, v) for u, v in combinations(vertices, 2) if canon(u, v) not in gone]


def barrier_residual(s: int) -> Graph:
    """``K_{s,s+1}`` beside one dense odd block, window ``{D-l, D-l+1}`` with ``l = D-s``.

    ``s = 9`` leaves a 15-vertex block, ``s = 10`` a 13-vertex one.
    """
    l = D - s
    lo = D - l
    S = list(range(s))
    U = list(range(s, 2 * s + 1))
    X = list(range(2 * s + 1, N))
    edges = [(a, b) for a in S for b in U]
    k = len(X)
    # drop a circulant band from K_k so block degrees land in {lo, lo+1}
    drop = k - 1 - lo if (k - 1 - lo) % 2 == 0 else k - 2 - lo
    removed = {canon(X[i], X[(i + t) % k]) for i in range(k) for t in range(1, drop // 2 + 1)}
    edges += _clique_minus(X, removed)
    return build_graph(N, edges)


def hub_residual() -> Graph:
    """A hub vertex beside three 11-vertex blocks, window ``{9, 10}``.

    Each block is ``K_11`` minus a near-perfect matching; the hub sees 3, 3
    and 4 vertices of the blocks.
    """
    hub = 0
    edges = []
    blocks = [list(range(1 + 11 * i, 12 + 11 * i)) for i in range(3)]
    for B in blocks:
        edges += _clique_minus(B, [(B[i], B[i + 1]) for i in range(0, 10, 2)])
    for B, k in zip(blocks, (3, 3, 4)):
        edges += [(hub, B[i]) for i in range(k)]
    return build_graph(N, edges)


def two_block_residual() -> Graph:
    """Two disjoint 10-regular circulants on 17 vertices."""
    edges = []
    for off in (0, 17):
        for i in range(17):
            for t in range(1, 6):
                edges.append(canon(off + i, off + (i + t) % 17))
    return build_graph(N, sorted(set(edges)))


# -- the re-routing state where the first re-route gets stuck ----------------

C1 = list(range(0, 11))
C1P = list(range(11, 22))
V22 = list(range(22, 34))
CROSS = [(12, 30), (14, 32)]


def nested_residual() -> Graph:
    edges = _clique_minus(C1, [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10)])
    edges += _clique_minus(C1P, [(12, 13), (14, 15), (16, 17), (18, 19), (20, 21)])
    edges += _clique_minus(V22, [(V22[i], V22[(i + 1) % 12]) for i in range(12)])
    edges += CROSS
    return build_graph(N, edges)


def nested_first_member() -> Matching:
    edges = [(12, 13), (14, 15), (16, 17), (18, 19), (20, 21), (0, 11), (1, 22), (2, 23),
             (3, 4), (5, 6), (7, 8), (9, 10)]
    edges += [(V22[i], V22[i + 1]) for i in range(2, 12, 2)]
    return Matching(tuple(edges), N)


def nested_certificate() -> Matching:
    """Perfect matching of the second block minus vertex 11 through both cross edges."""
    inner = [(13, 15), (16, 18), (17, 20), (19, 21)]
    rest = [v for v in V22 if v not in (30, 32)]
    # K_12 minus the cycle: pair vertices two apart
    pairs = [(rest[i], rest[i + 5]) for i in range(5)]
    return Matching(tuple(CROSS + inner + pairs), N)


# -- the tight re-routing state on 40 vertices ------------------------------
# |V_22| = n/2 - 2, so the bi-critical branch is skipped and the member edge
# between the two small blocks is used instead.

N40, D40, L40 = 40, 19, 9
T_C1 = list(range(0, 11))
T_C1P = list(range(11, 22))
T_V22 = list(range(22, 40))
T_CROSS = [(12 + i, 22 + i) for i in range(10)]


def tight_residual() -> Graph:
    edges = _clique_minus(T_C1, [])
    edges += _clique_minus(T_C1P, [(12, 13), (14, 15), (16, 17), (18, 19), (20, 21)])
    k = len(T_V22)
    band = {canon(T_V22[i], T_V22[(i + t) % k]) for i in range(k) for t in (1, 2, 3, 9)}
    edges += _clique_minus(T_V22, band)
    edges += T_CROSS
    return build_graph(N40, edges)


def tight_first_member() -> Matching:
    edges = [(0, 11)] + [(k, 29 + k) for k in range(1, 11)]
    edges += [(12, 13), (14, 15), (16, 17), (18, 19), (20, 21)]
    edges += [(22, 23), (24, 25), (26, 27), (28, 29)]
    return Matching(tuple(edges), N40)


def tight_certificate() -> Matching:
    return Matching(tuple(T_CROSS + [(32, 36), (33, 37), (34, 38), (35, 39)]), N40)
