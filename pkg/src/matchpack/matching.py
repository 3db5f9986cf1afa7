"""Maximum matchings in general graphs and the structure around them.

The matcher is Edmonds' blossom algorithm in its breadth-first, base-array form
(O(n^3)).  On top of it sit the Berge witness extraction, factor-critical
certification and bi-criticality checks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import HasPerfectMatching, OddOrder, ParseError
from .graph import Edge, Graph, canon, components, induced_subgraph


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges of a host graph on ``host_n`` vertices."""

    edges: tuple[Edge, ...]
    host_n: int

    def __post_init__(self):
        edges = tuple(sorted(canon(u, v) for u, v in self.edges))
        covered: set[int] = set()
        for u, v in edges:
            if u == v or u in covered or v in covered:
                raise ValueError(f"edges are not vertex-disjoint at ({u},{v})")
            if not (0 <= u < self.host_n and 0 <= v < self.host_n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.host_n}")
            covered.update((u, v))
        object.__setattr__(self, "edges", edges)

    @property
    def perfect(self) -> bool:
        return 2 * len(self.edges) == self.host_n

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, e: object) -> bool:
        if not isinstance(e, tuple) or len(e) != 2:
            return False
        return canon(*e) in set(self.edges)

    def vertices(self) -> set[int]:
        return {x for e in self.edges for x in e}

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)


def matching_from_mates(mate: Sequence[int], host_n: int | None = None) -> Matching:
    n = len(mate) if host_n is None else host_n
    return Matching(tuple((v, w) for v, w in enumerate(mate) if w > v), n)


def is_matching_of(G: Graph, M: Matching) -> bool:
    return M.host_n == G.n and all(G.has_edge(u, v) for u, v in M.edges)


# -- blossom algorithm -------------------------------------------------------

def _try_augment(root: int, adj: Sequence[Sequence[int]], match: list[int]) -> bool:
    """Grow an alternating tree from exposed ``root``; augment ``match`` if possible."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _max_matching_mates(adj: Sequence[Sequence[int]], match: list[int] | None = None) -> list[int]:
    n = len(adj)
    if match is None:
        match = [-1] * n
        for v in range(n):
            if match[v] == -1:
                for u in adj[v]:
                    if match[u] == -1:
                        match[u], match[v] = v, u
                        break
    for v in range(n):
        if match[v] == -1:
            _try_augment(v, adj, match)
    return match


def maximum_matching(G: Graph, order: Sequence[int] | None = None) -> Matching:
    """A maximum-cardinality matching of ``G``.

    The result is a deterministic function of ``G`` and ``order``.  ``order``
    is an optional permutation of the vertices; the search runs on the graph
    relabelled by it, which is how callers obtain different maximum matchings.
    """
    if order is None:
        return matching_from_mates(_max_matching_mates(G.adj), G.n)
    perm = list(order)
    H = G.relabel(perm)
    mates = _max_matching_mates(H.adj)
    inv = [0] * G.n
    for v, p in enumerate(perm):
        inv[p] = v
    return Matching(tuple((inv[a], inv[b]) for a, b in enumerate(mates) if b > a), G.n)


def matching_number(G: Graph) -> int:
    return len(maximum_matching(G))


def perfect_matching(G: Graph, order: Sequence[int] | None = None) -> Matching | None:
    """A perfect matching of ``G`` or ``None`` when none exists."""
    if G.n % 2:
        return None
    M = maximum_matching(G, order)
    return M if M.perfect else None


# -- Berge witness -----------------------------------------------------------

@dataclass
class BergeWitness:
    """A barrier ``S`` of a graph without perfect matchings.

    ``comps`` are the components of ``G - S`` ordered by size, all odd and
    factor-critical; ``certs[i][v]`` is a perfect matching of ``comps[i] - v``
    expressed in host vertex labels.
    """

    S: tuple[int, ...]
    comps: list[tuple[int, ...]]
    certs: list[dict[int, Matching]] = field(repr=False)

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def q(self) -> int:
        return len(self.comps)


def gallai_edmonds(G: Graph) -> tuple[set[int], set[int], set[int]]:
    """The Gallai-Edmonds partition ``(D, A, C)``.

    ``D`` holds the vertices missed by some maximum matching; ``v`` belongs to
    it iff removing ``v`` does not lower the matching number.
    """
    mates = _max_matching_mates(G.adj)
    D = set()
    for v in range(G.n):
        w = mates[v]
        if w == -1:
            D.add(v)
            continue
        adj = [[u for u in a if u != v] if x != v else [] for x, a in enumerate(G.adj)]
        trial = list(mates)
        trial[v] = trial[w] = -1
        if _try_augment(w, adj, trial):
            D.add(v)
    A = {u for v in D for u in G.adj[v] if u not in D}
    C = set(range(G.n)) - D - A
    return D, A, C


def _fc_scan(G: Graph) -> tuple[dict[int, Matching] | None, int | None]:
    """Certificates of factor-criticality, or the first vertex that fails."""
    if G.n % 2 == 0:
        return None, None
    certs = {}
    for v in range(G.n):
        keep = [u for u in range(G.n) if u != v]
        sub, index = induced_subgraph(G, keep)
        M = perfect_matching(sub)
        if M is None:
            return None, v
        certs[v] = Matching(tuple((keep[a], keep[b]) for a, b in M.edges), G.n)
    return certs, None


def factor_critical_certificates(G: Graph) -> dict[int, Matching] | None:
    """Per-vertex perfect matchings of ``G - v`` if ``G`` is factor-critical."""
    return _fc_scan(G)[0]


def is_factor_critical(G: Graph) -> bool:
    return factor_critical_certificates(G) is not None


def _lift(M: Matching, labels: Sequence[int], host_n: int) -> Matching:
    return Matching(tuple((labels[a], labels[b]) for a, b in M.edges), host_n)


def _maximal_barrier(G: Graph) -> tuple[set[int], list[tuple[int, ...]], list[dict[int, Matching]]]:
    # Gallai-Edmonds A(G) is a barrier; it is grown until every component of
    # G - S is odd and factor-critical, which happens at any maximal barrier.
    _, S, _ = gallai_edmonds(G)
    while True:
        grown = False
        comps, certs = [], []
        for comp in components(G, set(range(G.n)) - S):
            if len(comp) % 2 == 0:
                S.add(comp[0])
                grown = True
                break
            sub, _ = induced_subgraph(G, comp)
            local, bad = _fc_scan(sub)
            if local is None:
                v = comp[bad]
                rest = [u for u in comp if u != v]
                sub2, _ = induced_subgraph(G, rest)
                inner, _, _ = _maximal_barrier(sub2)
                S.add(v)
                S.update(rest[i] for i in inner)
                grown = True
                break
            comps.append(comp)
            certs.append({comp[i]: _lift(M, comp, G.n) for i, M in local.items()})
        if not grown:
            order = sorted(range(len(comps)), key=lambda i: (len(comps[i]), comps[i]))
            return S, [comps[i] for i in order], [certs[i] for i in order]


def berge_witness(G: Graph) -> BergeWitness:
    """A barrier whose removal leaves only odd factor-critical components."""
    if G.n % 2:
        raise OddOrder(f"graph has odd order {G.n}")
    if perfect_matching(G) is not None:
        raise HasPerfectMatching("graph has a perfect matching")
    S, comps, certs = _maximal_barrier(G)
    return BergeWitness(tuple(sorted(S)), comps, certs)


def witness_problems(G: Graph, w: BergeWitness) -> list[str]:
    """Every violated witness invariant, checked from scratch."""
    problems = []
    S = set(w.S)
    rest = set(range(G.n)) - S
    actual = sorted(components(G, rest))
    if sorted(w.comps) != actual:
        problems.append("comps are not the components of G - S")
    if any(len(c) % 2 == 0 for c in w.comps):
        problems.append("even component")
    if w.q < w.s + 2:
        problems.append(f"q={w.q} < s+2={w.s + 2}")
    if (w.q - w.s) % 2:
        problems.append("q and s differ in parity")
    sizes = [len(c) for c in w.comps]
    if sizes != sorted(sizes):
        problems.append("comps not ordered by size")
    for comp, cert in zip(w.comps, w.certs):
        cs = set(comp)
        if set(cert) != cs:
            problems.append(f"certificate map incomplete for component {comp[0]}")
            continue
        for v, M in cert.items():
            if not is_matching_of(G, M) or M.vertices() != cs - {v}:
                problems.append(f"bad certificate for vertex {v}")
    return problems


def is_bicritical(G: Graph) -> bool:
    """True iff ``G - u - v`` has a perfect matching for all distinct ``u, v``."""
    if G.n % 2 or G.n < 2:
        return False
    for u, v in combinations(range(G.n), 2):
        keep = [x for x in range(G.n) if x != u and x != v]
        sub, _ = induced_subgraph(G, keep)
        if perfect_matching(sub) is None:
            return False
    return True


# -- text format -------------------------------------------------------------

def format_matching(M: Matching | Iterable[Edge]) -> str:
    return "".join(f"{u}-{v}\n" for u, v in sorted(canon(*e) for e in M))


def format_family(family: Iterable[Matching | Iterable[Edge]]) -> str:
    return "--\n".join(format_matching(M) for M in family)


def parse_family(text: str, host_n: int) -> list[Matching]:
    """Parse the ``u-v`` per line, ``--``-separated family format."""
    blocks: list[list[Edge]] = [[]]
    seen_any = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        seen_any = True
        if line == "--":
            blocks.append([])
            continue
        try:
            a, b = line.split("-")
            blocks[-1].append((int(a), int(b)))
        except ValueError:
            raise ParseError(f"malformed matching line {line!r}") from None
    if not seen_any:
        return []
    out = []
    for i, block in enumerate(blocks):
        try:
            out.append(Matching(tuple(block), host_n))
        except ValueError as exc:
            raise ParseError(f"matching {i}: {exc}") from None
    return out
