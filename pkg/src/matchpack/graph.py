"""Simple undirected graphs on vertices ``0..n-1`` and the text format for them.

Vertex sets are plain Python sets or sorted tuples of ints; edge sets are sorted
lists of ``(u, v)`` pairs with ``u < v``.  Every function that returns a
collection returns it in sorted order so outputs are reproducible byte for byte.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import DuplicateEdge, IndexOutOfRange, LoopEdge, OddOrder, ParseError

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with sorted adjacency tuples.

    Build instances through :func:`build_graph`; the constructor trusts its
    input and performs no validation.
    """

    __slots__ = ("n", "adj", "m", "_sets")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._sets: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in self.adj)
        self.m = sum(len(a) for a in self.adj) // 2

    @classmethod
    def _from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def without_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Return a copy with ``edges`` removed; every edge must be present."""
        adj = [set(a) for a in self.adj]
        for u, v in edges:
            if v not in adj[u]:
                raise ValueError(f"edge ({u},{v}) not in graph")
            adj[u].discard(v)
            adj[v].discard(u)
        return Graph(self.n, adj)

    def with_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Return a copy with ``edges`` added; none may already be present."""
        adj = [set(a) for a in self.adj]
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if v in adj[u]:
                raise DuplicateEdge(f"edge ({u},{v}) already present")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(self.n, adj)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            adj[perm[v]] = [perm[u] for u in self.adj[v]]
        return Graph(self.n, adj)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build the graph.

    Duplicates (in either orientation) are rejected instead of merged.
    """
    if n < 0:
        raise IndexOutOfRange(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        e = canon(u, v)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
    return Graph._from_edges(n, seen)


def complete_graph(n: int) -> Graph:
    return Graph(n, [[u for u in range(n) if u != v] for v in range(n)])


def d_threshold(n: int) -> int:
    """Degree threshold ``2*ceil(n/4) - 1`` for even order ``n``."""
    if n % 2 or n < 2:
        raise OddOrder(f"order must be even and >= 2, got {n}")
    return 2 * (-(-n // 4)) - 1


def ceil_quarter(n: int) -> int:
    return -(-n // 4)


def is_semiregular(G: Graph, k: int) -> bool:
    """True iff every vertex degree is ``k`` or ``k+1``."""
    return all(d in (k, k + 1) for d in G.degrees())


def semiregular_base(G: Graph) -> int | None:
    """The ``k`` with ``G`` a ``{k, k+1}``-graph taking ``k`` = minimum degree."""
    if G.n == 0:
        return None
    lo, hi = G.min_degree(), G.max_degree()
    return lo if hi - lo <= 1 else None


def _check_vertices(G: Graph, X: Iterable[int]) -> set[int]:
    xs = set(X)
    for v in xs:
        if not 0 <= v < G.n:
            raise IndexOutOfRange(f"vertex {v} out of range for n={G.n}")
    return xs


def edges_between(G: Graph, X: Iterable[int], Y: Iterable[int]) -> list[Edge]:
    """Edges ``uv`` with ``u in X, v in Y`` or ``u in Y, v in X``."""
    xs, ys = _check_vertices(G, X), _check_vertices(G, Y)
    out = set()
    for u in xs:
        for v in G.adj[u]:
            if v in ys:
                out.add(canon(u, v))
    return sorted(out)


def edge_boundary(G: Graph, X: Iterable[int]) -> list[Edge]:
    xs = _check_vertices(G, X)
    return sorted(canon(u, v) for u in xs for v in G.adj[u] if v not in xs)


def components(G: Graph, vertices: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Connected components, optionally of the subgraph induced by ``vertices``."""
    allowed = set(range(G.n)) if vertices is None else _check_vertices(G, vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if u in allowed and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def induced_subgraph(G: Graph, X: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G[X]`` relabelled to ``0..|X|-1`` in increasing order, plus the old->new map."""
    xs = sorted(_check_vertices(G, X))
    index = {v: i for i, v in enumerate(xs)}
    adj = [[index[u] for u in G.adj[v] if u in index] for v in xs]
    return Graph(len(xs), adj), index


# -- text format -------------------------------------------------------------

def format_graph(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line)
    if not rows:
        raise ParseError("empty graph file")
    try:
        n, m = (int(t) for t in rows[0].split())
        edges = []
        for line in rows[1:]:
            u, v = (int(t) for t in line.split())
            edges.append((u, v))
    except ValueError as exc:
        raise ParseError(f"malformed graph file: {exc}") from None
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(G: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph(G))
