"""Grow a stuck family of disjoint perfect matchings by one.

A family is *stuck* when the residual graph ``H`` (host minus every family
edge) has no perfect matching.  For a ``{D, D+1}``-host with ``D`` at the
degree threshold and fewer than ``ceil(n/4)`` members, the barrier ``S`` of
``H`` is forced into one of three shapes, and each shape gives an explicit
recipe for replacing one member ``M_0`` by two disjoint perfect matchings of
``H + M_0``:

* ``|S| >= 2``: ``H - S`` is ``|S|+1`` isolated vertices plus one large
  Hamiltonian-connected block; a Hamiltonian path through the block and two
  degree-budget bipartite matchings between ``S`` and the isolated vertices
  give the pair.
* ``|S| = 1``: three blocks; two edges of some member join the first two
  blocks into one even cycle, the hub vertex closes the third block into
  another, and the alternating classes of the two cycles give the pair.
* ``|S| = 0``: two blocks; re-route one member through a single crossing
  edge, and if that does not free a perfect matching, build a second
  re-routed matching whose complement must have one.

Every structural fact the construction relies on is checked at runtime and
reported as :class:`ClaimViolated` with a descriptive id.  Checks can be
switched off individually through ``checks``; a disabled check that would
have failed usually surfaces later as a different error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Collection, Sequence

from .bipartite import BipartiteGraph, budget_matching
from .errors import (
    ClaimViolated, InternalContradiction, PreconditionViolated,
    ResidualHasPerfectMatching, SearchExhausted,
)
from .graph import (
    Edge, Graph, canon, ceil_quarter, d_threshold, edge_boundary, edges_between,
    induced_subgraph, semiregular_base,
)
from .hamilton import dirac_cycle, even_cycle_matchings, ore_path, path_matching
from .matching import BergeWitness, Matching, berge_witness, perfect_matching

MIN_ORDER = 34
MAX_REDUCTIONS = 6


class Case(str, Enum):
    S_GE_2 = "s>=2"
    S_EQ_1 = "s=1"
    S_EQ_0 = "s=0"


# every runtime check, by id
ALL_CHECKS = frozenset({
    # |S| >= 2
    "barrier-size",              # s >= D - l
    "component-count",           # q = s + 2 (all cases)
    "singleton-components",      # all but the largest component are single vertices
    "large-component-order",     # c_q = n - 2s - 1 within [n/4 + 1, n/2 - 1]
    "large-component-boundary",  # |boundary_H(C_q)| <= s + l - D
    "large-component-degree",    # min degree inside C_q exceeds c_q / 2
    "boundary-member",           # some member has >= 3 edges leaving C_q
    "budget-condition",          # D - l - 1 >= (s+1)/2 + 1 and >= 2
    "member-edge-supply",        # enough member edges of each kind for the subcase
    # |S| <= 1
    "component-order",           # every component has order >= D - l - s + 1
    "family-nonempty",           # l >= 1
    "three-block-orders",        # order bounds on T_1, T_2, T_3
    "block-degree",              # every block is Hamiltonian-connected by degree
    "cross-pair-member",         # some member has >= 2 edges between T_1 and T_2
    "hub-edges",                 # the hub has >= 3 neighbours in T_3
    # |S| = 0
    "odd-crossing-member",       # some member has an odd number >= 3 of crossing edges
    "split-order",               # components after re-routing have order >= ceil(n/4) + 1
    "nested-components",         # the smaller new component lies inside the larger old one
    "disjoint-pair",             # e_1 and e_1' exist and are disjoint
    "split-matching",            # the second re-routed matching exists
    "final-contradiction",       # the second re-routing frees a perfect matching
})


@dataclass
class AugmentationContext:
    """A stuck state together with the barrier that explains it."""

    host: Graph
    family: list[Matching]
    H: Graph
    D: int
    witness: BergeWitness
    case: Case
    checks: frozenset[str]
    info: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.host.n

    @property
    def l(self) -> int:
        return len(self.family)


@dataclass
class AugmentResult:
    """The grown family and how it was obtained.

    ``added`` are the two matchings created by the final construction step and
    ``replaced`` the index (in the input family) of the member that was
    retired.  When the re-routing case hands over to another case, earlier
    members may also have been rewritten; ``rewrites`` counts those.
    """

    family: list[Matching]
    added: tuple[Matching, Matching]
    replaced: int
    case: Case
    subcase: str | None = None
    rewrites: int = 0
    steps: list[dict] = field(default_factory=list)

    @property
    def M_a(self) -> Matching:
        return self.added[0]

    @property
    def M_b(self) -> Matching:
        return self.added[1]


def residual(host: Graph, family: Sequence[Matching]) -> Graph:
    return host.without_edges(e for M in family for e in M.edges)


def _claim(ctx: AugmentationContext, cid: str, ok: bool, detail: str = "") -> None:
    if not ok and cid in ctx.checks:
        raise ClaimViolated(cid, detail)


def _require(cid: str, ok: bool, detail: str = "") -> None:
    # for facts the construction cannot proceed without, whatever the toggles
    if not ok:
        raise ClaimViolated(cid, detail)


def build_context(host: Graph, family: Sequence[Matching], D: int | None = None,
                  checks: Collection[str] | None = None, H: Graph | None = None) -> AugmentationContext:
    n = host.n
    if n % 2:
        raise PreconditionViolated("even-order", f"n={n}")
    if n < MIN_ORDER:
        raise PreconditionViolated("order>=34", f"n={n}")
    if D is None:
        D = semiregular_base(host)
        if D is None:
            raise PreconditionViolated("semiregular-host", "host degrees span more than two values")
    if any(d not in (D, D + 1) for d in host.degrees()):
        raise PreconditionViolated("semiregular-host", f"host is not a {{{D},{D + 1}}}-graph")
    if D < d_threshold(n):
        raise PreconditionViolated("degree-threshold", f"D={D} < {d_threshold(n)}")
    l = len(family)
    if l > ceil_quarter(n) - 1:
        raise PreconditionViolated("family-size", f"l={l} > ceil(n/4) - 1 = {ceil_quarter(n) - 1}")
    for i, M in enumerate(family):
        if not M.perfect or M.host_n != n:
            raise PreconditionViolated("perfect-members", f"member {i} is not perfect")
    if H is None:
        try:
            H = residual(host, family)
        except ValueError as exc:
            raise PreconditionViolated("disjoint-members", str(exc)) from None
    bad = [v for v, d in enumerate(H.degrees()) if d not in (D - l, D - l + 1)]
    if bad:
        raise PreconditionViolated(
            "residual-window", f"vertex {bad[0]} has residual degree {H.degree(bad[0])}, "
                               f"expected {D - l} or {D - l + 1}")
    if perfect_matching(H) is not None:
        raise ResidualHasPerfectMatching("residual graph has a perfect matching")
    w = berge_witness(H)
    case = Case.S_GE_2 if w.s >= 2 else (Case.S_EQ_1 if w.s == 1 else Case.S_EQ_0)
    return AugmentationContext(host, list(family), H, D, w, case,
                               ALL_CHECKS if checks is None else frozenset(checks))


def augment(host: Graph, family: Sequence[Matching], D: int | None = None,
            checks: Collection[str] | None = None) -> AugmentResult:
    """Replace one member of a stuck family by two, growing it by one.

    Raises :class:`ResidualHasPerfectMatching` when the family is not stuck,
    :class:`PreconditionViolated` for inputs outside the guarantee, and
    :class:`ClaimViolated` when a structural fact fails at runtime.
    """
    ctx = build_context(host, family, D, checks)
    return _dispatch(ctx, 0)


def _dispatch(ctx: AugmentationContext, depth: int) -> AugmentResult:
    if ctx.case is Case.S_GE_2:
        return augment_s_ge2(ctx)
    if ctx.case is Case.S_EQ_1:
        return augment_s_eq1(ctx)
    return _augment_s_eq0(ctx, depth)


def _replace(family: Sequence[Matching], j: int, pair: tuple[Matching, Matching]) -> list[Matching]:
    return [M for i, M in enumerate(family) if i != j] + list(pair)


def _validate_pair(ctx: AugmentationContext, j: int, A: Matching, B: Matching) -> None:
    allowed = set(ctx.H.edges()) | set(ctx.family[j].edges)
    for M in (A, B):
        if not M.perfect:
            raise InternalContradiction("constructed matching is not perfect")
        stray = [e for e in M.edges if e not in allowed]
        if stray:
            raise InternalContradiction(f"constructed matching uses {stray[0]} outside H + M_0")
    shared = A.edge_set() & B.edge_set()
    if shared:
        raise InternalContradiction(f"constructed matchings share edge {min(shared)}")


def _finish(ctx: AugmentationContext, j: int, A: Matching, B: Matching,
            subcase: str | None = None) -> AugmentResult:
    _validate_pair(ctx, j, A, B)
    return AugmentResult(_replace(ctx.family, j, (A, B)), (A, B), j, ctx.case, subcase,
                         steps=[{"case": ctx.case.value, "s": ctx.witness.s,
                                 "q": ctx.witness.q, "subcase": subcase}])


def _boundary_count(M: Matching, X: set[int]) -> int:
    return sum((u in X) != (v in X) for u, v in M.edges)


def _between(M: Matching, X: set[int], Y: set[int]) -> list[Edge]:
    return [e for e in M.edges if (e[0] in X and e[1] in Y) or (e[0] in Y and e[1] in X)]


def _end_in(e: Edge, X: set[int]) -> int:
    return e[0] if e[0] in X else e[1]


def _block_path(H: Graph, block: Sequence[int], u: int, v: int) -> list[int]:
    sub, index = induced_subgraph(H, block)
    labels = sorted(block)
    return [labels[x] for x in ore_path(sub, index[u], index[v], check=False)]


def _block_cycle(H: Graph, block: Sequence[int]) -> list[int]:
    sub, _ = induced_subgraph(H, block)
    labels = sorted(block)
    return [labels[x] for x in dirac_cycle(sub, check=False)]


def _union(n: int, *parts) -> Matching:
    edges: list[Edge] = []
    for p in parts:
        edges.extend(p.edges if isinstance(p, Matching) else p)
    return Matching(tuple(edges), n)


# -- |S| >= 2 ---------------------------------------------------------------

def augment_s_ge2(ctx: AugmentationContext) -> AugmentResult:
    w, H, n, D, l = ctx.witness, ctx.H, ctx.n, ctx.D, ctx.l
    s, q = w.s, w.q
    S = list(w.S)
    _claim(ctx, "barrier-size", s >= D - l >= ceil_quarter(n), f"s={s}, D-l={D - l}")
    _claim(ctx, "component-count", q == s + 2, f"q={q}, s={s}")
    small, Cq = w.comps[:-1], w.comps[-1]
    _require("singleton-components", all(len(c) == 1 for c in small),
             f"component orders {[len(c) for c in w.comps]}")
    cq = len(Cq)
    _claim(ctx, "large-component-order",
           cq == n - 2 * s - 1 and 4 * cq >= n + 4 and 2 * cq <= n - 2, f"c_q={cq}, s={s}")
    Cset = set(Cq)
    boundary = len(edge_boundary(H, Cq))
    _claim(ctx, "large-component-boundary", boundary <= s + l - D,
           f"|boundary|={boundary} > s+l-D={s + l - D}")
    sub, _ = induced_subgraph(H, Cq)
    _claim(ctx, "large-component-degree", 2 * sub.min_degree() > cq,
           f"min degree {sub.min_degree()} inside C_q of order {cq}")
    j = next((i for i, M in enumerate(ctx.family) if _boundary_count(M, Cset) >= 3), None)
    _require("boundary-member", j is not None, "no member has 3 edges leaving C_q")
    _claim(ctx, "budget-condition", 2 * (D - l - 1) >= s + 3 and D - l - 1 >= 2,
           f"D-l-1={D - l - 1}, s={s}")
    M0 = ctx.family[j]
    U = [c[0] for c in small]
    Sset, Uset = set(S), set(U)
    s_idx = {v: i for i, v in enumerate(S)}
    u_idx = {v: i for i, v in enumerate(U)}
    F = BipartiteGraph.from_edges(
        s, s + 1, ((s_idx[a], u_idx[b]) if a in Sset else (s_idx[b], u_idx[a])
                   for a, b in edges_between(H, S, U)))

    def lift(B: Matching) -> list[Edge]:
        return [canon(S[x], U[y - s]) for x, y in B.edges]

    def drop(FF: BipartiteGraph, B: Matching) -> BipartiteGraph:
        return FF.without(edges=[(x, y - s) for x, y in B.edges])

    UC = _between(M0, Uset, Cset)
    SC = _between(M0, Sset, Cset)
    UU = [e for e in M0.edges if e[0] in Uset and e[1] in Uset]
    ctx.info.update(U=U, C_q=Cq, M_0=j, subcase=min(len(UC), 2))

    if len(UC) >= 2:
        e1, e2 = UC[0], UC[1]
        P = _block_path(H, Cq, _end_in(e1, Cset), _end_in(e2, Cset))
        B1 = budget_matching(F, D - l, 0, (), {u_idx[_end_in(e1, Uset)]})
        B2 = budget_matching(drop(F, B1), D - l - 1, 0, (), {u_idx[_end_in(e2, Uset)]})
        A = _union(n, path_matching(P[1:], n), lift(B1), [e1])
        B = _union(n, path_matching(P[:-1], n), lift(B2), [e2])
        return _finish(ctx, j, A, B, "U-C>=2")

    if not UC:
        _require("member-edge-supply", len(SC) >= 2 and len(UU) >= 2,
                 f"e(S,C_q)={len(SC)}, e(U,U)={len(UU)}")
        e1, e2 = SC[0], SC[1]
        f1, f2 = UU[0], UU[1]
        P = _block_path(H, Cq, _end_in(e1, Cset), _end_in(e2, Cset))
        B1 = budget_matching(F, D - l, 1, {s_idx[_end_in(e1, Sset)]}, {u_idx[x] for x in f1})
        B2 = budget_matching(drop(F, B1), D - l - 1, 1, {s_idx[_end_in(e2, Sset)]},
                             {u_idx[x] for x in f2})
        A = _union(n, path_matching(P[1:], n), lift(B1), [e1, f1])
        B = _union(n, path_matching(P[:-1], n), lift(B2), [e2, f2])
        return _finish(ctx, j, A, B, "U-C=0")

    _require("member-edge-supply", len(SC) >= 1 and len(UU) >= 1,
             f"e(S,C_q)={len(SC)}, e(U,U)={len(UU)}")
    e1, e2, f = UC[0], SC[0], UU[0]
    P = _block_path(H, Cq, _end_in(e1, Cset), _end_in(e2, Cset))
    B1 = budget_matching(F, D - l, 0, (), {u_idx[_end_in(e1, Uset)]})
    B2 = budget_matching(drop(F, B1), D - l - 1, 1, {s_idx[_end_in(e2, Sset)]},
                         {u_idx[x] for x in f})
    A = _union(n, path_matching(P[1:], n), lift(B1), [e1])
    B = _union(n, path_matching(P[:-1], n), lift(B2), [e2, f])
    return _finish(ctx, j, A, B, "U-C=1")


# -- |S| = 1 ----------------------------------------------------------------

def _common_small_barrier_checks(ctx: AugmentationContext) -> None:
    w, s = ctx.witness, ctx.witness.s
    _claim(ctx, "component-count", w.q == s + 2, f"q={w.q}, s={s}")
    low = ctx.D - ctx.l - s + 1
    _claim(ctx, "component-order", all(len(c) >= low for c in w.comps),
           f"orders {[len(c) for c in w.comps]}, bound {low}")
    _claim(ctx, "family-nonempty", ctx.l >= 1, "empty family")


def augment_s_eq1(ctx: AugmentationContext) -> AugmentResult:
    w, H, n = ctx.witness, ctx.H, ctx.n
    _common_small_barrier_checks(ctx)
    _require("component-count", w.q == 3, f"q={w.q}")
    hub = w.S[0]
    nbrs = H.neighbors(hub)
    weight = [len(nbrs & set(c)) for c in w.comps]
    k3 = max(range(3), key=lambda i: (weight[i], -i))
    T1, T2 = (w.comps[i] for i in range(3) if i != k3)
    T3 = w.comps[k3]
    t1, t2, t3 = len(T1), len(T2), len(T3)
    cq = ceil_quarter(n)
    _claim(ctx, "three-block-orders",
           all(cq + 1 <= t and 2 * t <= n - 6 for t in (t1, t2)) and cq <= t3 and 2 * t3 <= n - 6,
           f"t=({t1},{t2},{t3})")
    for T in (T1, T2, T3):
        sub, _ = induced_subgraph(H, T)
        _claim(ctx, "block-degree", 2 * sub.min_degree() >= len(T) + 1,
               f"block of order {len(T)} has min degree {sub.min_degree()}")
    X1, X2 = set(T1), set(T2)
    j = next((i for i, M in enumerate(ctx.family) if len(_between(M, X1, X2)) >= 2), None)
    _require("cross-pair-member", j is not None, "every member has at most one T_1-T_2 edge")
    hub_nbrs = sorted(nbrs & set(T3))
    _claim(ctx, "hub-edges", len(hub_nbrs) >= 3, f"hub has {len(hub_nbrs)} neighbours in T_3")
    _require("hub-edges", len(hub_nbrs) >= 2, "hub needs two neighbours in T_3")
    ctx.info.update(T=(T1, T2, T3), hub=hub, M=j)

    e1, e2 = _between(ctx.family[j], X1, X2)[:2]
    p1 = _block_path(H, T1, _end_in(e1, X1), _end_in(e2, X1))
    p2 = _block_path(H, T2, _end_in(e1, X2), _end_in(e2, X2))
    h1 = p1 + p2[::-1]
    h2 = _block_path(H, T3, hub_nbrs[0], hub_nbrs[1]) + [hub]
    a1, b1 = even_cycle_matchings(h1, n)
    a2, b2 = even_cycle_matchings(h2, n)
    return _finish(ctx, j, _union(n, a1, a2), _union(n, b1, b2))


# -- |S| = 0 ----------------------------------------------------------------

def augment_s_eq0(ctx: AugmentationContext) -> AugmentResult:
    return _augment_s_eq0(ctx, 0)


def _reduce(ctx: AugmentationContext, j: int, replacement: Matching, H2: Graph,
            depth: int) -> AugmentResult:
    # the new residual has a non-empty barrier: continue from the rewritten family
    if depth >= MAX_REDUCTIONS:
        raise ClaimViolated("final-contradiction", "reduction depth exhausted")
    fam = list(ctx.family)
    fam[j] = replacement
    sub = build_context(ctx.host, fam, ctx.D, ctx.checks, H=H2)
    res = _dispatch(sub, depth + 1)
    res.rewrites += 1
    res.steps.insert(0, {"case": ctx.case.value, "s": ctx.witness.s, "q": ctx.witness.q,
                         "subcase": "reroute"})
    return res


def _two_blocks(w: BergeWitness) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # (smaller, larger) labellings; both orders when the orders tie
    a, b = w.comps
    return [(a, b), (b, a)] if len(a) == len(b) else [(a, b)]


def _augment_s_eq0(ctx: AugmentationContext, depth: int) -> AugmentResult:
    w = ctx.witness
    _common_small_barrier_checks(ctx)
    _require("component-count", w.q == 2, f"q={w.q}")
    last: ClaimViolated | None = None
    for C1, C2 in _two_blocks(w):
        X1, X2 = set(C1), set(C2)
        counts = [len(_between(M, X1, X2)) for M in ctx.family]
        even = [i for i, c in enumerate(counts) if c % 2 == 0]
        _require("odd-crossing-member", not even, f"member {even[:1]} crosses an even number of times")
        j = next((i for i, c in enumerate(counts) if c >= 3), None)
        _require("odd-crossing-member", j is not None, f"crossing counts {counts}")
        try:
            return _reroute(ctx, j, C1, C2, depth)
        except ClaimViolated as exc:
            last = exc
    assert last is not None
    raise last


def _reroute(ctx: AugmentationContext, j: int, C1: Sequence[int], C2: Sequence[int],
             depth: int) -> AugmentResult:
    w, H, n = ctx.witness, ctx.H, ctx.n
    X1, X2 = set(C1), set(C2)
    M0 = ctx.family[j]
    F = H.with_edges(M0.edges)
    k1, k2 = w.comps.index(tuple(C1)), w.comps.index(tuple(C2))
    ctx.info.update(C=(tuple(C1), tuple(C2)), M_0=j)
    last: ClaimViolated | None = None

    for e0 in _between(M0, X1, X2):
        M0p = _union(n, w.certs[k1][_end_in(e0, X1)], w.certs[k2][_end_in(e0, X2)], [e0])
        H1 = F.without_edges(M0p.edges)
        pm = perfect_matching(H1)
        if pm is not None:
            return _finish(ctx, j, M0p, pm, "reroute-once")
        w1 = berge_witness(H1)
        try:
            if w1.s > 0:
                return _reduce(ctx, j, M0p, H1, depth)
            return _second_reroute(ctx, j, F, C1, C2, e0, M0p, H1, w1, depth)
        except ClaimViolated as exc:
            last = exc
    assert last is not None
    raise last


def _second_reroute(ctx: AugmentationContext, j: int, F: Graph, C1: Sequence[int],
                    C2: Sequence[int], e0: Edge, M0p: Matching, H1: Graph,
                    w1: BergeWitness, depth: int) -> AugmentResult:
    H, n = ctx.H, ctx.n
    M0 = ctx.family[j]
    X1, X2 = set(C1), set(C2)
    cq = ceil_quarter(n)
    _require("component-count", w1.q == 2, f"q'={w1.q}")
    _claim(ctx, "split-order", all(len(c) >= cq + 1 for c in w1.comps),
           f"orders {[len(c) for c in w1.comps]}")
    pick = next(((a, b) for a, b in _two_blocks(w1) if set(a) <= X2), None)
    _require("nested-components", pick is not None,
             "the smaller re-routed component is not inside the larger original one")
    D1, D2 = pick
    Y1 = set(D1)
    V22 = sorted(X2 - Y1)
    Vset = set(V22)
    k1 = w1.comps.index(tuple(D1))
    kc1 = ctx.witness.comps.index(tuple(C1))
    certs1 = ctx.witness.certs[kc1]

    E1 = [e for e in M0.edges if e != e0 and ((e[0] in X1 and e[1] in Vset) or (e[1] in X1 and e[0] in Vset))]
    E1p = edges_between(H, D1, V22)
    pair = next(((a, b) for a in E1 for b in E1p if not set(a) & set(b)), None)
    _require("disjoint-pair", pair is not None, f"{len(E1)} candidates for e_1, {len(E1p)} for e_1'")
    e1, e1p = pair
    M11 = certs1[_end_in(e1, X1)]
    M11p = w1.certs[k1][_end_in(e1p, Y1)]

    cross0 = set(_between(M0, X1, X2))
    cross1 = set(_between(M0p, Y1, set(D2)))
    candidates: list[tuple[str, Matching]] = []
    v1, v1p = _end_in(e1, Vset), _end_in(e1p, Vset)

    # bi-critical branch: V_22 minus two vertices still has a perfect matching
    if 2 * len(V22) < n - 4:
        rest = [v for v in V22 if v not in (v1, v1p)]
        sub, _ = induced_subgraph(H, rest)
        pm = perfect_matching(sub)
        if pm is not None:
            M12 = [(rest[a], rest[b]) for a, b in pm.edges]
            candidates.append(("bicritical", _union(n, M11, M11p, M12, [e1, e1p])))

    cycle: list[int] | None
    try:
        cycle = _block_cycle(H, V22) if len(V22) >= 3 else None
    except SearchExhausted:
        cycle = None
    if cycle is not None:
        # a member edge between the two small sides
        for e2 in _between(M0, X1, Y1):
            M21 = certs1[_end_in(e2, X1)]
            M21p = w1.certs[k1][_end_in(e2, Y1)]
            M22 = even_cycle_matchings(cycle, n)[0]
            candidates.append(("member-bridge", _union(n, M21, M21p, M22, [e2])))
        # a member edge into V_22 that splits the cycle into two even paths
        pos = {v: i for i, v in enumerate(cycle)}
        L = len(cycle)
        for e3 in sorted(cross0 - {e0}):
            if e3[0] not in Vset and e3[1] not in Vset:
                continue
            x = _end_in(e3, Vset)
            gap = (pos[x] - pos[v1p]) % L
            if gap % 2 == 0:
                continue
            seg1 = [cycle[(pos[v1p] + t) % L] for t in range(1, gap)]
            seg2 = [cycle[(pos[x] + t) % L] for t in range(1, L - gap)]
            M31 = certs1[_end_in(e3, X1)]
            candidates.append(("cycle-split", _union(
                n, M31, M11p, path_matching(seg1, n) if seg1 else [],
                path_matching(seg2, n) if seg2 else [], [e3, e1p])))

    _require("split-matching", bool(candidates), "no second re-routed matching found")
    last: ClaimViolated | None = None
    for tag, M2 in candidates:
        if not (cross0 - M2.edge_set()) or not (cross1 - M2.edge_set()):
            continue
        H2 = F.without_edges(M2.edges)
        pm = perfect_matching(H2)
        if pm is not None:
            return _finish(ctx, j, M2, pm, f"reroute-{tag}")
        w2 = berge_witness(H2)
        if w2.s > 0:
            try:
                return _reduce(ctx, j, M2, H2, depth)
            except ClaimViolated as exc:
                last = exc
    if last is not None:
        raise last
    raise ClaimViolated("final-contradiction",
                        f"no candidate among {[t for t, _ in candidates]} freed a perfect matching")
