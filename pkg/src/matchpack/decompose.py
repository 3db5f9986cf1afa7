"""Extract many pairwise edge-disjoint perfect matchings from a graph.

Three strategies are offered:

``peel``
    Repeatedly remove a perfect matching of the residual graph, restarting with
    a reshuffled vertex order when the residual runs out of perfect matchings.
``proof``
    For a ``{D, D+1}``-graph on ``n >= 34`` vertices with ``D`` at or above the
    degree threshold: first peel ``D - D_n`` matchings while the residual still
    has minimum degree at least ``n/2`` (so one always exists), then peel
    towards ``ceil(n/4)`` more, and whenever the residual gets stuck hand the
    state to :func:`~matchpack.augment.augment`, which trades one member for two.
``exact``
    Ask the oracle for a maximum family (small graphs only).
"""

from __future__ import annotations

import json
import os
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Collection, Iterable, Sequence

from .augment import MIN_ORDER, augment, residual
from .errors import (
    BudgetExhausted, ClaimViolated, InternalContradiction, OddOrder,
    PreconditionViolated, SearchExhausted, TargetUnreachable,
)
from .graph import Edge, Graph, canon, ceil_quarter, d_threshold, semiregular_base
from .hamilton import dirac_cycle, even_cycle_matchings
from .matching import Matching, format_family, perfect_matching
from .oracle import max_disjoint_pm

STRATEGIES = ("peel", "proof", "exact")
DEFAULT_RESTARTS = 50
EXACT_LIMIT = 16


@dataclass
class MatchingFamily:
    host: Graph
    matchings: list[Matching]

    @property
    def l(self) -> int:
        return len(self.matchings)

    def __len__(self) -> int:
        return len(self.matchings)

    def __iter__(self):
        return iter(self.matchings)


@dataclass(frozen=True)
class Verification:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_family(G: Graph, family: MatchingFamily | Iterable[Iterable[Edge]]) -> Verification:
    """Check that every member is a perfect matching of ``G`` and no edge repeats.

    Members may be :class:`Matching` objects or raw edge lists; the first
    violation found is reported.
    """
    members = family.matchings if isinstance(family, MatchingFamily) else family
    owner: dict[Edge, int] = {}
    for i, M in enumerate(members):
        edges = M.edges if isinstance(M, Matching) else [tuple(e) for e in M]
        seen: set[int] = set()
        for u, v in edges:
            if not (0 <= u < G.n and 0 <= v < G.n) or u == v or not G.has_edge(u, v):
                return Verification(False, f"edge ({u},{v}) of matching {i} is not an edge of host")
            for x in (u, v):
                if x in seen:
                    return Verification(False, f"vertex {x} covered twice in matching {i}")
                seen.add(x)
        if len(seen) != G.n:
            missing = min(set(range(G.n)) - seen)
            return Verification(False, f"matching {i} is not perfect: vertex {missing} uncovered")
        for u, v in edges:
            e = canon(u, v)
            if e in owner:
                return Verification(False, f"edge ({e[0]},{e[1]}) reused in matchings {owner[e]},{i}")
            owner[e] = i
    return Verification(True)


@dataclass
class DecompositionResult:
    family: MatchingFamily
    target: int | None
    achieved: int
    strategy: str
    seed: int
    trace: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    augment_calls: int = 0
    case_histogram: Counter = field(default_factory=Counter)
    claim_violations: int = 0

    def trace_lines(self, timing: bool = True) -> str:
        rows = self.trace if timing else [{k: v for k, v in r.items() if k != "elapsed"} for r in self.trace]
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)

    def family_text(self) -> str:
        return format_family(self.family.matchings)


class _Run:
    """Bookkeeping shared by the strategies of one decompose call."""

    def __init__(self, G: Graph, strategy: str, seed: int, target: int | None):
        self.G = G
        self.t0 = time.perf_counter()
        self.result = DecompositionResult(MatchingFamily(G, []), target, 0, strategy, seed)

    def log(self, kind: str, **fields) -> None:
        rec = {"kind": kind, **fields, "elapsed": round(time.perf_counter() - self.t0, 6)}
        self.result.trace.append(rec)

    def offer(self, family: Sequence[Matching]) -> None:
        if len(family) > self.result.achieved:
            self.result.family = MatchingFamily(self.G, list(family))
            self.result.achieved = len(family)

    def done(self) -> DecompositionResult:
        self.result.elapsed = time.perf_counter() - self.t0
        return self.result


def _order(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def _peel(H: Graph, rng: random.Random, limit: int | None) -> tuple[list[Matching], Graph]:
    fam: list[Matching] = []
    while limit is None or len(fam) < limit:
        M = perfect_matching(H, _order(rng, H.n))
        if M is None:
            break
        fam.append(M)
        H = H.without_edges(M.edges)
    return fam, H


def _write_repro(repro_dir: str | os.PathLike | None, run: _Run, host: Graph,
                 family: Sequence[Matching], exc: Exception, attempt: int) -> str | None:
    if repro_dir is None:
        return None
    os.makedirs(repro_dir, exist_ok=True)
    path = os.path.join(os.fspath(repro_dir),
                        f"stuck-n{host.n}-seed{run.result.seed}-attempt{attempt}.json")
    payload = {
        "n": host.n,
        "host_edges": host.edges(),
        "family": [list(M.edges) for M in family],
        "error": type(exc).__name__,
        "claim": getattr(exc, "claim", None),
        "detail": str(exc),
    }
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        json.dump(payload, fh, sort_keys=True)
        fh.write("\n")
    return path


def decompose(G: Graph, target: int | None = None, strategy: str = "proof", seed: int = 0,
              restarts: int = DEFAULT_RESTARTS, via_hamilton: bool = False,
              checks: Collection[str] | None = None, repro_dir: str | os.PathLike | None = None,
              exact_limit: int = EXACT_LIMIT,
              cancel: Callable[[], bool] | None = None) -> DecompositionResult:
    """Find pairwise edge-disjoint perfect matchings of ``G``.

    ``target=None`` means the strategy's natural goal: ``ceil((D+1)/2)`` for
    ``proof``, the maximum for ``exact`` and "until stuck" for ``peel``.  The
    result is a deterministic function of the arguments apart from timing.
    Raises :class:`BudgetExhausted` (``peel``/``proof``) or
    :class:`TargetUnreachable` (``exact``) with the best result attached when
    the target is not met.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if G.n % 2:
        raise OddOrder(f"graph has odd order {G.n}")
    run = _Run(G, strategy, seed, target)
    if strategy == "exact":
        return _exact(run, target, cancel)
    if strategy == "peel":
        return _peel_strategy(run, target, restarts, seed, exact_limit=None)
    return _proof(run, target, seed, restarts, via_hamilton, checks, repro_dir, exact_limit, cancel)


def _exact(run: _Run, target: int | None, cancel) -> DecompositionResult:
    res = max_disjoint_pm(run.G, cancel=cancel)
    run.offer(res.witness)
    run.log("exact", achieved=res.max_disjoint, pm_count=res.pm_count, nodes=res.nodes_explored)
    out = run.done()
    if target is not None and res.max_disjoint < target:
        raise TargetUnreachable(f"maximum is {res.max_disjoint} < target {target}", out)
    return out


def _peel_strategy(run: _Run, target: int | None, restarts: int, seed: int,
                   exact_limit: int | None) -> DecompositionResult:
    for attempt in range(restarts + 1):
        rng = random.Random(f"{seed}:{attempt}")
        fam, _ = _peel(run.G, rng, target)
        run.log("peel", attempt=attempt, l=len(fam))
        run.offer(fam)
        if target is None or len(fam) >= target:
            return run.done()
        if attempt < restarts:
            run.log("restart", attempt=attempt + 1, reason="stuck")
    return _fallback(run, target, exact_limit, None)


def _fallback(run: _Run, target: int | None, exact_limit: int | None, cancel) -> DecompositionResult:
    if exact_limit is not None and run.G.n <= exact_limit:
        res = max_disjoint_pm(run.G, cancel=cancel)
        run.offer(res.witness)
        run.log("exact-fallback", achieved=res.max_disjoint)
        if target is None or res.max_disjoint >= target:
            return run.done()
        out = run.done()
        raise TargetUnreachable(f"maximum is {res.max_disjoint} < target {target}", out)
    out = run.done()
    raise BudgetExhausted(f"achieved {out.achieved} < target {target}", out)


def _proof(run: _Run, target: int | None, seed: int, restarts: int, via_hamilton: bool,
           checks, repro_dir, exact_limit: int, cancel) -> DecompositionResult:
    G, n = run.G, run.G.n
    D = semiregular_base(G)
    if D is None:
        raise PreconditionViolated("semiregular-host", "degrees span more than two values")
    if target is None:
        target = -(-(D + 1) // 2)
        run.result.target = target
    Dn = d_threshold(n) if n >= 2 else 0
    if n < MIN_ORDER or D < Dn:
        # outside the guarantee: plain peeling, then the exact search if small
        return _peel_strategy(run, target, restarts, seed, exact_limit)

    need = ceil_quarter(n)
    for attempt in range(restarts + 1):
        rng = random.Random(f"{seed}:{attempt}")
        fixed: list[Matching] = []
        H = G
        for _ in range(D - Dn):
            if via_hamilton:
                M = even_cycle_matchings(dirac_cycle(H), n)[0]
            else:
                M = perfect_matching(H, _order(rng, n))
                if M is None:
                    raise InternalContradiction("residual above half degree has no perfect matching")
            fixed.append(M)
            H = H.without_edges(M.edges)
        if fixed:
            run.log("corollary", attempt=attempt, l=len(fixed), hamilton=via_hamilton)

        host = H
        fam, H = _peel(host, rng, need)
        run.log("peel", attempt=attempt, l=len(fam))
        failed = False
        while len(fam) < need:
            try:
                res = augment(host, fam, D=Dn, checks=checks)
            except (ClaimViolated, InternalContradiction, SearchExhausted, PreconditionViolated) as exc:
                claim = getattr(exc, "claim", None)
                if isinstance(exc, ClaimViolated):
                    run.result.claim_violations += 1
                path = _write_repro(repro_dir, run, host, fam, exc, attempt)
                run.log("augment-failed", attempt=attempt, l=len(fam), error=type(exc).__name__,
                        claim=claim, repro=path)
                failed = True
                break
            run.result.augment_calls += 1
            run.result.case_histogram[res.case.value] += 1
            for step in res.steps:
                run.log("augment", attempt=attempt, l=len(fam), **step)
            fam = res.family
            H = residual(host, fam)
            more, H = _peel(H, rng, need - len(fam))
            if more:
                fam += more
                run.log("peel", attempt=attempt, l=len(fam))
        total = fixed + fam
        if not failed and len(total) < target:
            more, H = _peel(H, rng, target - len(total))
            total += more
            if more:
                run.log("peel", attempt=attempt, l=len(total), phase="extra")
        run.offer(total)
        if len(total) >= target:
            return run.done()
        if attempt < restarts:
            run.log("restart", attempt=attempt + 1, reason="augment-failed" if failed else "below-target")
    return _fallback(run, target, exact_limit, cancel)
