"""Sharp instances, counterexamples and random semi-regular test graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .errors import BadOrder, InfeasibleDegree
from .graph import Edge, Graph, build_graph, canon, complete_graph


class Family(str, Enum):
    SHARP_G1 = "sharp-g1"
    SHARP_G2 = "sharp-g2"
    COUNTEREXAMPLE = "counterexample"
    RANDOM_SEMIREGULAR = "random-semiregular"
    COMPLETE = "complete"
    CYCLE = "cycle"
    PETERSEN = "petersen"


@dataclass(frozen=True)
class GeneratorSpec:
    family: Family
    n: int = 10
    k: int | None = None
    seed: int = 0


def _bipartite_parts(n: int) -> tuple[list[int], list[int]]:
    half = n // 2
    return list(range(half - 1)), list(range(half - 1, n))


def sharp_b_part(n: int) -> list[int]:
    """The larger part ``B`` (size ``n/2 + 1``) of both sharp constructions."""
    return _bipartite_parts(n)[1]


def gen_sharp_g1(n: int) -> Graph:
    """``K_{n/2-1, n/2+1}`` plus a perfect matching inside the larger part.

    Needs ``n/2`` odd.  Every perfect matching uses exactly one edge inside the
    larger part, so the ``(n+2)/4`` such edges cap any disjoint family.
    """
    if n < 6 or n % 2 or (n // 2) % 2 == 0:
        raise BadOrder(f"sharp G1 needs even n >= 6 with n/2 odd, got {n}")
    A, B = _bipartite_parts(n)
    edges = [(a, b) for a in A for b in B]
    edges += [(B[i], B[i + 1]) for i in range(0, len(B), 2)]
    return build_graph(n, edges)


def gen_sharp_g2(n: int) -> Graph:
    """``K_{n/2-1, n/2+1}`` minus a maximum matching, plus a minimal cover of
    the matched vertices of the larger part.

    Needs ``n/2`` even.  The removed matching pairs ``A[i]`` with ``B[i]``; the
    odd number of matched B vertices is covered by consecutive pairs with the
    last one attached to the highest-index vertex already paired.
    """
    if n < 8 or n % 2 or (n // 2) % 2:
        raise BadOrder(f"sharp G2 needs even n >= 8 with n/2 even, got {n}")
    A, B = _bipartite_parts(n)
    removed = {(A[i], B[i]) for i in range(len(A))}
    edges = [(a, b) for a in A for b in B if (a, b) not in removed]
    covered = B[:len(A)]
    edges += [(covered[i], covered[i + 1]) for i in range(0, len(covered) - 1, 2)]
    # odd count: the leftover vertex reuses the last paired one
    edges.append((covered[-2], covered[-1]))
    return build_graph(n, edges)


def gen_counterexample(n: int) -> Graph:
    """A perfect-matching-free regular graph one degree below the threshold.

    Two cliques of order ``n/2`` when ``n/2`` is odd; otherwise cliques of
    orders ``n/2 - 1`` and ``n/2 + 1`` with a Hamiltonian cycle removed from
    the larger one.
    """
    if n < 6 or n % 2:
        raise BadOrder(f"counterexample needs even n >= 6, got {n}")
    half = n // 2
    if half % 2:
        sizes = (half, half)
    else:
        sizes = (half - 1, half + 1)
    first = list(range(sizes[0]))
    second = list(range(sizes[0], n))
    edges = {canon(u, v) for block in (first, second) for i, u in enumerate(block) for v in block[i + 1:]}
    if half % 2 == 0:
        k = len(second)
        edges -= {canon(second[i], second[(i + 1) % k]) for i in range(k)}
    return build_graph(n, sorted(edges))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadOrder(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(x, a + y) for x in range(a) for y in range(b)])


def _circulant(n: int, k: int) -> set[Edge]:
    edges = {canon(i, (i + j) % n) for i in range(n) for j in range(1, k // 2 + 1)}
    if k % 2:
        edges |= {canon(i, i + n // 2) for i in range(n // 2)}
    return edges


def _swap(edges: list[Edge], present: set[Edge], rng: random.Random, tries: int) -> None:
    m = len(edges)
    if m < 2:
        return
    for _ in range(tries):
        i, j = rng.randrange(m), rng.randrange(m)
        if i == j:
            continue
        (a, b), (c, d) = edges[i], edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        # (a,b),(c,d) -> (a,d),(c,b)
        if len({a, b, c, d}) < 4:
            continue
        e1, e2 = canon(a, d), canon(c, b)
        if e1 in present or e2 in present:
            continue
        present.discard(edges[i])
        present.discard(edges[j])
        present.add(e1)
        present.add(e2)
        edges[i], edges[j] = e1, e2


def gen_random_semiregular(n: int, k: int, seed: int = 0) -> Graph:
    """Random graph with every degree in ``{k, k+1}``, deterministic in ``seed``.

    Starts from a circulant ``k``-regular graph, mixes it with degree-preserving
    double-edge swaps, lifts a random subset of vertices to degree ``k+1`` with
    a matching of non-edges, and mixes again.  Uniformity is not claimed.
    """
    if n < 2 or n % 2:
        raise InfeasibleDegree(f"order must be even and >= 2, got {n}")
    if not 1 <= k <= n - 1:
        raise InfeasibleDegree(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if k == n - 1:
        return complete_graph(n)
    rng = random.Random(seed)
    present = _circulant(n, k)
    edges = sorted(present)
    _swap(edges, present, rng, 20 * len(edges))

    pool = list(range(n))
    rng.shuffle(pool)
    lift = pool[: 2 * rng.randint(0, n // 2)]
    while lift:
        u = lift.pop()
        partner = next((w for w in lift if canon(u, w) not in present), None)
        if partner is None:
            continue
        lift.remove(partner)
        e = canon(u, partner)
        present.add(e)
        edges.append(e)
    _swap(edges, present, rng, 20 * len(edges))
    return build_graph(n, sorted(present))


def gen_named(spec: GeneratorSpec) -> Graph:
    fam = Family(spec.family)
    if fam is Family.SHARP_G1:
        return gen_sharp_g1(spec.n)
    if fam is Family.SHARP_G2:
        return gen_sharp_g2(spec.n)
    if fam is Family.COUNTEREXAMPLE:
        return gen_counterexample(spec.n)
    if fam is Family.RANDOM_SEMIREGULAR:
        if spec.k is None:
            raise InfeasibleDegree("random-semiregular needs k")
        return gen_random_semiregular(spec.n, spec.k, spec.seed)
    if fam is Family.COMPLETE:
        return complete_graph(spec.n)
    if fam is Family.CYCLE:
        return cycle_graph(spec.n)
    return petersen_graph()
