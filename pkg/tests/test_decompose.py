import importlib
import json

import pytest

import stuck_states as ss
from matchpack.decompose import MatchingFamily, decompose, verify_family
from matchpack.errors import BudgetExhausted, ClaimViolated, OddOrder, TargetUnreachable
from matchpack.generators import (
    cycle_graph, gen_counterexample, gen_random_semiregular, gen_sharp_g1, petersen_graph,
    sharp_b_part,
)
from matchpack.graph import complete_graph
from matchpack.matching import Matching
from matchpack.oracle import enumerate_perfect_matchings

K4_FACTORS = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]]


class TestVerify:
    def test_k4_factorization(self):
        assert verify_family(complete_graph(4), K4_FACTORS)

    def test_repeated_matching(self):
        out = verify_family(complete_graph(4), [K4_FACTORS[0], K4_FACTORS[0]])
        assert not out and out.violation == "edge (0,1) reused in matchings 0,1"

    def test_c6(self):
        assert verify_family(cycle_graph(6), [[(0, 1), (2, 3), (4, 5)], [(1, 2), (3, 4), (0, 5)]])

    def test_non_edge(self):
        out = verify_family(cycle_graph(4), [[(0, 2), (1, 3)]])
        assert out.violation == "edge (0,2) of matching 0 is not an edge of host"

    def test_not_perfect(self):
        out = verify_family(complete_graph(4), [[(0, 1)]])
        assert out.violation == "matching 0 is not perfect: vertex 2 uncovered"

    def test_double_cover(self):
        out = verify_family(complete_graph(4), [[(0, 1), (1, 2)]])
        assert out.violation == "vertex 1 covered twice in matching 0"

    def test_accepts_family_object(self):
        G = complete_graph(4)
        fam = MatchingFamily(G, [Matching(tuple(m), 4) for m in K4_FACTORS])
        assert verify_family(G, fam) and fam.l == 3

    def test_empty_family(self):
        assert verify_family(complete_graph(4), [])


class TestPeel:
    def test_k8(self):
        res = decompose(complete_graph(8), 7, "peel")
        assert res.achieved == 7 and verify_family(complete_graph(8), res.family)

    def test_unbounded(self):
        res = decompose(cycle_graph(6), None, "peel")
        assert res.achieved == 2

    def test_budget_exhausted(self):
        with pytest.raises(BudgetExhausted) as info:
            decompose(petersen_graph(), 2, "peel", restarts=3)
        assert info.value.result.achieved == 1
        kinds = [r["kind"] for r in info.value.result.trace]
        assert kinds.count("restart") == 3

    def test_odd_order(self):
        with pytest.raises(OddOrder):
            decompose(complete_graph(5), 1, "peel")

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            decompose(complete_graph(4), 1, "greedy")


class TestProof:
    def test_sharp_instance(self):
        G = gen_sharp_g1(34)
        res = decompose(G, 9, "proof")
        assert res.achieved == 9 and verify_family(G, res.family)
        B = set(sharp_b_part(34))
        for M in res.family:
            assert sum(u in B and v in B for u, v in M.edges) == 1

    @pytest.mark.parametrize("seed", range(1, 6))
    def test_random_threshold(self, seed):
        G = gen_random_semiregular(34, 17, seed)
        res = decompose(G, 9, "proof", seed)
        assert res.achieved >= 9 and verify_family(G, res.family)
        assert res.claim_violations == 0

    def test_default_target_above_threshold(self):
        G = gen_random_semiregular(34, 20, 2)
        res = decompose(G, None, "proof", 2)
        assert res.target == 11 and res.achieved >= 11
        assert any(r["kind"] == "corollary" and r["l"] == 3 for r in res.trace)
        assert verify_family(G, res.family)

    def test_via_hamilton(self):
        G = gen_random_semiregular(34, 18, 4)
        res = decompose(G, 10, "proof", 4, via_hamilton=True)
        assert res.achieved >= 10 and verify_family(G, res.family)
        assert any(r["kind"] == "corollary" and r["hamilton"] for r in res.trace)

    def test_small_graph_falls_back(self):
        res = decompose(complete_graph(8), None, "proof")
        assert res.target == 4 and res.achieved >= 4

    def test_small_graph_exact_fallback(self):
        with pytest.raises(TargetUnreachable):
            decompose(petersen_graph(), 2, "proof", restarts=2)

    def test_counterexample_has_nothing(self):
        with pytest.raises(BudgetExhausted) as info:
            decompose(gen_counterexample(34), 1, "proof", restarts=1)
        assert info.value.result.achieved == 0

    def test_determinism(self):
        G = gen_random_semiregular(38, 19, 3)
        a = decompose(G, 10, "proof", 3)
        b = decompose(G, 10, "proof", 3)
        assert a.family_text() == b.family_text()
        assert a.trace_lines(timing=False) == b.trace_lines(timing=False)

    def test_trace_is_json_lines(self):
        res = decompose(gen_sharp_g1(34), 9, "proof")
        rows = [json.loads(line) for line in res.trace_lines().splitlines()]
        assert rows and all("kind" in r and "elapsed" in r for r in rows)
        assert all("elapsed" not in json.loads(x) for x in res.trace_lines(timing=False).splitlines())


class TestProofWithStuckStates:
    """Drive the proof loop into the augmentation step by starting from a stuck family."""

    def _stuck(self, monkeypatch, residual_graph, l, fixed=()):
        fam = ss.plant(residual_graph, l, 0, fixed=fixed)
        host = ss.host_of(residual_graph, fam)
        dec = importlib.import_module("matchpack.decompose")
        real = dec._peel
        first = {"done": False}

        def peel(H, rng, limit):
            if not first["done"] and H == host:
                first["done"] = True
                return list(fam), residual_graph
            return real(H, rng, limit)

        monkeypatch.setattr(dec, "_peel", peel)
        return host

    @pytest.mark.parametrize("builder,l,case", [
        (lambda: ss.barrier_residual(9), 8, "s>=2"),
        (ss.hub_residual, 8, "s=1"),
        (ss.two_block_residual, 7, "s=0"),
    ])
    def test_augment_in_loop(self, monkeypatch, builder, l, case):
        host = self._stuck(monkeypatch, builder(), l)
        res = decompose(host, 9, "proof")
        assert res.achieved >= 9 and verify_family(host, res.family)
        assert res.augment_calls >= 1 and res.case_histogram[case] >= 1
        assert any(r["kind"] == "augment" and r["case"] == case for r in res.trace)

    def test_claim_violation_writes_reproducer(self, monkeypatch, tmp_path):
        host = self._stuck(monkeypatch, ss.two_block_residual(), 7)
        dec = importlib.import_module("matchpack.decompose")

        def broken(*args, **kwargs):
            raise ClaimViolated("final-contradiction", "forced")

        monkeypatch.setattr(dec, "augment", broken)
        res = decompose(host, 9, "proof", restarts=1, repro_dir=tmp_path)
        assert res.achieved >= 9 and res.claim_violations == 1
        failed = [r for r in res.trace if r["kind"] == "augment-failed"]
        assert failed[0]["claim"] == "final-contradiction"
        files = list(tmp_path.iterdir())
        assert len(files) == 1
        payload = json.loads(files[0].read_text())
        assert payload["n"] == 34 and len(payload["family"]) == 7
        assert payload["claim"] == "final-contradiction"


class TestExact:
    def test_petersen(self):
        res = decompose(petersen_graph(), None, "exact")
        assert res.achieved == 1

    def test_unreachable(self):
        with pytest.raises(TargetUnreachable) as info:
            decompose(petersen_graph(), 2, "exact")
        assert info.value.result.achieved == 1

    def test_matches_enumeration(self):
        G = cycle_graph(8)
        res = decompose(G, 2, "exact")
        assert res.achieved == 2 and len(enumerate_perfect_matchings(G)) == 2
