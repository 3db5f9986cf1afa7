"""Disjoint perfect matchings in semi-regular graphs.

The main entry point is :func:`decompose`; :func:`augment` exposes the step
that grows a stuck family by one, and :mod:`matchpack.oracle` gives exact
answers for small graphs.
"""

from .augment import AugmentResult, AugmentationContext, Case, augment, build_context
from .bipartite import BipartiteGraph, budget_matching, hopcroft_karp
from .decompose import DecompositionResult, MatchingFamily, decompose, verify_family
from .errors import (
    BadOrder, BudgetExhausted, CapExceeded, ClaimViolated, HasPerfectMatching,
    InternalContradiction, MatchpackError, OddOrder, PreconditionViolated,
    ResidualHasPerfectMatching, SearchExhausted, TargetUnreachable,
)
from .generators import (
    Family, GeneratorSpec, gen_counterexample, gen_named, gen_random_semiregular,
    gen_sharp_g1, gen_sharp_g2, petersen_graph,
)
from .graph import Graph, build_graph, ceil_quarter, complete_graph, d_threshold, is_semiregular
from .hamilton import dirac_cycle, even_cycle_matchings, ore_path
from .matching import (
    BergeWitness, Matching, berge_witness, is_bicritical, is_factor_critical,
    maximum_matching, perfect_matching,
)
from .oracle import PackingResult, enumerate_perfect_matchings, max_disjoint_pm

__version__ = "0.1.0"
