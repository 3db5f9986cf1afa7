import pytest
from hypothesis import given, strategies as st

from matchpack.errors import DuplicateEdge, IndexOutOfRange, LoopEdge, OddOrder, ParseError
from matchpack.graph import (
    build_graph, canon, ceil_quarter, complete_graph, components, d_threshold, edge_boundary,
    edges_between, format_graph, induced_subgraph, is_connected, is_semiregular, parse_graph,
    read_graph, semiregular_base, write_graph,
)

from matchpack.generators import cycle_graph


def two_triangles():
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


class TestBuild:
    def test_two_edges(self):
        assert build_graph(4, [(0, 1), (2, 3)]).degrees() == [1, 1, 1, 1]

    def test_k2(self):
        G = build_graph(2, [(0, 1)])
        assert G.m == 1 and G.has_edge(1, 0)

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEdge):
            build_graph(3, [(0, 1), (0, 1)])

    def test_reversed_duplicate_rejected(self):
        with pytest.raises(DuplicateEdge):
            build_graph(3, [(0, 1), (1, 0)])

    def test_loop_rejected(self):
        with pytest.raises(LoopEdge):
            build_graph(3, [(1, 1)])

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            build_graph(3, [(0, 3)])
        with pytest.raises(IndexOutOfRange):
            build_graph(3, [(-1, 2)])

    def test_edges_sorted_and_canonical(self):
        G = build_graph(4, [(3, 1), (2, 0), (1, 0)])
        assert G.edges() == [(0, 1), (0, 2), (1, 3)]

    def test_with_and_without_edges(self):
        G = complete_graph(4)
        H = G.without_edges([(0, 1)])
        assert not H.has_edge(0, 1) and H.m == 5
        assert H.with_edges([(1, 0)]) == G
        with pytest.raises(DuplicateEdge):
            G.with_edges([(0, 1)])
        with pytest.raises(ValueError):
            H.without_edges([(0, 1)])


class TestThreshold:
    @pytest.mark.parametrize("n,expected", [(34, 17), (36, 17), (4, 1), (2, 1), (48, 23), (50, 25)])
    def test_values(self, n, expected):
        assert d_threshold(n) == expected

    def test_matches_case_form(self):
        for n in range(2, 200, 2):
            assert d_threshold(n) == (n // 2 if n % 4 == 2 else n // 2 - 1)
            assert d_threshold(n) == 2 * ceil_quarter(n) - 1

    @pytest.mark.parametrize("n", [33, 1, 0, -2])
    def test_rejects(self, n):
        with pytest.raises(OddOrder):
            d_threshold(n)


class TestSemiregular:
    def test_k4(self):
        assert is_semiregular(complete_graph(4), 3)
        assert is_semiregular(complete_graph(4), 2)
        assert not is_semiregular(complete_graph(4), 1)

    def test_path(self):
        assert is_semiregular(build_graph(3, [(0, 1), (1, 2)]), 1)

    def test_base(self):
        assert semiregular_base(build_graph(3, [(0, 1), (1, 2)])) == 1
        assert semiregular_base(build_graph(4, [(0, 1), (1, 2), (1, 3)])) is None


class TestBoundaries:
    def test_k4_vertex(self):
        assert len(edge_boundary(complete_graph(4), {0})) == 3

    def test_two_triangles(self):
        assert edge_boundary(two_triangles(), {0, 1, 2}) == []

    def test_c4(self):
        assert edge_boundary(cycle_graph(4), {0, 1}) == [(0, 3), (1, 2)]

    def test_between(self):
        K4 = complete_graph(4)
        assert len(edges_between(K4, {0, 1}, {2, 3})) == 4
        assert edges_between(cycle_graph(4), {0}, {2}) == []
        assert edges_between(K4, {0}, {0}) == []

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            edge_boundary(complete_graph(3), {5})
        with pytest.raises(IndexOutOfRange):
            edges_between(complete_graph(3), {0}, {7})


class TestComponents:
    def test_examples(self):
        assert [len(c) for c in components(two_triangles())] == [3, 3]
        assert len(components(complete_graph(4))) == 1
        assert components(build_graph(3, [])) == [(0,), (1,), (2,)]

    def test_restricted(self):
        assert components(cycle_graph(6), {0, 1, 3, 4}) == [(0, 1), (3, 4)]

    def test_connected(self):
        assert is_connected(cycle_graph(5)) and not is_connected(two_triangles())


class TestInduced:
    def test_examples(self):
        sub, index = induced_subgraph(complete_graph(4), {0, 1, 2})
        assert sub == complete_graph(3) and index == {0: 0, 1: 1, 2: 2}
        sub, _ = induced_subgraph(cycle_graph(6), {0, 2, 4})
        assert sub.n == 3 and sub.m == 0
        sub, index = induced_subgraph(complete_graph(4), set())
        assert sub.n == 0 and index == {}

    @given(graphs(), st.data())
    def test_edges_lift_back(self, G, data):
        X = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)), max_size=G.n)) if G.n else set()
        sub, index = induced_subgraph(G, X)
        labels = sorted(X)
        lifted = sorted(canon(labels[a], labels[b]) for a, b in sub.edges())
        assert lifted == [e for e in G.edges() if e[0] in X and e[1] in X]
        assert all(labels[index[v]] == v for v in X)


class TestFormat:
    def test_header(self):
        text = format_graph(cycle_graph(4))
        assert text.splitlines()[0] == "4 4"
        assert text.endswith("\n")

    def test_comments_and_blank_lines(self):
        G = parse_graph("# a comment\n3 2\n\n0 1\n# inner\n1 2\n")
        assert G.edges() == [(0, 1), (1, 2)]

    def test_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_graph("3 2\n0 1\n")

    def test_garbage(self):
        with pytest.raises(ParseError):
            parse_graph("3 x\n")
        with pytest.raises(ParseError):
            parse_graph("")

    def test_duplicate_in_file(self):
        with pytest.raises(DuplicateEdge):
            parse_graph("3 2\n0 1\n1 0\n")

    def test_file_roundtrip(self, tmp_path):
        G = complete_graph(5)
        path = tmp_path / "k5.txt"
        write_graph(G, path)
        assert read_graph(path) == G
        assert b"\r" not in path.read_bytes()

    @given(graphs())
    def test_roundtrip(self, G):
        assert parse_graph(format_graph(G)) == G


@given(graphs())
def test_degree_sum(G):
    assert sum(G.degrees()) == 2 * G.m


@given(graphs())
def test_relabel_is_isomorphism(G):
    perm = list(reversed(range(G.n)))
    H = G.relabel(perm)
    assert H.m == G.m
    assert all(H.has_edge(perm[u], perm[v]) for u, v in G.edges())
