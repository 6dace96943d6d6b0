import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgeforest.graph import (
    DuplicateEdge,
    Graph,
    GraphError,
    MalformedGraph6,
    SelfLoop,
    TooLarge,
    are_isomorphic,
    complete_graph,
    cycle_graph,
    emit_graph6,
    is_connected,
    max_disjoint_edges_capped,
    parse_edge_list,
    parse_graph6,
    path_graph,
    strip_isolated,
)

PAW_TEXT = "0 1\n1 2\n1 3\n2 3"


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph(n, tuple(chosen))


def test_parse_path():
    g = parse_edge_list("0 1\n1 2")
    assert g == Graph(3, ((0, 1), (1, 2)))


def test_parse_paw_keeps_file_order():
    g = parse_edge_list(PAW_TEXT)
    assert g.n == 4
    assert g.edges == ((0, 1), (1, 2), (1, 3), (2, 3))
    assert g.degrees() == [1, 3, 2, 2]


def test_parse_comments_blank_and_header():
    g = parse_edge_list("# paw\n\nn=6\n0 1\n\n1 2  \n")
    assert g.n == 6 and g.m == 2


def test_duplicate_edge_names_line():
    with pytest.raises(DuplicateEdge) as exc:
        parse_edge_list("0 1\n0 1")
    assert exc.value.line == 2
    with pytest.raises(DuplicateEdge):
        parse_edge_list("0 1\n1 0")


@pytest.mark.parametrize("text", ["0 0", "1 -2", "0 x", "0 1 2", "n=2\n0 5"])
def test_parse_rejects_bad_lines(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_self_loop_error_type():
    with pytest.raises(SelfLoop):
        parse_edge_list("3 3")


def test_graph6_known_string_round_trip():
    g = parse_graph6("B_")
    assert g == Graph(3, ((0, 1),))
    assert emit_graph6(g) == "B_"


def test_graph6_matches_networkx():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 70)
        h = nx.gnp_random_graph(n, 0.3, seed=rng.randint(0, 10**6))
        g = Graph(n, tuple(h.edges()))
        text = emit_graph6(g)
        assert text == nx.to_graph6_bytes(h, header=False).decode().strip()
        assert parse_graph6(text).edge_set() == g.edge_set()


def test_graph6_edge_list_path_round_trip():
    g = parse_edge_list("0 1\n1 2")
    back = parse_graph6(emit_graph6(g))
    assert are_isomorphic(back, path_graph(3))


@pytest.mark.parametrize("bad", ["", "D", "Dx", "D???", "B`", "B_?", "~?", "D\x7f"])
def test_graph6_malformed(bad):
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


def test_matching_examples():
    assert max_disjoint_edges_capped(complete_graph(3), 3) == 1
    assert max_disjoint_edges_capped(parse_edge_list(PAW_TEXT), 3) == 2
    assert max_disjoint_edges_capped(cycle_graph(6), 3) == 3
    assert max_disjoint_edges_capped(cycle_graph(6), 2) == 2
    assert max_disjoint_edges_capped(Graph(2), 3) == 0


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_matching_agrees_with_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    nu = len(nx.max_weight_matching(h, maxcardinality=True))
    for cap in (1, 2, 3):
        assert max_disjoint_edges_capped(g, cap) == min(cap, nu)


def test_strip_isolated():
    assert strip_isolated(Graph(3, ((0, 2),))) == Graph(2, ((0, 1),))
    paw = parse_edge_list(PAW_TEXT)
    assert strip_isolated(paw) == paw
    assert strip_isolated(Graph(2)) == Graph(0)


def test_connectivity():
    assert is_connected(path_graph(5))
    assert not is_connected(Graph(4, ((0, 1), (2, 3))))


def test_isomorphism_examples():
    assert are_isomorphic(parse_edge_list("0 1\n0 2\n2 3"), path_graph(4))
    assert not are_isomorphic(cycle_graph(6), Graph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3))))
    with pytest.raises(TooLarge):
        are_isomorphic(path_graph(13), path_graph(13))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_isomorphism_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert are_isomorphic(g, g)
    assert are_isomorphic(g, h)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_agrees_with_networkx(g, h):
    def nxg(x):
        out = nx.Graph()
        out.add_nodes_from(range(x.n))
        out.add_edges_from(x.edges)
        return out

    assert are_isomorphic(g, h) == nx.is_isomorphic(nxg(g), nxg(h))


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(2, ((0, 2),))
    with pytest.raises(DuplicateEdge):
        Graph(3, ((0, 1), (1, 0)))
