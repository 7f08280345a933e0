import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from thinhom.graphs import (
    Digraph, Graph, GraphFormatError, cartesian_product, direct_product, disjoint_union,
    format_graph, format_labels, identify, induced_subgraph, lexicographic_product,
    make_circular_complete, make_complete, make_cycle, make_directed_path, make_edgeless,
    make_kneser, make_path, make_pendant_join, make_single_loop, make_transitive_tournament,
    orient, parse_graph, reverse, symmetrize,
)


@st.composite
def digraphs(draw, max_n=5, loops=False):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if loops or u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(n, chosen)


@st.composite
def graphs(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_family_sizes():
    assert make_complete(4).num_arcs == 12
    assert make_edgeless(3).num_arcs == 0
    assert make_single_loop().loops == [0]
    assert make_path(3).n == 4 and len(make_path(3).edges()) == 3
    assert len(make_cycle(7).edges()) == 7
    assert make_directed_path(2).sorted_arcs() == [(0, 1), (1, 2)]
    assert make_transitive_tournament(5).num_arcs == 10


def test_cycle_needs_three():
    with pytest.raises(ValueError):
        make_cycle(2)


def test_circular_complete_neighbourhoods():
    G = make_circular_complete(12, 5)
    assert G.n == 12
    # distances 5, 6, 7 -> degree 3
    assert all(len(G.out_neighbors(v)) == 3 for v in range(12))
    # K_{5/2} is the 5-cycle 0-2-4-1-3
    assert make_circular_complete(5, 2).has_arc(0, 2) and not make_circular_complete(5, 2).has_arc(0, 1)
    assert make_circular_complete(4, 1) == make_complete(4)


def test_kneser_petersen():
    P = make_kneser(5, 2)
    assert P.n == 10 and len(P.edges()) == 15
    assert all(len(P.out_neighbors(v)) == 3 for v in range(10))
    assert P.label(0) == (0, 1)
    K = make_kneser(6, 2)
    assert K.n == math.comb(6, 2)


def test_pendant_join_size():
    assert make_pendant_join(5, 3).n == 14


def test_products_by_adjacency_oracle():
    G, H = make_cycle(5), make_path(2)
    A, B = G.adjacency(), H.adjacency()
    I_G, I_H = np.eye(G.n, dtype=int), np.eye(H.n, dtype=int)
    assert np.array_equal(direct_product(G, H).adjacency(), np.kron(A, B))
    assert np.array_equal(cartesian_product(G, H).adjacency(), np.kron(A, I_H) + np.kron(I_G, B))
    J = np.ones((H.n, H.n), dtype=int)
    assert np.array_equal(lexicographic_product(G, H).adjacency(), np.kron(A, J) + np.kron(I_G, B))


def test_products_stay_graphs():
    assert isinstance(direct_product(make_complete(2), make_complete(3)), Graph)
    assert not isinstance(direct_product(make_directed_path(1), make_complete(2)), Graph)


def test_orient_reverse_symmetrize():
    K = make_complete(4)
    o = orient(K)
    assert o.num_arcs == 6
    assert symmetrize(o) == K
    assert reverse(o).arcs == frozenset((v, u) for u, v in o.arcs)
    with pytest.raises(ValueError):
        orient(make_single_loop())


def test_induced_and_union_and_identify():
    C = make_cycle(6)
    S = induced_subgraph(C, [4, 0, 1])
    assert S.n == 3 and tuple(S.labels) == (0, 1, 4)
    assert sorted(S.edges()) == [(0, 1)]
    U = disjoint_union(make_complete(2), make_complete(3))
    assert U.n == 5 and U.num_arcs == 2 + 6
    Q = identify(make_path(2), [(0, 2)])
    assert Q.n == 2 and Q.edges() == [(0, 1)]


@given(digraphs(loops=True))
def test_format_round_trip_digraph(D):
    again = parse_graph(format_graph(D))
    assert again.n == D.n and again.arcs == D.arcs


@given(graphs())
def test_format_round_trip_graph(G):
    again = parse_graph(format_graph(G))
    assert isinstance(again, Graph) and again == G


def test_graph_file_lists_each_edge_once():
    text = format_graph(make_cycle(3))
    assert text == "graph 3\n0 1\n0 2\n1 2\n"


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError, match="line 3"):
        parse_graph("graph 3\n0 1\n0 x\n")
    with pytest.raises(GraphFormatError, match="line 1"):
        parse_graph("grph 3\n")
    with pytest.raises(GraphFormatError, match="out of range"):
        parse_graph("# comment\ndigraph 2\n0 2\n")
    with pytest.raises(GraphFormatError):
        parse_graph("")


def test_comments_and_symmetrization():
    G = parse_graph("# triangle\ngraph 3\n0 1\n1 2\n2 0\n")
    assert G == make_complete(3)


def test_label_sidecar():
    text = format_labels(make_kneser(4, 1))
    assert text.splitlines()[0] == "0 (0)"


@settings(max_examples=50)
@given(graphs(4), graphs(3))
def test_direct_product_is_commutative_up_to_relabel(G, H):
    a, b = direct_product(G, H), direct_product(H, G)
    swap = lambda x: (x % H.n) * G.n + x // H.n if H.n else x
    assert {(swap(u), swap(v)) for u, v in a.arcs} == set(b.arcs)
