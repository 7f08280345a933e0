import math

import numpy as np
import pytest
from hypothesis import given, settings

from thinhom.graphs import (
    Digraph, Graph, make_circular_complete, make_complete, make_cycle, make_directed_path,
    make_edgeless, make_path, make_transitive_tournament, symmetrize,
)
from thinhom.hom import chromatic_number, hom_equivalent, hom_exists, odd_girth
from thinhom.pultr import (
    PultrTemplate, TemplateError, chain_left, delta, delta_left, find_symmetry, format_template,
    gamma_functor, lambda_functor, parse_template, shift_graph, template_arc, template_box2,
    template_path, template_product, validate_template,
)

from test_graphs import digraphs, graphs


def walk_power(G, k):
    """Adjacency of the k-walk graph, computed with integer matrix powers."""
    A = G.adjacency().astype(np.int64)
    return (np.linalg.matrix_power(A, k) > 0).astype(int)


@settings(max_examples=60, deadline=None)
@given(graphs(6))
def test_gamma_path_template_is_walk_power(G):
    for k in (3, 5):
        img = gamma_functor(template_path(k), G)
        assert img.n == G.n
        assert np.array_equal(img.adjacency(), walk_power(G, k))


def test_golden_c5():
    img = gamma_functor(template_path(3), make_cycle(5))
    assert img == make_complete(5)


def test_lambda_subdivides():
    L = lambda_functor(template_path(3), make_complete(3))
    assert L.n == 9
    assert hom_equivalent(L, make_cycle(9))
    assert lambda_functor(template_path(3), make_complete(2)).n == 4
    assert lambda_functor(template_path(5), make_cycle(3)).n == 3 + 3 * 4


@settings(max_examples=40, deadline=None)
@given(graphs(5))
def test_lambda_vertex_count(G):
    L = lambda_functor(template_path(3), G)
    assert L.n == G.n + 2 * len(G.edges())


def test_builtin_templates_validate():
    for T in (template_path(3), template_path(7), template_arc(), template_box2(), template_box2(bar=True),
              template_product("x", make_complete(2)), template_product("box", make_cycle(5)),
              template_product("lex", make_path(2))):
        assert validate_template(T) == []


def test_grid_symmetry_is_rotation():
    T = template_box2()
    assert find_symmetry(T) == (5, 4, 3, 2, 1, 0)
    # reflecting columns 0 and 2 is an automorphism, but it fixes eps1's rows
    reflect = (2, 1, 0, 5, 4, 3)
    bad = PultrTemplate(T.P, T.Q, T.eps1, T.eps2, reflect, "bad")
    assert validate_template(bad)


def test_invalid_template_diagnostics():
    T = PultrTemplate(make_complete(2), make_path(2), (0, 2), (1, 2))
    assert any("eps1" in p for p in validate_template(T))
    with pytest.raises(TemplateError):
        lambda_functor(template_arc(), make_complete(2), mode="graph")


def test_template_round_trip():
    for T in (template_path(3), template_arc(), template_box2()):
        again = parse_template(format_template(T))
        assert again == T
    with pytest.raises(TemplateError):
        parse_template("template x\ngraph 1\neps1: 0\neps2: 0\n")


def test_arc_graph():
    D = make_transitive_tournament(3)
    A = delta(D)
    assert A.n == 3 and A.num_arcs == 1
    assert sorted(A.labels) == sorted(D.sorted_arcs())


@settings(max_examples=50, deadline=None)
@given(digraphs(5))
def test_arc_graph_by_definition(D):
    A = delta(D)
    arcs = D.sorted_arcs()
    assert A.n == len(arcs)
    expected = {(i, j) for i, a in enumerate(arcs) for j, b in enumerate(arcs) if a[1] == b[0]}
    assert set(A.arcs) == expected


@settings(max_examples=40, deadline=None)
@given(digraphs(4), digraphs(3))
def test_arc_adjunction_small(G, H):
    assert (hom_exists(delta_left(G), H) is None) == (hom_exists(G, delta(H)) is None)


def test_shift_graph_sizes_and_girth():
    for n in range(1, 9):
        for k in (1, 2, 3):
            S = shift_graph(n, k)
            assert S.n == math.comb(n, k)
            assert odd_girth(symmetrize(S)) >= 2 * k + 1
    assert shift_graph(8, 3).n == 56


def test_shift_graph_chromatic_is_log():
    # the frozen oracle: least c with 2^c >= n
    assert [chromatic_number(shift_graph(n, 2)) for n in range(1, 9)] == [0, 1, 2, 2, 3, 3, 3, 3]


def test_product_templates():
    # K_n^H has a loop iff H is n-colourable
    for H, n, loop in ((make_cycle(5), 2, False), (make_cycle(5), 3, True), (make_complete(3), 3, True)):
        E = gamma_functor(template_product("x", H), make_complete(n))
        assert E.has_loops == loop
    empty = gamma_functor(template_product("box", make_complete(4)), make_complete(3))
    assert empty.n == 0
    box = gamma_functor(template_product("box", make_cycle(5)), make_complete(3))
    assert hom_equivalent(box, make_complete(3))


def test_chain_on_cycles():
    # L^m_n(C_k) <-> K_{nk / ((nk - m) / 2)}
    for m, n, k in ((3, 3, 5), (5, 3, 3), (3, 5, 3)):
        s, r = n * k, (n * k - m) // 2
        assert hom_equivalent(chain_left(m, n, make_cycle(k) if k > 3 else make_complete(3)),
                              make_circular_complete(s, r) if s != 2 * r else make_complete(2))


def test_chain_without_cores_agrees():
    G = make_cycle(5)
    assert hom_equivalent(chain_left(3, 3, G, core=False), chain_left(3, 3, G))


def test_circular_gamma_identities():
    g = gamma_functor(template_path(3), make_circular_complete(7, 3))
    assert hom_equivalent(g, make_circular_complete(7, 2))
    assert hom_equivalent(gamma_functor(template_path(3), make_circular_complete(12, 5)), make_complete(4))
    assert gamma_functor(template_path(3), make_complete(3)).has_loops


def test_grid_functors_on_edgeless():
    E = make_edgeless(2)
    assert gamma_functor(template_box2(), E).n == 0
    assert gamma_functor(template_box2(bar=True), E).n == 4
    assert lambda_functor(template_box2(bar=True), E).num_arcs == 0
