import itertools

from hypothesis import given, settings

from thinhom.adjoints import delta_right, omega2, omega3, omega_odd, submasks
from thinhom.graphs import (
    Graph, make_circular_complete, make_complete, make_cycle, make_path, make_transitive_tournament,
)
from thinhom.hom import chromatic_number, hom_equivalent, hom_exists
from thinhom.pultr import delta, gamma_functor, template_box2, template_path

from test_graphs import digraphs, graphs


def test_submasks():
    assert submasks(0b101) == [0, 1, 4, 5]
    assert submasks(0) == [0]


@settings(max_examples=40, deadline=None)
@given(graphs(5))
def test_omega3_vertex_count(G):
    assert omega3(G).n == sum(2 ** len(G.out_neighbors(u)) for u in range(G.n))


def _omega3_by_definition(G):
    verts = [(u, frozenset(U)) for u in range(G.n)
             for r in range(len(G.out_neighbors(u)) + 1)
             for U in itertools.combinations(G.out_neighbors(u), r)]
    joined = lambda A, B: all(G.has_arc(a, b) for a in A for b in B)
    edges = {(i, j) for i, (u, U) in enumerate(verts) for j, (v, V) in enumerate(verts)
             if u in V and v in U and joined(U, V)}
    return len(verts), edges


@settings(max_examples=30, deadline=None)
@given(graphs(4))
def test_omega3_matches_definition(G):
    O = omega3(G)
    n, edges = _omega3_by_definition(G)
    assert O.n == n
    # same vertex order: (u, sorted U) labels
    assert {(O.labels[i], O.labels[j]) for i, j in O.arcs} == \
        {(_lab(i, G), _lab(j, G)) for i, j in edges}


def _lab(i, G):
    verts = [(u, tuple(sorted(U))) for u in range(G.n)
             for r in range(len(G.out_neighbors(u)) + 1)
             for U in itertools.combinations(G.out_neighbors(u), r)]
    return verts[i]


def test_omega_on_triangle():
    K3 = make_complete(3)
    assert omega3(K3).n == 12
    assert hom_equivalent(omega3(K3), make_cycle(9))
    assert omega_odd(2, K3).n == 27
    assert hom_equivalent(omega_odd(2, K3), make_cycle(15))
    assert omega_odd(1, K3) == omega3(K3) or hom_equivalent(omega_odd(1, K3), omega3(K3))


def test_omega3_k4_chromatic():
    assert chromatic_number(omega3(make_complete(4))) == 4


@settings(max_examples=60, deadline=None)
@given(graphs(4), graphs(3))
def test_gamma3_omega3_adjunction(G, H):
    left = hom_exists(gamma_functor(template_path(3), G), H) is not None
    right = hom_exists(G, omega3(H)) is not None
    assert left == right


@settings(max_examples=30, deadline=None)
@given(graphs(3), graphs(3))
def test_gamma5_omega5_adjunction(G, H):
    left = hom_exists(gamma_functor(template_path(5), G), H) is not None
    right = hom_exists(G, omega_odd(2, H)) is not None
    assert left == right


def test_delta_right_counts():
    for n in range(1, 5):
        assert delta_right(make_complete(n)).n == 3 ** n


@settings(max_examples=60, deadline=None)
@given(digraphs(3), digraphs(3))
def test_delta_adjunction(G, H):
    assert (hom_exists(delta(G), H) is not None) == (hom_exists(G, delta_right(H)) is not None)


def test_omega2_identities():
    K3, K4 = make_complete(3), make_complete(4)
    assert hom_equivalent(omega2(K3), make_circular_complete(12, 5))
    O = omega2(K4)
    assert O.n == 50
    img = gamma_functor(template_box2(), O)
    assert hom_exists(make_complete(6), img) is not None
    assert hom_exists(img, K4) is None


def test_omega2_empty_components_are_isolated():
    full = omega2(make_cycle(5), include_empty=True)
    trimmed = omega2(make_cycle(5))
    assert full.n > trimmed.n
    assert hom_equivalent(full, trimmed)
    assert omega2(Graph(2), include_empty=True).n == 1 + 2 * 3
