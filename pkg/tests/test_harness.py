from fractions import Fraction

import pytest

from thinhom import harness
from thinhom.harness import (
    Corpus, VerificationReport, canonical_form, replay, resolve_chain_indexing, sperner_level,
    suite_adjunction, suite_multiplicativity, suite_poljak_rodl, suite_product_preservation,
)
from thinhom.graphs import Digraph, make_complete, make_cycle
from thinhom.hom import chromatic_number


@pytest.mark.parametrize("kind,n,count", [
    ("exhaustive-graphs", 1, 1), ("exhaustive-graphs", 2, 2), ("exhaustive-graphs", 4, 64),
    ("exhaustive-digraphs", 2, 4), ("exhaustive-digraphs", 3, 64),
])
def test_corpus_counts_per_size(kind, n, count):
    c = Corpus(kind, n, min_n=n)
    assert len(c.members()) == count == c.expected_size()


def test_corpus_totals_and_isomorph_reduction():
    assert len(Corpus("exhaustive-graphs", 5).members()) == 1 + 2 + 8 + 64 + 1024
    # unlabelled graphs on 1..4 vertices: 1 + 2 + 4 + 11
    assert len(Corpus("exhaustive-graphs", 4, iso_reduce=True).members()) == 18
    # unlabelled loop-free digraphs on 1..3 vertices: 1 + 3 + 16
    assert len(Corpus("exhaustive-digraphs", 3, iso_reduce=True).members()) == 20


def test_canonical_form_is_invariant():
    a = Digraph(3, [(0, 1), (1, 2)])
    b = Digraph(3, [(2, 0), (0, 1)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a) != canonical_form(Digraph(3, [(0, 1), (0, 2)]))


def test_seeded_corpus_is_reproducible():
    a = Corpus("seeded-random", 5, count=10, seed=3).members()
    b = Corpus("seeded-random", 5, count=10, seed=3).members()
    c = Corpus("seeded-random", 5, count=10, seed=4).members()
    assert a == b and a != c


def test_reports_are_deterministic_and_round_trip():
    one = suite_adjunction("T3", Corpus("exhaustive-graphs", 3))
    two = suite_adjunction("T3", Corpus("exhaustive-graphs", 3))
    assert one.to_json() == two.to_json()
    assert one.status == "PASS" and one.ok
    again = VerificationReport.from_json(one.to_json(timing=True))
    assert again.to_json() == one.to_json()
    assert "wall_time" in one.to_dict(timing=True) and "wall_time" not in one.to_dict()
    for field in ("suite", "law", "citation", "checked", "passed", "skipped", "counterexamples"):
        assert field in one.to_json()


def test_expected_failure_replays():
    r = suite_product_preservation("delta", Corpus("exhaustive-digraphs", 2), product="box", expect="FAIL")
    assert r.status == "FAIL" and r.ok
    assert r.counterexamples
    restored = VerificationReport.from_json(r.to_json())
    assert all(replay(restored))


def test_omega2_is_not_a_full_adjoint():
    r = suite_adjunction("omega2", Corpus("exhaustive-graphs", 2))
    assert r.status == "FAIL" and r.ok
    assert all(replay(r))


def test_timeouts_become_skips():
    r = suite_adjunction("T3", Corpus("exhaustive-graphs", 3), timeout=0.0)
    law = r.law("adjunction")
    assert law.skipped > 0 and law.violations == 0
    assert r.status == "SKIP" and not r.ok


def test_multiplicativity_in_digraphs_fails_for_k3():
    tournaments = Corpus("exhaustive-digraphs", 4, min_n=4, iso_reduce=True)
    r = suite_multiplicativity(make_complete(3), tournaments, expect="FAIL")
    assert r.status == "FAIL"
    assert all(replay(r))


def test_poljak_rodl_levels():
    rec = suite_poljak_rodl(2)
    assert not rec.found and rec.revalidate()
    rec = suite_poljak_rodl(3)
    assert rec.found and rec.revalidate()
    assert rec.chi_G == rec.chi_H == 4 and rec.chi_product == 3
    assert rec.psi_upper == 3
    assert rec.orientation_partition_ok


def test_sperner_level():
    assert [sperner_level(c) for c in (1, 2, 3, 4, 6, 7, 10, 20)] == [0, 2, 3, 4, 4, 5, 5, 6]


def test_chain_indexing_resolves_to_the_cycle_itself():
    out = resolve_chain_indexing(cases=((3, 3, 5), (5, 3, 3)))
    assert out["matches"] == ["C_k"]


def test_functor_ids():
    assert harness.get_functor("gamma:T3")(make_cycle(5)) == make_complete(5)
    assert harness.get_functor("omega:3")(make_complete(3)).n == 12
    with pytest.raises(ValueError):
        harness.get_functor("omega:4")
    with pytest.raises(ValueError):
        harness.get_template("T4")
    L = harness.get_functor("L:3/3")(make_complete(3))
    assert chromatic_number(L) == 3


def test_every_law_has_a_statement():
    for name, (fn, statement, params) in harness.LAWS.items():
        assert callable(fn) and statement and isinstance(params, tuple)
