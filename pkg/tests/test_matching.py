from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pqextremal.matching import (
    BipartiteGraph,
    is_matching,
    is_vertex_cover,
    lemma3_check,
    max_matching,
    Lemma3Report,
)
import brute


def complete_bipartite(a, b):
    return BipartiteGraph.from_edges(a, b, product(range(a), range(b)))


def test_k23():
    assert max_matching(complete_bipartite(2, 3)).size == 2


def test_empty_graph():
    res = max_matching(BipartiteGraph(3, 4))
    assert res.size == 0 and res.cover_size == 0


def test_perfect_matching_is_returned():
    G = BipartiteGraph.from_edges(4, 4, [(i, i) for i in range(4)])
    res = max_matching(G)
    assert res.size == 4 and res.pairs == ((0, 0), (1, 1), (2, 2), (3, 3))


def test_graph_validation():
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, ((0, 2),))
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        BipartiteGraph(-1, 2)


def test_lemma_confirmed_instance():
    G = BipartiteGraph.from_edges(2, 3, [(0, 0), (0, 1), (1, 1), (1, 2)])
    rep = lemma3_check(G, 2)
    assert rep.premise and rep.conclusion and rep.verdict == "confirmed" and rep.certified


def test_lemma_vacuous_instance():
    rep = lemma3_check(BipartiteGraph.from_edges(1, 2, [(0, 0)]), 2)
    assert not rep.premise and rep.verdict == "vacuous"


def test_lemma_single_edge_with_t_one():
    rep = lemma3_check(BipartiteGraph.from_edges(2, 3, [(1, 2)]), 1)
    assert rep.verdict == "confirmed"


def test_verdict_labels():
    assert Lemma3Report(True, False, 1, True).verdict == "COUNTEREXAMPLE"
    assert Lemma3Report(True, True, 2, True).verdict == "confirmed"
    assert Lemma3Report(False, False, 0, True).verdict == "vacuous"


def _check_certificate(G):
    res = max_matching(G)
    assert is_matching(G, res.pairs)
    assert is_vertex_cover(G, res.cover_a, res.cover_b)
    assert res.size == res.cover_size == len(res.pairs)
    return res


def test_exhaustive_small_graphs_against_brute_force():
    for na in range(4):
        for nb in range(5):
            pairs = list(product(range(na), range(nb)))
            for bits in range(1 << len(pairs)):
                G = BipartiteGraph(na, nb, tuple(e for i, e in enumerate(pairs) if bits >> i & 1))
                res = _check_certificate(G)
                assert res.size == brute.max_matching(na, nb, list(G.edges))
                for t in range(1, na + 1):
                    assert lemma3_check(G, t).verdict != "COUNTEREXAMPLE"


@st.composite
def bipartite_graphs(draw, max_side=8):
    na = draw(st.integers(0, max_side))
    nb = draw(st.integers(0, max_side))
    pairs = list(product(range(na), range(nb)))
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return BipartiteGraph.from_edges(na, nb, sorted(chosen))


@given(bipartite_graphs())
def test_konig_certificate(G):
    res = _check_certificate(G)
    if len(G.edges) <= 12:
        assert res.size == brute.max_matching(G.n_a, G.n_b, list(G.edges))


@given(bipartite_graphs(), st.integers(1, 8))
def test_lemma_never_fails(G, t):
    rep = lemma3_check(G, t)
    assert rep.certified
    if rep.premise:
        assert rep.matching_size >= t


def test_tampered_certificates_are_rejected():
    G = complete_bipartite(2, 2)
    assert not is_matching(G, [(0, 0), (1, 0)])
    assert not is_matching(G, [(0, 5)])
    assert not is_vertex_cover(G, [0], [])
    assert is_vertex_cover(G, [0, 1], [])
