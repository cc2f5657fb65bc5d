from itertools import combinations
from math import comb

import pytest

from pqextremal import Hypergraph, SearchBudget, has_pq_property
from pqextremal.constructions import cycle, phi, phi_construction_exists, split_family_member
from pqextremal.extremal import (
    extremal_number,
    extremal_oracle,
    find_cover_structure,
    oracle_feasible,
    verify_lemma_p3,
)
import brute

# Exhaustive itertools search gives the same numbers; see test_small_values_match_brute_force.
FROZEN = {
    (4, 2, 4, 3): 4,
    (5, 2, 3, 3): 4,
    (5, 2, 5, 3): 7,
    (6, 2, 3, 3): 5,
    (6, 2, 4, 3): 6,
    (6, 2, 6, 3): 11,
    (7, 2, 3, 3): 6,
    (6, 3, 3, 3): 10,
    (6, 3, 5, 5): 10,
    (6, 3, 5, 3): 20,
    (6, 3, 4, 2): 20,
}


@pytest.mark.parametrize("case", [(4, 2, 4, 3), (5, 2, 3, 3), (4, 2, 3, 2), (4, 3, 3, 3), (5, 2, 5, 3)])
def test_small_values_match_brute_force(case):
    assert extremal_number(*case).value == extremal_oracle(*case).value == brute.extremal(*case)


@pytest.mark.parametrize("case,value", sorted(FROZEN.items()))
def test_frozen_values(case, value):
    res = extremal_number(*case)
    assert res.complete and res.value == value
    assert res.witness.num_edges == value and res.witness.n == case[0]
    assert has_pq_property(res.witness, case[2:])


@pytest.mark.parametrize("case", [c for c in FROZEN if comb(c[0], c[1]) <= 15])
def test_oracle_agrees_on_frozen_values(case):
    res = extremal_oracle(*case)
    assert res.method == "oracle" and res.value == FROZEN[case]
    assert has_pq_property(res.witness, case[2:])


def test_oracle_star_for_three_three():
    res = extremal_oracle(5, 2, 3, 3)
    assert res.value == 4


@pytest.mark.parametrize("n,k,p,q", [(3, 3, 3, 2), (4, 4, 5, 3), (2, 2, 2, 2)])
def test_single_full_edge(n, k, p, q):
    assert extremal_oracle(n, k, p, q).value == 1
    assert extremal_number(n, k, p, q).value == 1


def test_oracle_size_guard():
    assert not oracle_feasible(8, 2)
    with pytest.raises(ValueError):
        extremal_oracle(8, 2, 3, 3)


@pytest.mark.parametrize("bad", [(3, 2, 2, 3), (1, 2, 3, 3), (4, 0, 3, 3)])
def test_argument_validation(bad):
    with pytest.raises(ValueError):
        extremal_number(*bad)


def test_value_at_least_phi():
    for (n, k, p, q), value in FROZEN.items():
        if phi_construction_exists(n, k, p, q):
            assert value >= phi(n, k, p, q)


def test_monotone_in_n_and_p():
    values = {}
    for n in range(4, 8):
        for p in range(3, 6):
            values[n, p] = extremal_number(n, 2, p, 3).value
    for n in range(4, 7):
        for p in range(3, 6):
            assert values[n + 1, p] >= values[n, p]
    for n in range(4, 8):
        for p in range(3, 5):
            assert values[n, p + 1] >= values[n, p]


@pytest.mark.parametrize("p", [3, 4, 5, 6])
def test_complete_graph_plus_edge_values(p):
    assert extremal_number(p, 2, p, 3).value == comb(p - 1, 2) + 1


def test_worker_count_does_not_change_anything():
    one = extremal_number(7, 2, 4, 3, SearchBudget(workers=1))
    two = extremal_number(7, 2, 4, 3, SearchBudget(workers=2))
    assert one.to_dict() == two.to_dict()


def test_node_budget_flags_incomplete_result():
    res = extremal_number(7, 2, 5, 3, SearchBudget(max_nodes=64))
    assert not res.complete
    assert has_pq_property(res.witness, (5, 3))
    assert res.value == res.witness.num_edges
    assert res.value >= phi(7, 2, 5, 3)  # the seed is always kept


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(max_seconds=-1)
    with pytest.raises(ValueError):
        SearchBudget(workers=0)


def test_result_json_shape():
    d = extremal_number(5, 2, 3, 3).to_dict()
    assert set(d) == {"n", "k", "p", "q", "value", "complete", "method", "phi", "stats", "witness"}
    assert "elapsed" in extremal_number(5, 2, 3, 3).to_dict(timings=True)
    assert d["phi"] == 4


def test_cover_structure_of_split_member():
    H = split_family_member(8, 2, 2, 1)
    assert find_cover_structure(H, 2, 1).to_list() == [1, 2]


def test_cycle_has_no_cover_structure():
    assert find_cover_structure(cycle(5), 1, 0) is None


def test_cover_structure_of_small_witness():
    # below the large-n regime the witness found here happens to be split on {1,2}
    res = extremal_number(5, 2, 5, 3)
    assert res.witness.edge_lists() == [[1, 2], [1, 3], [2, 3], [1, 4], [2, 4], [1, 5], [2, 5]]
    assert find_cover_structure(res.witness, 2, 0).to_list() == [1, 2]


def test_cover_structure_is_colex_first():
    K4 = Hypergraph.complete(4, 2)
    # every pair misses exactly one edge of K4
    assert find_cover_structure(K4, 2, 1).to_list() == [1, 2]
    assert find_cover_structure(K4, 5, 0) is None


def _brute_lemma5(n):
    pairs = list(combinations(range(n), 2))
    examined = bad = 0
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < 3:
            continue
        deg = [0] * n
        for i, (a, b) in enumerate(pairs):
            if mask >> i & 1:
                deg[a] += 1
                deg[b] += 1
        if sum(1 for d in deg if d) != mask.bit_count():
            continue
        examined += 1
        if max(deg) < 3 and any(d not in (0, 2) for d in deg):
            bad += 1
    return examined, bad


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_lemma5_scan_matches_brute_force(n):
    rep = verify_lemma_p3(n)
    assert (rep.examined, rep.counterexamples) == _brute_lemma5(n)
    assert rep.passed and rep.first_counterexample is None


def test_lemma5_strict_reading_fails_on_triangle_with_pendant():
    rep = verify_lemma_p3(6)
    assert rep.examined == 5337
    assert rep.strict_failures > 0
    assert rep.first_strict_failure == [[1, 2], [1, 3], [2, 3], [1, 4]]


@pytest.mark.slow
def test_lemma5_seven_vertices():
    rep = verify_lemma_p3(7)
    assert (rep.examined, rep.counterexamples, rep.strict_failures) == (105297, 0, 69930)


@pytest.mark.parametrize("n", [2, 8])
def test_lemma5_range(n):
    with pytest.raises(ValueError):
        verify_lemma_p3(n)
