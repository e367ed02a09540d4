import random

import pytest
from hypothesis import given

from septamer.families import complete_graph, gnp_random_graph, path_graph, prism, skinny_ladder
from septamer.graph import GraphInputError
from septamer.zeta import conflict_graph, is_zeta_witness, zeta, zeta_brute

from conftest import graphs_with_subset


def test_zeta_of_empty_set():
    assert zeta(prism(3).graph, set()).value == 0
    assert zeta(prism(3).graph, set()).I == frozenset()


def test_zeta_of_singleton():
    G = prism(4).graph
    for v in range(G.n):
        assert zeta(G, {v}).value == 1


@pytest.mark.parametrize("k", range(1, 6))
def test_skinny_ladder_rungs(k):
    L = skinny_ladder(k)
    R = L.select(f"r{i}" for i in range(1, k + 1))
    cert = zeta(L.graph, R)
    assert cert.value == k and cert.I == R
    assert zeta_brute(L.graph, R) == k


def test_prism_example():
    P = prism(3)
    S = P.select(["x1", "x2", "y3"])
    assert zeta_brute(P.graph, S) == 1
    assert zeta(P.graph, S).value == 1


def test_clique_gives_one():
    G = complete_graph(6)
    assert zeta(G, {1, 3, 4}).value == 1


def test_conflict_graph_shares_outside_neighbour():
    G = path_graph(3)
    assert conflict_graph(G, {0, 2}) == {0: frozenset({2}), 2: frozenset({0})}
    assert conflict_graph(G, {0, 1, 2})[0] == frozenset({1})


def test_brute_force_refuses_large_sets():
    G = complete_graph(22)
    with pytest.raises(GraphInputError):
        zeta_brute(G, range(21))


def test_zeta_matches_brute_force():
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(1, 12)
        G = gnp_random_graph(n, rng.random(), rng.randrange(10**9))
        S = {v for v in range(n) if rng.random() < 0.6}
        cert = zeta(G, S)
        assert cert.value == zeta_brute(G, S)
        assert is_zeta_witness(G, S, cert.I)


@given(graphs_with_subset(max_n=10))
def test_witness_is_valid_and_value_bounded(gs):
    G, S = gs
    cert = zeta(G, S)
    assert is_zeta_witness(G, S, cert.I)
    assert cert.I <= S
    assert (cert.value >= 1) == bool(S)
    assert cert.value <= len(S)


@given(graphs_with_subset(max_n=10))
def test_zeta_monotone_under_subsets(gs):
    G, S = gs
    if S:
        s = min(S)
        assert zeta(G, S - {s}).value <= zeta(G, S).value


def test_witness_rejects_conflicts():
    G = path_graph(3)
    assert not is_zeta_witness(G, {0, 2}, {0, 2})
    assert is_zeta_witness(G, {0, 2}, {0})
