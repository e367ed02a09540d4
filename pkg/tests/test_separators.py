import random

import pytest
from hypothesis import given, settings

from septamer.families import (
    complete_graph,
    creature_graph,
    cycle_graph,
    gnp_random_graph,
    path_graph,
    prism,
    skinny_ladder,
    theta,
)
from septamer.graph import GraphInputError, components, neighborhood
from septamer.separators import (
    brute_force_separators,
    count_minimal_separators,
    enumerate_minimal_separators,
    is_minimal_separator,
    minimal_uv_separator_within,
    separates,
    separator_traces,
)

from conftest import graphs


def sets(seps):
    return [ms.S for ms in seps]


def test_is_minimal_separator_examples():
    P = prism(3)
    ms = is_minimal_separator(P.graph, P.select(["x1", "x2", "y3"]))
    assert ms is not None
    assert sorted(ms.full_components, key=min) == [P.select(["x3"]), P.select(["y1", "y2"])]
    assert is_minimal_separator(P.graph, P.select(["x1", "x2", "x3"])) is None
    ms = is_minimal_separator(path_graph(3), {1})
    assert ms is not None and set(ms.full_components) == {frozenset({0}), frozenset({2})}


def test_minimal_uv_separator_examples():
    assert minimal_uv_separator_within(path_graph(5), 0, 4, {1, 2, 3}) == {1}
    T = theta(3, 3)
    internal = frozenset(range(T.graph.n)) - {T["x"], T["y"]}
    assert minimal_uv_separator_within(T.graph, T["x"], T["y"], internal) == T.select(["x1", "x2", "x3"])
    P = prism(3)
    S = P.select(["x1", "x2", "y3"])
    assert minimal_uv_separator_within(P.graph, P["x3"], P["y1"], S) == S
    with pytest.raises(GraphInputError):
        minimal_uv_separator_within(path_graph(5), 0, 4, {2, 4})


@settings(max_examples=150)
@given(graphs(min_n=2, max_n=9))
def test_minimal_uv_separator_is_minimal(G):
    rng = random.Random(G.n * 1000 + G.edge_count)
    for _ in range(5):
        u, v = rng.sample(range(G.n), 2)
        if G.has_edge(u, v):
            continue
        S = frozenset(range(G.n)) - {u, v}
        S = frozenset(x for x in S if rng.random() < 0.8) | (frozenset(range(G.n)) - {u, v} if rng.random() < 0.3 else frozenset())
        if not separates(G, {u}, {v}, S):
            continue
        T = minimal_uv_separator_within(G, u, v, S)
        assert T <= S and separates(G, {u}, {v}, T)
        for t in T:
            assert not separates(G, {u}, {v}, T - {t})
        if T:
            assert is_minimal_separator(G, T) is not None


def test_enumeration_examples():
    for k in (3, 4, 5):
        assert count_minimal_separators(prism(k).graph) == 2 ** k - 2
    assert list(enumerate_minimal_separators(complete_graph(6))) == []
    assert sets(brute_force_separators(cycle_graph(4))) == [{0, 2}, {1, 3}]
    assert sets(brute_force_separators(path_graph(4))) == [{1}, {2}]
    L = skinny_ladder(2)
    assert L.select(["r1", "r2"]) in sets(brute_force_separators(L.graph))


def test_brute_force_refuses_large_graphs():
    with pytest.raises(GraphInputError):
        brute_force_separators(path_graph(21))


def test_enumeration_matches_brute_force_on_random_graphs():
    rng = random.Random(7)
    for i in range(300):
        n = rng.randint(1, 12)
        G = gnp_random_graph(n, rng.random(), rng.randrange(10**9))
        assert sets(enumerate_minimal_separators(G)) == sets(brute_force_separators(G)), (n, list(G.edges()))


@given(graphs(max_n=10))
def test_every_enumerated_separator_has_two_full_components(G):
    seen = set()
    for ms in enumerate_minimal_separators(G):
        assert ms.S and ms.S not in seen
        seen.add(ms.S)
        full = [C for C in components(G, ms.S) if neighborhood(G, C) == ms.S]
        assert len(full) >= 2
        assert is_minimal_separator(G, ms.S) is not None


def test_enumeration_is_sorted():
    for G in (prism(5).graph, skinny_ladder(4).graph, theta(3, 4).graph):
        keys = [ms.sorted_vertices() for ms in enumerate_minimal_separators(G)]
        assert keys == sorted(keys)


@pytest.mark.parametrize("k,count", [(1, 1), (2, 9), (3, 20), (4, 35), (5, 54), (6, 77), (7, 104), (8, 135)])
def test_skinny_ladder_counts(k, count):
    # frozen from enumeration; k <= 4 cross-checked by brute force below
    assert count_minimal_separators(skinny_ladder(k).graph) == count


def test_skinny_ladder_counts_brute_force():
    assert [len(brute_force_separators(skinny_ladder(k).graph)) for k in range(1, 5)] == [1, 9, 20, 35]


@pytest.mark.parametrize("k,a,b,count", [(1, 1, 1, 2), (2, 1, 1, 9), (3, 1, 1, 15), (4, 1, 1, 25),
                                         (1, 2, 2, 4), (2, 2, 2, 11), (3, 2, 2, 17), (4, 2, 2, 27)])
def test_creature_graph_counts(k, a, b, count):
    G = creature_graph(k, a, b).graph
    assert count_minimal_separators(G) == count == len(brute_force_separators(G))


def test_traces_examples():
    P = prism(3)
    x1 = P["x1"]
    traces = separator_traces(P.graph, x1, enumerate_minimal_separators(P.graph))
    assert all(len(t) <= 3 for t in traces)
    assert len(traces) <= 6 ** 4
    assert separator_traces(complete_graph(5), 0, enumerate_minimal_separators(complete_graph(5))) == set()
    P4 = path_graph(4)
    assert separator_traces(P4, 0, enumerate_minimal_separators(P4)) == {frozenset({1}), frozenset()}


@given(graphs(max_n=9))
def test_traces_lie_in_neighbourhood(G):
    seps = list(enumerate_minimal_separators(G))
    for v in range(G.n):
        traces = separator_traces(G, v, seps)
        expected = {ms.S & G.adj[v] for ms in seps if v not in ms.S}
        assert traces == expected
