import random

import pytest
from hypothesis import strategies as st

from septamer.families import (
    creature_graph,
    prism,
    random_connected_graph,
    random_interval_graph,
    skinny_ladder,
    theta,
)
from septamer.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_subset(draw, min_n=1, max_n=10):
    G = draw(graphs(min_n, max_n))
    S = draw(st.sets(st.integers(0, G.n - 1))) if G.n else set()
    return G, frozenset(S)


def family_corpus(max_n=30):
    """Named family graphs with at most ``max_n`` vertices."""
    out = []
    for k in range(3, 16):
        if 2 * k <= max_n:
            out.append((f"prism({k})", prism(k).graph))
    for k in range(1, 15):
        if 2 * k + 2 <= max_n:
            out.append((f"theta({k},3)", theta(k, 3).graph))
    for k, length in [(2, 5), (3, 4), (2, 9), (4, 5)]:
        G = theta(k, length).graph
        if G.n <= max_n:
            out.append((f"theta({k},{length})", G))
    for k in range(1, 11):
        if 3 * k <= max_n:
            out.append((f"skinny_ladder({k})", skinny_ladder(k).graph))
    for k in range(1, 6):
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                G = creature_graph(k, a, b).graph
                if G.n <= max_n:
                    out.append((f"creature_graph({k},{a},{b})", G))
    for seed in range(10):
        n = 4 + seed % 9
        out.append((f"interval({n},{seed})", random_interval_graph(n, seed)))
    return out


def random_connected_corpus(count=300, max_n=11, seed=0):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(2, max_n)
        p = rng.random() * 0.6
        out.append((f"random({n},{i})", random_connected_graph(n, p, rng.randrange(10**9))))
    return out


@pytest.fixture(scope="session")
def full_corpus():
    return family_corpus(30) + random_connected_corpus()
