"""Deterministic generators for the named graph families.

Every structured generator returns a :class:`LabeledGraph`, whose label table
names the role of each vertex (``"x3"``, ``"p2"``, ``"r1"`` ...).  Random
generators are pure functions of their parameters and seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, GraphInputError


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if sorted(self.labels.values()) != list(range(self.graph.n)):
            raise GraphInputError("labels must be a bijection onto the vertex set")

    def __getitem__(self, name: str) -> int:
        return self.labels[name]

    def ids(self, names: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.labels[s] for s in names)

    def select(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.ids(names))

    def name_of(self, v: int) -> str:
        for name, idx in self.labels.items():
            if idx == v:
                return name
        raise KeyError(v)


def _build(names: list[str], edges: list[tuple[str, str]]) -> LabeledGraph:
    labels = {name: i for i, name in enumerate(names)}
    return LabeledGraph(Graph(len(names), [(labels[a], labels[b]) for a, b in edges]), labels)


def prism(k: int) -> LabeledGraph:
    """The (k,1)-prism: cliques on x1..xk and y1..yk joined by the matching xi-yi."""
    if k < 3:
        raise GraphInputError(f"prisms are defined for k >= 3, got {k}")
    xs = [f"x{i}" for i in range(1, k + 1)]
    ys = [f"y{i}" for i in range(1, k + 1)]
    edges = []
    for side in (xs, ys):
        edges += [(side[i], side[j]) for i in range(k) for j in range(i + 1, k)]
    edges += list(zip(xs, ys))
    return _build(xs + ys, edges)


def theta(k: int, path_len: int) -> LabeledGraph:
    """k internally disjoint induced paths of ``path_len`` edges between poles x and y.

    Internal vertices of path i are ``p{i}_1 .. p{i}_{path_len-1}`` counted from
    x.  For ``path_len == 3`` they are named ``x{i}`` and ``y{i}`` instead.
    """
    if k < 1:
        raise GraphInputError(f"theta needs k >= 1, got {k}")
    if path_len < 2:
        raise GraphInputError(f"path_len must be >= 2 so the poles are non-adjacent, got {path_len}")
    names = ["x", "y"]
    edges = []
    for i in range(1, k + 1):
        if path_len == 3:
            inner = [f"x{i}", f"y{i}"]
        else:
            inner = [f"p{i}_{j}" for j in range(1, path_len)]
        names += inner
        route = ["x"] + inner + ["y"]
        edges += list(zip(route, route[1:]))
    return _build(names, edges)


def skinny_ladder(k: int) -> LabeledGraph:
    """Paths p1..pk and q1..qk with rungs pi-ri-qi; vertices ordered p, q, r."""
    if k < 1:
        raise GraphInputError(f"skinny ladder needs k >= 1, got {k}")
    ps = [f"p{i}" for i in range(1, k + 1)]
    qs = [f"q{i}" for i in range(1, k + 1)]
    rs = [f"r{i}" for i in range(1, k + 1)]
    edges = list(zip(ps, ps[1:])) + list(zip(qs, qs[1:]))
    edges += list(zip(ps, rs)) + list(zip(qs, rs))
    return _build(ps + qs + rs, edges)


def creature_graph(k: int, a_size: int, b_size: int) -> LabeledGraph:
    """A canonical k-creature.

    A is the path a1..a{a_size}, B the path b1..b{b_size}; X = x1..xk and
    Y = y1..yk are independent, xi-yi is a perfect matching, every xi sees
    the A-endpoint a{a_size} and every yi sees the B-endpoint b1.
    """
    if k < 1 or a_size < 1 or b_size < 1:
        raise GraphInputError("creature_graph needs k, a_size, b_size >= 1")
    a = [f"a{i}" for i in range(1, a_size + 1)]
    b = [f"b{i}" for i in range(1, b_size + 1)]
    xs = [f"x{i}" for i in range(1, k + 1)]
    ys = [f"y{i}" for i in range(1, k + 1)]
    edges = list(zip(a, a[1:])) + list(zip(b, b[1:])) + list(zip(xs, ys))
    edges += [(a[-1], x) for x in xs] + [(b[0], y) for y in ys]
    return _build(a + b + xs + ys, edges)


def random_interval_graph(n: int, seed: int) -> Graph:
    """Intersection graph of ``n`` closed integer intervals drawn from ``seed``."""
    if n < 1:
        raise GraphInputError(f"need n >= 1, got {n}")
    rng = random.Random(seed)
    spans = []
    for _ in range(n):
        left = rng.randrange(0, 3 * n)
        spans.append((left, left + rng.randrange(0, n)))
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if spans[i][0] <= spans[j][1] and spans[j][0] <= spans[i][1]
    ]
    return Graph(n, edges)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"cycles need n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gnp_random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """A random spanning tree on ``n`` vertices plus independent extra edges with probability ``p``."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return Graph(n, sorted(edges))


FAMILIES = ("prism", "theta", "skinny-ladder", "creature", "interval")
