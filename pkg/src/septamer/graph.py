"""Immutable undirected simple graphs over dense vertex indices.

Vertices are the integers ``0..n-1``.  Vertex sets are plain ``frozenset``
objects; every operation accepts any iterable of indices and normalises it.
Each graph also carries per-vertex neighbour bitmasks, used by the
brute-force oracles and the inner loops that need speed.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable, Iterator

VertexSet = frozenset


class GraphInputError(ValueError):
    """Raised for malformed graphs or vertex sets that fall outside a graph."""


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Instances are immutable; "deleting" vertices is done by passing an
    excluded set to :func:`components` or by taking an induced subgraph.
    """

    __slots__ = ("n", "adj", "masks", "_edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.masks = tuple(_to_mask(s) for s in nbrs)
        self._edge_count = sum(len(s) for s in nbrs) // 2

    @classmethod
    def from_adjacency(cls, adj: Iterable[Iterable[int]]) -> Graph:
        adj = [list(a) for a in adj]
        edges = []
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if not 0 <= v < len(adj):
                    raise GraphInputError(f"neighbour {v} of {u} out of range")
                if u not in adj[v]:
                    raise GraphInputError(f"adjacency not symmetric at ({u}, {v})")
                edges.append((u, v))
        return cls(len(adj), edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_mask(vertices: Iterable[int]) -> int:
    return _to_mask(vertices)


def from_mask(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def vset(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """Normalise ``S`` to a frozenset and range-check it against ``G``."""
    S = frozenset(S)
    for x in S:
        if not (isinstance(x, int) and 0 <= x < G.n):
            raise GraphInputError(f"vertex {x!r} out of range for n={G.n}")
    return S


def neighborhood(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """Open neighbourhood N(S): all neighbours of members of S, minus S."""
    S = vset(G, S)
    out: set[int] = set()
    for x in S:
        out |= G.adj[x]
    return frozenset(out - S)


def closed_neighborhood(G: Graph, S: Iterable[int]) -> frozenset[int]:
    S = vset(G, S)
    return S | neighborhood(G, S)


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` and the old-to-new index map.

    New indices follow the increasing order of the old ones.
    """
    S = vset(G, S)
    index = {old: new for new, old in enumerate(sorted(S))}
    edges = [
        (index[u], index[v])
        for u in sorted(S)
        for v in G.adj[u]
        if v in index and u < v
    ]
    return Graph(len(index), edges), index


def components(G: Graph, excluded: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``G - excluded``, sorted by minimum vertex."""
    excluded = vset(G, excluded)
    seen = set(excluded)
    out = []
    for s in range(G.n):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        out.append(frozenset(comp))
    return out


def component_of(G: Graph, v: int, excluded: Iterable[int] = ()) -> frozenset[int]:
    """The component of ``G - excluded`` containing ``v``."""
    excluded = vset(G, excluded)
    if v in excluded:
        raise GraphInputError(f"vertex {v} is excluded")
    comp = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in G.adj[x]:
            if y not in comp and y not in excluded:
                comp.add(y)
                queue.append(y)
    return frozenset(comp)


def is_connected(G: Graph, S: Iterable[int]) -> bool:
    """True iff ``G[S]`` is connected.  The empty set is rejected."""
    S = vset(G, S)
    if not S:
        raise GraphInputError("connectivity of the empty set is undefined")
    start = min(S)
    reached = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in G.adj[x]:
            if y in S and y not in reached:
                reached.add(y)
                queue.append(y)
    return len(reached) == len(S)


def is_anti_adjacent(G: Graph, S: Iterable[int], T: Iterable[int]) -> bool:
    """True iff no edge of ``G`` joins ``S`` and ``T`` (which must be disjoint)."""
    S, T = vset(G, S), vset(G, T)
    if S & T:
        raise GraphInputError(f"sets overlap on {sorted(S & T)}")
    return all(not (G.adj[x] & T) for x in S)


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    S = vset(G, S)
    return all(not (G.adj[x] & S) for x in S)


def dominates(G: Graph, D: Iterable[int], T: Iterable[int]) -> bool:
    """True iff every vertex of ``T`` has a neighbour in ``D``."""
    D = vset(G, D)
    return all(G.adj[t] & D for t in vset(G, T))


def bfs_distances(G: Graph, sources: Iterable[int], within: Iterable[int]) -> dict[int, int]:
    """Distances from ``sources`` inside ``G[within]`` (sources must lie in ``within``)."""
    within = frozenset(within)
    dist = {s: 0 for s in sources}
    queue = deque(sorted(dist))
    while queue:
        x = queue.popleft()
        for y in sorted(G.adj[x]):
            if y in within and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def connected_supersets(
    G: Graph,
    root: int,
    allowed: Iterable[int],
    banned: Iterable[int] = (),
    prune: Callable[[frozenset[int]], bool] | None = None,
) -> Iterator[frozenset[int]]:
    """Yield every connected subset of ``allowed`` that contains ``root`` exactly once.

    Vertices in ``banned`` are never added.  Sets come out in depth-first
    order, smaller extensions of a set before larger ones along each branch.
    Every set is reached through a chain of connected subsets of itself, so
    a ``prune`` predicate that is monotone under supersets may cut a set
    and all of its extensions.
    """
    allowed = frozenset(allowed)
    banned = frozenset(banned)

    def rec(current, cand, ban):
        if prune is not None and prune(current):
            return
        yield current
        cand = sorted(cand)
        for i, w in enumerate(cand):
            ban_i = ban | frozenset(cand[:i])
            grown = current | {w}
            nxt = (set(cand[i + 1:]) | (G.adj[w] & allowed)) - grown - ban_i
            yield from rec(grown, nxt, ban_i)

    if root not in allowed or root in banned:
        return
    start = frozenset([root])
    yield from rec(start, (G.adj[root] & allowed) - banned, banned)


def complement_of(G: Graph, S: Iterable[int]) -> frozenset[int]:
    return frozenset(range(G.n)) - vset(G, S)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """``G`` followed by a shifted copy of ``H`` (H's vertex i becomes ``G.n + i``)."""
    edges = list(G.edges()) + [(u + G.n, v + G.n) for u, v in H.edges()]
    return Graph(G.n + H.n, edges)


def add_edges(G: Graph, extra: Iterable[tuple[int, int]]) -> Graph:
    return Graph(G.n, list(G.edges()) + list(extra))
