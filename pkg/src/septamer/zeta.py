"""Exact computation of the zeta invariant of a vertex set.

zeta_G(S) is the largest independent I ⊆ S such that no vertex outside S
has two neighbours in I.  Equivalently it is the independence number of the
conflict graph on S where two members conflict when adjacent or when they
share a neighbour outside S.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphInputError, is_independent, vset

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class ZetaCertificate:
    S: frozenset[int]
    I: frozenset[int]

    @property
    def value(self) -> int:
        return len(self.I)


def conflict_graph(G: Graph, S: Iterable[int]) -> dict[int, frozenset[int]]:
    S = vset(G, S)
    conflicts = {s: set(G.adj[s] & S) for s in S}
    for w in range(G.n):
        if w in S:
            continue
        inner = sorted(G.adj[w] & S)
        for i, a in enumerate(inner):
            for b in inner[i + 1:]:
                conflicts[a].add(b)
                conflicts[b].add(a)
    return {s: frozenset(c) for s, c in conflicts.items()}


def zeta(G: Graph, S: Iterable[int]) -> ZetaCertificate:
    """Maximum witness by branch and bound over the conflict graph.

    Members of S are branched in increasing index order, include-first, so
    the first maximum found is the lexicographically smallest one.
    """
    S = vset(G, S)
    conflicts = conflict_graph(G, S)
    order = sorted(S)
    best: list[int] = []

    def search(pos: int, chosen: list[int], blocked: frozenset[int]):
        nonlocal best
        free = [s for s in order[pos:] if s not in blocked]
        if len(chosen) + len(free) <= len(best):
            return
        if not free:
            best = list(chosen)
            return
        s = free[0]
        nxt = order.index(s) + 1
        chosen.append(s)
        search(nxt, chosen, blocked | conflicts[s])
        chosen.pop()
        search(nxt, chosen, blocked | {s})

    search(0, [], frozenset())
    return ZetaCertificate(S, frozenset(best))


def is_zeta_witness(G: Graph, S: Iterable[int], I: Iterable[int]) -> bool:
    """Check the two defining conditions of a witness directly from ``G``."""
    S, I = vset(G, S), vset(G, I)
    if not I <= S or not is_independent(G, I):
        return False
    return all(len(G.adj[w] & I) <= 1 for w in range(G.n) if w not in S)


def zeta_brute(G: Graph, S: Iterable[int]) -> int:
    """Scan all subsets of S with bitmasks; refuses sets larger than 20."""
    S = sorted(vset(G, S))
    if len(S) > BRUTE_FORCE_LIMIT:
        raise GraphInputError(f"zeta brute force refused for |S|={len(S)}")
    s_mask = sum(1 << s for s in S)
    outside = [G.masks[w] & s_mask for w in range(G.n) if not s_mask >> w & 1]
    best = 0
    for bits in range(1 << len(S)):
        size = bin(bits).count("1")
        if size <= best:
            continue
        I = 0
        for j, s in enumerate(S):
            if bits >> j & 1:
                I |= 1 << s
        if any(G.masks[s] & I for j, s in enumerate(S) if bits >> j & 1):
            continue
        if any(bin(o & I).count("1") > 1 for o in outside):
            continue
        best = size
    return best
