"""Maximum weight independent set through potential maximal cliques.

The solver runs a dynamic programme over full blocks (S, C), where S is a
minimal separator and C a full component of S, choosing for each block the
best potential maximal clique Ω with S ⊂ Ω ⊆ S ∪ C.  Each Ω holds at most
one vertex of the independent set; there is always a minimal triangulation
in which an optimal independent set stays independent, which is what makes
this restriction exact.  Running time is polynomial in n and the number of
minimal separators (plus the number of potential maximal cliques).

Weights are exact: ints or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .graph import Graph, GraphInputError, components, from_mask, induced_subgraph, is_independent, to_mask
from .separators import MinimalSeparator, _generate

BRUTE_FORCE_LIMIT = 20
PMC_SCAN_LIMIT = 16


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    weight: tuple[Fraction, ...]

    def __init__(self, graph: Graph, weight: Sequence | None = None):
        if weight is None:
            weight = [1] * graph.n
        if len(weight) != graph.n:
            raise GraphInputError(f"expected {graph.n} weights, got {len(weight)}")
        exact = []
        for w in weight:
            if isinstance(w, float):
                w = Fraction(str(w))
            elif not isinstance(w, Rational):
                w = Fraction(w)
            w = Fraction(w)
            if w < 0:
                raise GraphInputError(f"weights must be non-negative, got {w}")
            exact.append(w)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "weight", tuple(exact))

    def total(self, S: Iterable[int]) -> Fraction:
        return sum((self.weight[v] for v in S), Fraction(0))


@dataclass(frozen=True)
class PotentialMaximalClique:
    Omega: frozenset[int]


def _components_mask(masks: Sequence[int], universe: int) -> list[int]:
    out = []
    rest = universe
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            grow = masks[bit.bit_length() - 1] & rest & ~comp
            comp |= grow
            frontier |= grow
        rest &= ~comp
        out.append(comp)
    return out


def _nbr_mask(masks: Sequence[int], comp: int) -> int:
    out = 0
    c = comp
    while c:
        bit = c & -c
        c ^= bit
        out |= masks[bit.bit_length() - 1]
    return out & ~comp


def _is_pmc_mask(masks: Sequence[int], universe: int, omega: int) -> bool:
    if not omega or omega & ~universe:
        return False
    seps = [_nbr_mask(masks, C) & universe for C in _components_mask(masks, universe & ~omega)]
    if omega in seps:
        return False
    o = omega
    while o:
        bit = o & -o
        o ^= bit
        x = bit.bit_length() - 1
        missing = omega & ~masks[x] & ~bit
        if not missing:
            continue
        covered = 0
        for s in seps:
            if s & bit:
                covered |= s
        if missing & ~covered:
            return False
    return True


def is_pmc(G: Graph, Omega: Iterable[int]) -> bool:
    """Local characterisation of a potential maximal clique.

    (a) no component C of G - Ω has N(C) = Ω, and (b) every non-adjacent
    pair in Ω lies in N(C) for some component C of G - Ω.
    """
    return _is_pmc_mask(G.masks, (1 << G.n) - 1, to_mask(Omega))


def _bfs_order(G: Graph, start: int) -> list[int]:
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in sorted(G.adj[x]):
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def _prefix_separators(G: Graph, prefix: list[int]) -> list[int]:
    H, index = induced_subgraph(G, prefix)
    back = {new: old for old, new in index.items()}
    return [to_mask(back[s] for s in S) for S in _generate(H)]


def _pmcs_connected(G: Graph, order: list[int], final_seps: list[int]) -> set[int]:
    """Incremental listing over a vertex order whose prefixes are connected.

    When vertex a joins prefix G_i to give G_{i+1}, every potential
    maximal clique of G_{i+1} is Ω' or Ω' ∪ {a} for Ω' of G_i, S ∪ {a}, or
    S ∪ (T ∩ C) for minimal separators S, T of G_{i+1} and a full
    component C of S.
    """
    pmcs = {1 << order[0]}
    universe = 1 << order[0]
    for i in range(1, len(order)):
        a = order[i]
        abit = 1 << a
        universe |= abit
        masks = [m & universe for m in G.masks]
        seps = final_seps if i == len(order) - 1 else _prefix_separators(G, order[: i + 1])
        found: set[int] = set()
        tried: set[int] = set()

        def consider(cand):
            if cand not in tried:
                tried.add(cand)
                if _is_pmc_mask(masks, universe, cand):
                    found.add(cand)

        for omega in pmcs:
            consider(omega)
            consider(omega | abit)
        for S in seps:
            consider(S | abit)
            full = [C for C in _components_mask(masks, universe & ~S) if _nbr_mask(masks, C) == S]
            for C in full:
                for T in seps:
                    piece = T & C
                    if piece:
                        consider(S | piece)
        pmcs = found
    return pmcs


def enumerate_pmcs(G: Graph, seps: Iterable[MinimalSeparator] | None = None) -> list[PotentialMaximalClique]:
    """All potential maximal cliques of ``G``, sorted by vertex list.

    ``seps`` must be the complete list of minimal separators of ``G`` when
    given; an incomplete list gives unspecified output.  Disconnected
    graphs are handled component by component.
    """
    if seps is None:
        sep_masks = [to_mask(S) for S in _generate(G)]
    else:
        sep_masks = [to_mask(ms.S) for ms in seps]
    out: set[int] = set()
    for K in components(G):
        kmask = to_mask(K)
        order = _bfs_order(G, min(K))
        out |= _pmcs_connected(G, order, [s for s in sep_masks if s & kmask])
    return [PotentialMaximalClique(from_mask(m)) for m in sorted(out, key=lambda m: sorted(from_mask(m)))]


def brute_force_pmcs(G: Graph) -> list[frozenset[int]]:
    """Scan every nonempty vertex subset with :func:`is_pmc` (n <= 16)."""
    if G.n > PMC_SCAN_LIMIT:
        raise GraphInputError(f"PMC scan refused for n={G.n}")
    universe = (1 << G.n) - 1
    hits = [m for m in range(1, universe + 1) if _is_pmc_mask(G.masks, universe, m)]
    return sorted((from_mask(m) for m in hits), key=sorted)


def _solve_component(WG: WeightedGraph, K: frozenset[int], seps: list[int]) -> tuple[Fraction, int]:
    G = WG.graph
    w = WG.weight
    if len(K) == 1:
        (v,) = K
        return w[v], 1 << v
    kmask = to_mask(K)
    masks = [m & kmask for m in G.masks]
    pmcs = _pmcs_connected(G, _bfs_order(G, min(K)), seps)

    # candidates per full block (S, C): PMCs Ω with S ⊂ Ω ⊆ S ∪ C
    block_pmcs: dict[tuple[int, int], list[int]] = {}
    pmc_parts: dict[int, list[tuple[int, int]]] = {}
    for omega in pmcs:
        parts = []
        for C in _components_mask(masks, kmask & ~omega):
            parts.append((_nbr_mask(masks, C), C))
        pmc_parts[omega] = parts
        for S, _ in parts:
            rest = omega & ~S
            F = next(F for F in _components_mask(masks, kmask & ~S) if F & rest)
            block_pmcs.setdefault((S, F), []).append(omega)

    # table[(S, C)][s] for s in S or None: best weight inside C with I ∩ S = {s} / ∅
    table: dict[tuple[int, int], dict[int | None, tuple[Fraction, int]]] = {}

    def fill(S, C, choice, omega, parts):
        inside = [(Sj, Cj) for Sj, Cj in parts if Cj & C]
        value = w[choice] if choice is not None and not (S >> choice & 1) else Fraction(0)
        chosen = (1 << choice) if choice is not None and not (S >> choice & 1) else 0
        for Sj, Cj in inside:
            sub = table[(Sj, Cj)][choice if choice is not None and Sj >> choice & 1 else None]
            value += sub[0]
            chosen |= sub[1]
        return value, chosen

    for (S, C) in sorted(block_pmcs, key=lambda b: bin(b[0] | b[1]).count("1")):
        row: dict[int | None, tuple[Fraction, int]] = {}
        s_members = [x for x in range(G.n) if S >> x & 1]
        for omega in block_pmcs[(S, C)]:
            parts = pmc_parts[omega]
            extra = [None] + [x for x in range(G.n) if (omega & ~S) >> x & 1]
            for y in extra:
                val = fill(S, C, y, omega, parts)
                if None not in row or val[0] > row[None][0]:
                    row[None] = val
            for s in s_members:
                val = fill(S, C, s, omega, parts)
                if s not in row or val[0] > row[s][0]:
                    row[s] = val
        table[(S, C)] = row

    best = (Fraction(-1), 0)
    for omega in pmcs:
        parts = pmc_parts[omega]
        for y in [None] + [x for x in range(G.n) if omega >> x & 1]:
            value = w[y] if y is not None else Fraction(0)
            chosen = (1 << y) if y is not None else 0
            for Sj, Cj in parts:
                sub = table[(Sj, Cj)][y if y is not None and Sj >> y & 1 else None]
                value += sub[0]
                chosen |= sub[1]
            if value > best[0]:
                best = (value, chosen)
    return best


def solve_mwis(WG: WeightedGraph | Graph, seps: Iterable[MinimalSeparator] | None = None) -> tuple[Fraction, frozenset[int]]:
    """Exact maximum weight independent set; returns (weight, vertex set)."""
    if isinstance(WG, Graph):
        WG = WeightedGraph(WG)
    G = WG.graph
    sep_masks = [to_mask(ms.S) for ms in seps] if seps is not None else [to_mask(S) for S in _generate(G)]
    total = Fraction(0)
    chosen = 0
    for K in components(G):
        kmask = to_mask(K)
        value, picked = _solve_component(WG, K, [s for s in sep_masks if s & kmask])
        total += value
        chosen |= picked
    I = from_mask(chosen)
    if not is_independent(G, I) or WG.total(I) != total:
        raise AssertionError("solver produced an inconsistent independent set")
    return total, I


def brute_mwis(WG: WeightedGraph | Graph) -> Fraction:
    """Best weight over all independent sets, by include/exclude branching (n <= 20)."""
    if isinstance(WG, Graph):
        WG = WeightedGraph(WG)
    G = WG.graph
    if G.n > BRUTE_FORCE_LIMIT:
        raise GraphInputError(f"brute force refused for n={G.n}")

    def best(cand: int) -> Fraction:
        if not cand:
            return Fraction(0)
        bit = cand & -cand
        v = bit.bit_length() - 1
        skip = best(cand & ~bit)
        take = WG.weight[v] + best(cand & ~bit & ~G.masks[v])
        return max(skip, take)

    return best((1 << G.n) - 1)
