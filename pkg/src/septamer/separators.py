"""Minimal separators: recognition, enumeration and neighbourhood traces.

The empty set is never reported as a minimal separator, even for
disconnected graphs where it would formally qualify; all counts are of
nonempty separators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import (
    Graph,
    GraphInputError,
    component_of,
    components,
    from_mask,
    neighborhood,
    vset,
)

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class MinimalSeparator:
    S: frozenset[int]
    full_components: tuple[frozenset[int], ...]

    def sorted_vertices(self) -> list[int]:
        return sorted(self.S)


def sort_key(S: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(S))


def full_components(G: Graph, S: Iterable[int]) -> list[frozenset[int]]:
    """Components C of ``G - S`` with ``N(C) == S``, by minimum vertex."""
    S = vset(G, S)
    return [C for C in components(G, S) if neighborhood(G, C) == S]


def is_minimal_separator(G: Graph, S: Iterable[int]) -> MinimalSeparator | None:
    """Return the certificate for ``S`` if it has two or more full components."""
    S = vset(G, S)
    if not S:
        raise GraphInputError("the empty set is excluded from separator queries")
    full = full_components(G, S)
    if len(full) < 2:
        return None
    return MinimalSeparator(S, tuple(full))


def _component_containing(G: Graph, U: frozenset[int], S: frozenset[int]) -> frozenset[int]:
    if not U or U & S:
        raise GraphInputError("side must be nonempty and disjoint from the separator")
    comp = component_of(G, min(U), S)
    if not U <= comp:
        raise GraphInputError("side is not contained in one component of G - S")
    return comp


def minimal_separator_within(
    G: Graph, U: Iterable[int], W: Iterable[int], S: Iterable[int]
) -> frozenset[int]:
    """Shrink ``S`` to an inclusion-minimal subset separating ``U`` from ``W``.

    ``U`` and ``W`` must each lie inside a single component of ``G - S``.
    Trim to the neighbourhood of the U-side component, then to the
    neighbourhood of the W-side component in what remains.
    """
    U, W, S = vset(G, U), vset(G, W), vset(G, S)
    if W & S:
        raise GraphInputError("side must be nonempty and disjoint from the separator")
    side_u = _component_containing(G, U, S)
    if side_u & W:
        raise GraphInputError("S does not separate the two sides")
    trimmed = neighborhood(G, side_u)
    side_w = _component_containing(G, W, trimmed)
    return neighborhood(G, side_w)


def minimal_uv_separator_within(G: Graph, u: int, v: int, S: Iterable[int]) -> frozenset[int]:
    return minimal_separator_within(G, [u], [v], S)


def separates(G: Graph, U: Iterable[int], W: Iterable[int], S: Iterable[int]) -> bool:
    U, W, S = vset(G, U), vset(G, W), vset(G, S)
    if (U | W) & S:
        return False
    return not (component_of(G, min(U), S) & W) if U else True


def _generate(G: Graph) -> Iterator[frozenset[int]]:
    """Discovery-order generation of all nonempty minimal separators.

    Seeds are the neighbourhoods of the components of ``G - N[v]``; the
    closure step pushes each separator S past every x in S by taking the
    neighbourhoods of the components of ``G - (S ∪ N(x))``.
    """
    seen: set[frozenset[int]] = set()
    queue: list[frozenset[int]] = []

    def offer(excluded):
        for C in components(G, excluded):
            S = neighborhood(G, C)
            if S and S not in seen:
                seen.add(S)
                queue.append(S)

    for v in range(G.n):
        offer(G.adj[v] | {v})
    i = 0
    while i < len(queue):
        S = queue[i]
        i += 1
        yield S
        for x in sorted(S):
            offer(S | G.adj[x])


def enumerate_minimal_separators(G: Graph) -> Iterator[MinimalSeparator]:
    """Yield every nonempty minimal separator of ``G`` once, ordered by sorted vertex list."""
    for S in sorted(_generate(G), key=sort_key):
        yield MinimalSeparator(S, tuple(full_components(G, S)))


def count_minimal_separators(G: Graph) -> int:
    return sum(1 for _ in _generate(G))


def brute_force_separators(G: Graph) -> list[MinimalSeparator]:
    """Test every nonempty vertex subset; the ground truth for small graphs.

    Works on bitmasks and shares no code with the enumeration path.
    """
    n = G.n
    if n > BRUTE_FORCE_LIMIT:
        raise GraphInputError(f"brute force refused for n={n} > {BRUTE_FORCE_LIMIT}")
    masks = G.masks
    out = []
    for S in range(1, 1 << n):
        full = []
        remaining = ((1 << n) - 1) & ~S
        while remaining:
            low = remaining & -remaining
            comp = low
            frontier = low
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                nb = masks[bit.bit_length() - 1] & ~S & ~comp
                comp |= nb
                frontier |= nb
            remaining &= ~comp
            nbh = 0
            c = comp
            while c:
                bit = c & -c
                c ^= bit
                nbh |= masks[bit.bit_length() - 1]
            if nbh & ~comp == S:
                full.append(from_mask(comp))
        if len(full) >= 2:
            full.sort(key=min)
            out.append(MinimalSeparator(from_mask(S), tuple(full)))
    out.sort(key=lambda ms: sort_key(ms.S))
    return out


def separator_traces(G: Graph, v: int, seps: Iterable[MinimalSeparator]) -> set[frozenset[int]]:
    """The family {N(v) ∩ S : S a minimal separator with v not in S}."""
    vset(G, [v])
    return {G.adj[v] & ms.S for ms in seps if v not in ms.S}
