"""Creatures, skinny-ladder induced minors and semi-induced matchings.

Searches are exhaustive up to a work budget.  A search that runs out of
budget reports ``UNKNOWN``, which is never conflated with ``NONE``: a
freeness claim is only made when the search space was exhausted.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

from .graph import (
    Graph,
    GraphInputError,
    components,
    connected_supersets,
    dominates,
    induced_subgraph,
    is_anti_adjacent,
    is_connected,
    neighborhood,
    vset,
)
from .separators import MinimalSeparator, is_minimal_separator, minimal_uv_separator_within

DEFAULT_BUDGET = 200_000


def default_budget() -> int:
    raw = os.environ.get("SEPTAMER_BUDGET_DEFAULT")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise GraphInputError(f"SEPTAMER_BUDGET_DEFAULT must be an integer, got {raw!r}")
    if value < 1:
        raise GraphInputError("SEPTAMER_BUDGET_DEFAULT must be positive")
    return value


class Status(Enum):
    FOUND = "found"
    NONE = "none"
    UNKNOWN = "unknown"


class Verdict(NamedTuple):
    ok: bool
    violated: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CreatureWitness:
    A: frozenset[int]
    B: frozenset[int]
    X: tuple[int, ...]
    Y: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.X)

    def vertices(self) -> frozenset[int]:
        return self.A | self.B | frozenset(self.X) | frozenset(self.Y)

    def to_json(self) -> dict:
        return {"A": sorted(self.A), "B": sorted(self.B), "X": list(self.X), "Y": list(self.Y)}


@dataclass(frozen=True)
class SemiInducedMatching:
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class LadderModel:
    """Branch sets keyed by ladder role: ``("p", i)``, ``("q", i)``, ``("r", i)``, 1-based."""

    k: int
    branch: dict[tuple[str, int], frozenset[int]]

    def to_json(self) -> dict:
        return {f"{role}{i}": sorted(vs) for (role, i), vs in sorted(self.branch.items())}


@dataclass(frozen=True)
class SearchResult:
    status: Status
    witness: CreatureWitness | LadderModel | None = None
    explored: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


def verify_semi_induced_matching(G: Graph, m: SemiInducedMatching | Sequence[tuple[int, int]]) -> bool:
    pairs = m.pairs if isinstance(m, SemiInducedMatching) else tuple(m)
    for i, (x, _) in enumerate(pairs):
        for j, (_, y) in enumerate(pairs):
            if G.has_edge(x, y) != (i == j):
                return False
    return True


def verify_creature(G: Graph, w: CreatureWitness) -> Verdict:
    """Check the creature conditions in order and name the first failure.

    Condition tags: ``"nonempty"``, ``"disjoint"``, ``"(i)"`` connectivity,
    ``"(ii)"`` anti-adjacency, ``"(iii)"`` domination, ``"(iv)"`` matching.
    """
    X, Y = frozenset(w.X), frozenset(w.Y)
    parts = [vset(G, w.A), vset(G, w.B), vset(G, X), vset(G, Y)]
    if not all(parts) or len(X) != len(w.X) or len(Y) != len(w.Y):
        return Verdict(False, "nonempty")
    for P, R in itertools.combinations(parts, 2):
        if P & R:
            return Verdict(False, "disjoint")
    if not (is_connected(G, w.A) and is_connected(G, w.B)):
        return Verdict(False, "(i)")
    if not (is_anti_adjacent(G, w.A, Y | w.B) and is_anti_adjacent(G, w.B, X)):
        return Verdict(False, "(ii)")
    if not (dominates(G, w.A, X) and dominates(G, w.B, Y)):
        return Verdict(False, "(iii)")
    if len(w.X) != len(w.Y) or not verify_semi_induced_matching(G, list(zip(w.X, w.Y))):
        return Verdict(False, "(iv)")
    return Verdict(True)


def _semi_induced_matchings(G: Graph, k: int):
    """Yield semi-induced matchings of size k as (X, Y) tuples.

    Each unordered matching is produced once per orientation of its edges;
    edges are taken in increasing order to avoid permutations.
    """
    arcs = [(x, y) for x in range(G.n) for y in sorted(G.adj[x])]
    edges = sorted({tuple(sorted(a)) for a in arcs})

    def rec(start, X, Y, used):
        if len(X) == k:
            yield tuple(X), tuple(Y)
            return
        for idx in range(start, len(edges)):
            a, b = edges[idx]
            if a in used or b in used:
                continue
            for x, y in ((a, b), (b, a)):
                if any(G.has_edge(x, yy) for yy in Y) or any(G.has_edge(xx, y) for xx in X):
                    continue
                X.append(x)
                Y.append(y)
                used.update((a, b))
                yield from rec(idx + 1, X, Y, used)
                used.difference_update((a, b))
                X.pop()
                Y.pop()

    yield from rec(0, [], [], set())


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.used <= self.limit


def _b_side(G: Graph, allowed_b: frozenset[int], Y: frozenset[int]) -> frozenset[int] | None:
    for C in components(G, frozenset(range(G.n)) - allowed_b):
        if all(G.adj[y] & C for y in Y):
            return C
    return None


def find_creature(G: Graph, k: int, budget: int | None = None) -> SearchResult:
    """Exhaustive k-creature search pivoting on the semi-induced matching.

    For a candidate matching (X, Y), the A side is grown as a connected set
    avoiding X, Y and N(Y) starting from a neighbour of ``X[0]``.  Given A,
    a B side exists iff some component of the vertices avoiding
    X, Y, N(X) and N[A] dominates Y; because that test is monotone in A,
    a failing A prunes all of its extensions.  Every matching and every
    grown A costs one budget unit.
    """
    if k < 1:
        raise GraphInputError(f"creature size must be >= 1, got {k}")
    counter = _Budget(default_budget() if budget is None else budget)
    everything = frozenset(range(G.n))
    for X, Y in _semi_induced_matchings(G, k):
        if not counter.spend():
            return SearchResult(Status.UNKNOWN, explored=counter.used - 1)
        Xs, Ys = frozenset(X), frozenset(Y)
        core = Xs | Ys
        allowed_a = everything - core - neighborhood(G, Ys)
        allowed_b = everything - core - neighborhood(G, Xs)
        b_sides: dict[frozenset[int], frozenset[int] | None] = {}

        def no_b_side(A):
            b_sides[A] = _b_side(G, allowed_b - A - neighborhood(G, A), Ys)
            return b_sides[A] is None

        roots = sorted(G.adj[X[0]] & allowed_a)
        for r_idx, root in enumerate(roots):
            for A in connected_supersets(G, root, allowed_a, banned=roots[:r_idx], prune=no_b_side):
                if not counter.spend():
                    return SearchResult(Status.UNKNOWN, explored=counter.used - 1)
                if all(G.adj[x] & A for x in X):
                    w = CreatureWitness(A, b_sides[A], X, Y)
                    assert verify_creature(G, w), "creature search produced an invalid witness"
                    return SearchResult(Status.FOUND, w, counter.used)
    return SearchResult(Status.NONE, explored=counter.used)


def creature_separators(G: Graph, w: CreatureWitness) -> list[MinimalSeparator]:
    """The 2^k minimal separators of ``G[A ∪ B ∪ X ∪ Y]`` picked by one endpoint per matching edge.

    Separators are reported in the indices of ``G`` (not of the induced
    subgraph); their full components are likewise mapped back.
    """
    verdict = verify_creature(G, w)
    if not verdict:
        raise GraphInputError(f"not a creature: condition {verdict.violated} fails")
    H, index = induced_subgraph(G, w.vertices())
    back = {new: old for old, new in index.items()}
    u, v = index[min(w.A)], index[min(w.B)]
    out = []
    seen = set()
    for choice in itertools.product((0, 1), repeat=w.k):
        T = [index[(w.X[i], w.Y[i])[c]] for i, c in enumerate(choice)]
        S = minimal_uv_separator_within(H, u, v, T)
        cert = is_minimal_separator(H, S)
        if cert is None or S in seen:
            raise AssertionError(f"endpoint choice {choice} did not give a new minimal separator")
        seen.add(S)
        out.append(
            MinimalSeparator(
                frozenset(back[s] for s in S),
                tuple(frozenset(back[c] for c in C) for C in cert.full_components),
            )
        )
    return out


def ladder_roles(k: int) -> list[tuple[str, int]]:
    return [(role, i) for i in range(1, k + 1) for role in ("r", "p", "q")]


def ladder_adjacent(a: tuple[str, int], b: tuple[str, int]) -> bool:
    (ra, ia), (rb, ib) = a, b
    if ra == rb:
        return ra in "pq" and abs(ia - ib) == 1
    if "r" in (ra, rb):
        return ia == ib
    return False


def verify_ladder_model(G: Graph, model: LadderModel) -> Verdict:
    """Check a branch-set model of the k-skinny-ladder from scratch."""
    roles = ladder_roles(model.k)
    if set(model.branch) != set(roles):
        return Verdict(False, "roles")
    sets = [vset(G, model.branch[r]) for r in roles]
    if not all(sets):
        return Verdict(False, "nonempty")
    for P, R in itertools.combinations(sets, 2):
        if P & R:
            return Verdict(False, "disjoint")
    if not all(is_connected(G, P) for P in sets):
        return Verdict(False, "connected")
    for (a, P), (b, R) in itertools.combinations(zip(roles, sets), 2):
        touching = bool(neighborhood(G, P) & R)
        if touching != ladder_adjacent(a, b):
            return Verdict(False, f"adjacency {a}-{b}")
    return Verdict(True)


def find_skinny_ladder_minor(G: Graph, k: int, budget: int | None = None) -> SearchResult:
    """Branch-and-bound search for a k-skinny-ladder induced minor.

    Roles are assigned in the order r1, p1, q1, r2, p2, q2, ...; each
    branch set is a connected set of unused vertices that avoids the closed
    neighbourhoods of assigned non-neighbour roles and, when the role has
    an assigned ladder neighbour, touches it.  Pairwise adjacency is
    checked as soon as both roles are placed.  Each candidate branch set
    costs one budget unit.
    """
    if k < 1:
        raise GraphInputError(f"ladder size must be >= 1, got {k}")
    counter = _Budget(default_budget() if budget is None else budget)
    roles = ladder_roles(k)
    if G.n < len(roles):
        return SearchResult(Status.NONE)
    everything = frozenset(range(G.n))
    assigned: dict[tuple[str, int], frozenset[int]] = {}
    out_of_budget = False

    def place(idx: int, used: frozenset[int]) -> bool:
        nonlocal out_of_budget
        if idx == len(roles):
            return True
        if G.n - len(used) < len(roles) - idx:
            return False
        role = roles[idx]
        forbidden = set(used)
        must_touch = []
        for other, P in assigned.items():
            if ladder_adjacent(role, other):
                must_touch.append(P)
            else:
                forbidden |= P | neighborhood(G, P)
        allowed = everything - forbidden
        if must_touch:
            seeds = sorted(allowed & neighborhood(G, must_touch[0]))
        else:
            seeds = sorted(allowed)
        for s_idx, seed in enumerate(seeds):
            for P in connected_supersets(G, seed, allowed, banned=seeds[:s_idx]):
                if not counter.spend():
                    out_of_budget = True
                    return False
                nbh = neighborhood(G, P)
                if not all(nbh & T for T in must_touch):
                    continue
                assigned[role] = P
                if place(idx + 1, used | P):
                    return True
                del assigned[role]
                if out_of_budget:
                    return False
        return False

    if place(0, frozenset()):
        model = LadderModel(k, dict(assigned))
        assert verify_ladder_model(G, model), "ladder search produced an invalid model"
        return SearchResult(Status.FOUND, model, counter.used)
    if out_of_budget:
        return SearchResult(Status.UNKNOWN, explored=counter.used - 1)
    return SearchResult(Status.NONE, explored=counter.used)
