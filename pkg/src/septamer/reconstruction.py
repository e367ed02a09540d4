"""Reconstruction certificates for minimal separators.

Given a minimal separator S with full components A and B, the certificate
fixes a connected B-part dominating S, a leaf ``u`` of it and a private
neighbour ``v`` of ``u`` in S, then covers most of S by a set Q of
neighbourhood traces and R = N(v) ∩ S'' (with S'' a minimal separator near
``v``).  What is left, S0 = S \\ Q \\ R, is a minimal separator of
G0 = G - (Q ∪ R) with a strictly smaller zeta value, and S is recovered as
N(A) for a component A of G - Q - R - S0.

Every free choice is fixed by a vertex-order rule so certificates are
reproducible.  Certificates are checked line by line before they are
returned; a failure raises :class:`CertificateError`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .graph import (
    Graph,
    GraphInputError,
    bfs_distances,
    components,
    dominates,
    induced_subgraph,
    is_connected,
    neighborhood,
    vset,
)
from .separators import (
    MinimalSeparator,
    enumerate_minimal_separators,
    full_components,
    minimal_separator_within,
    separates,
)
from .structures import CreatureWitness, verify_creature
from .zeta import zeta


class CertificateError(AssertionError):
    """A certificate invariant failed; this indicates an implementation bug."""


@dataclass(frozen=True)
class DominatedCase:
    """S lies inside N(w) for a vertex w outside S."""

    S: frozenset[int]
    w: int


@dataclass(frozen=True)
class ReconstructionCertificate:
    S: frozenset[int]
    A: frozenset[int]
    B: frozenset[int]
    tB: frozenset[int]
    u: int
    v: int
    S_u: frozenset[int]
    S_v: frozenset[int]
    S_A: frozenset[int]
    S_B: frozenset[int]
    Z_A: tuple[int, ...]
    D_list: tuple[frozenset[int], ...]
    Z_D: dict[frozenset[int], tuple[int, ...]]
    Q: frozenset[int]
    S_prime: frozenset[int]
    S_double_prime: frozenset[int]
    R: frozenset[int]
    S0: frozenset[int]
    dominated_check: bool = True

    @property
    def Z(self) -> frozenset[int]:
        out = {self.u, *self.Z_A}
        for zs in self.Z_D.values():
            out.update(zs)
        return frozenset(out)

    @property
    def removed(self) -> frozenset[int]:
        """Q ∪ R, the vertices deleted to form G0."""
        return self.Q | self.R

    def key(self, G: Graph) -> tuple:
        """(u, v, Q, R, S0, position of A among the components of G - Q - R - S0)."""
        comps = components(G, self.Q | self.R | self.S0)
        return (
            self.u,
            self.v,
            tuple(sorted(self.Q)),
            tuple(sorted(self.R)),
            tuple(sorted(self.S0)),
            comps.index(self.A),
        )


def recover_separator(G: Graph, key: tuple) -> frozenset[int]:
    """Invert :meth:`ReconstructionCertificate.key`: S is N(A) for the indexed component."""
    _, _, Q, R, S0, a_index = key
    comps = components(G, set(Q) | set(R) | set(S0))
    return neighborhood(G, comps[a_index])


def greedy_minimal(
    G: Graph, pool: Iterable[int], target: Iterable[int], connected: bool = False
) -> frozenset[int]:
    """Delete vertices from ``pool`` in descending order while it still dominates ``target``.

    With ``connected`` the set must also stay connected, and passes repeat
    until nothing more can go.  The result is inclusion-minimal.
    """
    current = set(pool)
    target = frozenset(target)
    changed = True
    while changed:
        changed = False
        for x in sorted(current, reverse=True):
            rest = current - {x}
            if not rest and target:
                continue
            if connected and rest and not is_connected(G, rest):
                continue
            if dominates(G, rest, target):
                current = rest
                changed = True
        if not connected:
            break
    return frozenset(current)


def minimal_connected_dominator(G: Graph, B: Iterable[int], S: Iterable[int]) -> frozenset[int]:
    """An inclusion-minimal connected subset of ``B`` whose neighbourhood contains ``S``."""
    B, S = vset(G, B), vset(G, S)
    if not B or not is_connected(G, B):
        raise GraphInputError("B must be a nonempty connected set")
    if not S <= neighborhood(G, B):
        raise GraphInputError("B does not dominate S")
    return greedy_minimal(G, B, S, connected=True)


def find_dominating_vertex(G: Graph, S: frozenset[int]) -> int | None:
    for w in range(G.n):
        if w not in S and S <= G.adj[w]:
            return w
    return None


def _removable(G: Graph, T: frozenset[int]) -> int:
    for t in sorted(T, reverse=True):
        rest = T - {t}
        if not rest or is_connected(G, rest):
            return t
    raise CertificateError("a connected set always has a removable vertex")


def _private_neighbours(G: Graph, Z: Iterable[int], target: frozenset[int]) -> tuple[int, ...]:
    """For each z (in order), the smallest target vertex adjacent to z and to no other member."""
    Z = list(Z)
    out = []
    for z in Z:
        others = set(Z) - {z}
        private = [t for t in sorted(target & G.adj[z]) if not (G.adj[t] & others)]
        if not private:
            raise CertificateError(f"vertex {z} of a minimal dominating set has no private neighbour")
        out.append(private[0])
    return tuple(out)


def build_certificate(
    G: Graph, ms: MinimalSeparator | Iterable[int], A: Iterable[int] | None = None, B: Iterable[int] | None = None
) -> ReconstructionCertificate | DominatedCase:
    """Build and check the certificate of a minimal separator.

    ``A`` and ``B`` default to the first two full components.  Returns a
    :class:`DominatedCase` when some vertex outside S sees all of S.
    """
    S = vset(G, ms.S if isinstance(ms, MinimalSeparator) else ms)
    if not S:
        raise GraphInputError("separator must be nonempty")
    full = full_components(G, S)
    if A is None or B is None:
        if len(full) < 2:
            raise GraphInputError("S is not a minimal separator")
        A, B = full[0], full[1]
    A, B = vset(G, A), vset(G, B)
    if A not in full or B not in full or A == B:
        raise GraphInputError("A and B must be distinct full components of G - S")

    w = find_dominating_vertex(G, S)
    if w is not None:
        return DominatedCase(S, w)

    tB = minimal_connected_dominator(G, B, S)
    u = _removable(G, tB)
    rest_b = tB - {u}
    if not rest_b:
        # |tB| = 1 means u dominates S, which the dominated case already caught
        raise CertificateError("degenerate tB after the dominated-case filter")
    private = sorted((S & G.adj[u]) - neighborhood(G, rest_b))
    if not private:
        raise CertificateError("u has no private neighbour in S")
    v = private[0]

    Nv = G.adj[v]
    S_u = G.adj[u] & S
    S_v = (Nv & S) - S_u
    rest = S - S_u - S_v
    a_side_nbrs = Nv - S - B
    S_A = frozenset(s for s in rest if G.adj[s] & a_side_nbrs)
    rest = rest - S_A
    b_side_nbrs = Nv & B
    S_B = frozenset(s for s in rest if G.adj[s] & b_side_nbrs)

    Z_A = tuple(sorted(greedy_minimal(G, a_side_nbrs, S_A))) if S_A else ()

    D_target = S - S_u - S_v - S_A
    all_d = components(G, (frozenset(range(G.n)) - A) | Nv)
    D_list = _minimal_component_cover(G, all_d, D_target)

    Z_D = {}
    for D in D_list:
        target = neighborhood(G, D) & S_B
        Z_D[D] = tuple(sorted(greedy_minimal(G, b_side_nbrs, target))) if target else ()

    Z = {u, *Z_A}
    for zs in Z_D.values():
        Z.update(zs)
    Q = frozenset().union(*(G.adj[z] & S for z in Z))

    S_prime = (S - {v}) | (Nv & B)
    S_dp = minimal_separator_within(G, A | {v}, rest_b, S_prime)
    R = Nv & S_dp
    S0 = S - Q - R

    cert = ReconstructionCertificate(
        S=S, A=A, B=B, tB=tB, u=u, v=v,
        S_u=S_u, S_v=S_v, S_A=S_A, S_B=S_B,
        Z_A=Z_A, D_list=D_list, Z_D=Z_D, Q=Q,
        S_prime=S_prime, S_double_prime=S_dp, R=R, S0=S0,
    )
    check_certificate(G, cert)
    return cert


def _minimal_component_cover(
    G: Graph, comps: list[frozenset[int]], target: frozenset[int]
) -> tuple[frozenset[int], ...]:
    if not target:
        return ()
    chosen = list(comps)
    if not dominates(G, frozenset().union(*chosen), target):
        raise CertificateError("components of A - N(v) do not dominate the remaining separator")
    for C in sorted(comps, key=min, reverse=True):
        trial = [D for D in chosen if D != C]
        if trial and dominates(G, frozenset().union(*trial), target):
            chosen = trial
    return tuple(sorted(chosen, key=min))


def _fail(line: str):
    raise CertificateError(line)


def check_certificate(G: Graph, c: ReconstructionCertificate) -> None:
    """Re-derive every certificate invariant from ``G`` alone."""
    S = c.S
    full = full_components(G, S)
    if c.A not in full or c.B not in full:
        _fail("A and B are full components of G - S")
    if not (c.tB <= c.B and is_connected(G, c.tB) and S <= neighborhood(G, c.tB)):
        _fail("tB is a connected subset of B dominating S")
    for t in c.tB:
        rest = c.tB - {t}
        if rest and is_connected(G, rest) and S <= neighborhood(G, rest):
            _fail("tB is inclusion-minimal")
    rest_b = c.tB - {c.u}
    if not rest_b or not is_connected(G, rest_b):
        _fail("tB - u is nonempty and connected")
    if c.v not in (S & G.adj[c.u]) - neighborhood(G, rest_b):
        _fail("v is a private neighbour of u in S")
    Nv = G.adj[c.v]
    if c.S_u != G.adj[c.u] & S or c.S_v != (Nv & S) - c.S_u:
        _fail("S_u and S_v follow their definitions")
    parts = [c.S_u, c.S_v, c.S_A, c.S_B]
    if sum(map(len, parts)) != len(frozenset().union(*parts)) or not frozenset().union(*parts) <= S:
        _fail("S_u, S_v, S_A, S_B are pairwise disjoint subsets of S")
    if c.Z_A:
        if not (set(c.Z_A) <= Nv - S - c.B and dominates(G, c.Z_A, c.S_A)):
            _fail("Z_A lies in N(v) - S - B and dominates S_A")
    elif c.S_A:
        _fail("Z_A is empty only when S_A is")
    if c.D_list:
        d_target = S - c.S_u - c.S_v - c.S_A
        if not dominates(G, frozenset().union(*c.D_list), d_target):
            _fail("the family D dominates S - S_u - S_v - S_A")
        for D in c.D_list:
            if not (D <= c.A and not (D & Nv) and is_connected(G, D)):
                _fail("every D is a component of G[A - N(v)]")
            if not set(c.Z_D[D]) <= Nv & c.B:
                _fail("Z_D lies in N(v) ∩ B")
            if not dominates(G, c.Z_D[D], neighborhood(G, D) & c.S_B):
                _fail("Z_D dominates N(D) ∩ S_B")
    if not (c.S_u | c.S_A | c.S_B) <= c.Q:
        _fail("Q contains S_u, S_A and S_B")
    if c.Q != frozenset().union(*(G.adj[z] & S for z in c.Z)):
        _fail("Q is the union of the traces of Z")
    if not separates(G, c.A | {c.v}, rest_b, c.S_double_prime) or not c.S_double_prime <= c.S_prime:
        _fail("S'' is a subset of S' separating A + v from tB - u")
    for s in c.S_double_prime:
        if separates(G, c.A | {c.v}, rest_b, c.S_double_prime - {s}):
            _fail("S'' is inclusion-minimal")
    if not c.S_v <= c.R or c.R != Nv & c.S_double_prime:
        _fail("R = N(v) ∩ S'' contains S_v")
    if c.S0 != S - c.Q - c.R or c.S0 & (c.S_u | c.S_v | c.S_A | c.S_B):
        _fail("S0 = S - Q - R avoids S_u, S_v, S_A, S_B")
    excluded = c.Q | c.R | c.S0
    comps = components(G, excluded)
    if c.A not in comps:
        _fail("A is a component of G0 - S0")
    b0 = [C for C in comps if rest_b <= C]
    if not b0 or not c.S0 <= neighborhood(G, b0[0]) or not c.S0 <= neighborhood(G, c.A):
        _fail("A and the component holding tB - u are full to S0")
    if neighborhood(G, c.A) != S:
        _fail("S is recovered as N(A)")


def zeta_pair(G: Graph, c: ReconstructionCertificate) -> tuple[int, int]:
    """(zeta_G(S), zeta_G0(S0)) with G0 = G - (Q ∪ R)."""
    before = zeta(G, c.S).value
    keep = frozenset(range(G.n)) - c.removed
    G0, index = induced_subgraph(G, keep)
    after = zeta(G0, [index[s] for s in c.S0]).value
    return before, after


def claim1_creature(G: Graph, c: ReconstructionCertificate) -> CreatureWitness | None:
    """({v}, tB - u, Z_A, private neighbours of Z_A in S_A), or None when Z_A is empty."""
    if not c.Z_A:
        return None
    Y = _private_neighbours(G, c.Z_A, c.S_A)
    return CreatureWitness(frozenset([c.v]), c.tB - {c.u}, tuple(c.Z_A), Y)


def claim2_creature(G: Graph, c: ReconstructionCertificate) -> CreatureWitness | None:
    """A |D|-creature from the component cover of S - S_u - S_v - S_A, or None if D is empty."""
    if not c.D_list:
        return None
    target = c.S - c.S_u - c.S_v - c.S_A
    anchors = G.adj[c.v] & c.A
    dist = bfs_distances(G, anchors, c.A)
    A_part = {c.v, *anchors}
    X, Y, paths = [], [], []
    for D in c.D_list:
        others = frozenset().union(*(E for E in c.D_list if E != D))
        y = min(t for t in target if G.adj[t] & D and not G.adj[t] & others)
        x = min(G.adj[y] & D, key=lambda z: (dist[z], z))
        path = _shortest_interior(G, x, dist, c.A)
        X.append(x)
        Y.append(y)
        paths.append(path)
        A_part.update(path)
    for path in paths:
        if any(G.adj[p] & set(Y) for p in path):
            raise CertificateError("a shortest path interior touches some y_D")
    return CreatureWitness(frozenset(A_part), c.tB - {c.u}, tuple(X), tuple(Y))


def _shortest_interior(G: Graph, x: int, dist: dict[int, int], within: frozenset[int]) -> frozenset[int]:
    """Interior of a shortest path from x down to distance 0, stepping to the smallest predecessor."""
    interior = []
    cur = x
    while dist[cur] > 1:
        cur = min(y for y in G.adj[cur] if y in within and dist.get(y) == dist[cur] - 1)
        interior.append(cur)
    return frozenset(interior)


def claim3_creature(G: Graph, c: ReconstructionCertificate, D: frozenset[int]) -> CreatureWitness | None:
    """({v}, D, Z_D, private neighbours of Z_D in N(D) ∩ S_B), or None when Z_D is empty."""
    zs = c.Z_D.get(D, ())
    if not zs:
        return None
    Y = _private_neighbours(G, zs, neighborhood(G, D) & c.S_B)
    return CreatureWitness(frozenset([c.v]), D, tuple(zs), Y)


def claim_creatures(G: Graph, c: ReconstructionCertificate) -> list[tuple[str, CreatureWitness]]:
    out = []
    w = claim1_creature(G, c)
    if w is not None:
        out.append(("claim1", w))
    w = claim2_creature(G, c)
    if w is not None:
        out.append(("claim2", w))
    for D in c.D_list:
        w = claim3_creature(G, c, D)
        if w is not None:
            out.append(("claim3", w))
    return out


@dataclass
class SeparatorRecord:
    S: frozenset[int]
    kind: str
    zeta: int
    zeta0: int | None = None
    z_size: int | None = None
    key: tuple | None = None
    dominator: int | None = None


@dataclass
class ReconstructionReport:
    n: int
    k: int | None
    zeta_max: int | None
    records: list[SeparatorRecord] = field(default_factory=list)
    claim5_violations: int = 0
    key_collisions: int = 0
    recovery_failures: int = 0
    creature_failures: int = 0
    creatures_checked: int = 0
    trace_failures: int = 0
    creatures_by_claim: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def dominated(self) -> int:
        return sum(r.kind == "dominated" for r in self.records)

    @property
    def certified(self) -> int:
        return sum(r.kind == "certified" for r in self.records)

    @property
    def above_zeta_max(self) -> int:
        return sum(r.kind == "above-zeta-max" for r in self.records)

    @property
    def max_z(self) -> int:
        return max((r.z_size for r in self.records if r.z_size is not None), default=0)

    @property
    def max_zeta_drop(self) -> int:
        drops = [r.zeta - r.zeta0 for r in self.records if r.zeta0 is not None]
        return max(drops, default=0)

    @property
    def min_zeta_drop(self) -> int | None:
        drops = [r.zeta - r.zeta0 for r in self.records if r.zeta0 is not None]
        return min(drops, default=None)

    def zeta_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(r.zeta for r in self.records).items()))

    @property
    def z_bound_holds(self) -> bool | None:
        if self.k is None:
            return None
        return self.max_z < self.k * self.k

    @property
    def ok(self) -> bool:
        return not (
            self.claim5_violations or self.key_collisions or self.recovery_failures
            or self.creature_failures or self.trace_failures
        )

    def summary(self) -> dict:
        return {
            "n": self.n,
            "separators": self.total,
            "dominated": self.dominated,
            "certified": self.certified,
            "above_zeta_max": self.above_zeta_max,
            "max_Z": self.max_z,
            "max_zeta_drop": self.max_zeta_drop,
            "min_zeta_drop": self.min_zeta_drop,
            "zeta_histogram": {str(k): v for k, v in self.zeta_histogram().items()},
            "claim5_violations": self.claim5_violations,
            "key_collisions": self.key_collisions,
            "recovery_failures": self.recovery_failures,
            "creatures_checked": self.creatures_checked,
            "creatures_by_claim": dict(sorted(self.creatures_by_claim.items())),
            "creature_failures": self.creature_failures,
            "trace_failures": self.trace_failures,
            "k": self.k,
            "Z_below_k_squared": self.z_bound_holds,
            "zeta_max": self.zeta_max,
            "ok": self.ok,
        }


def count_by_reconstruction(G: Graph, k: int | None = None, L: int | None = None) -> ReconstructionReport:
    """Certify every minimal separator of ``G`` and tally the outcome.

    Separators with zeta above ``L`` (when given) are only counted.  For the
    rest: dominated ones must appear among the traces of their dominating
    vertex; certified ones must show a strict zeta drop, a key that recovers
    S and differs from every other key, and valid creatures from each claim
    construction that has a nonempty witness.
    """
    report = ReconstructionReport(G.n, k, L)
    keys: dict[tuple, frozenset[int]] = {}
    for ms in enumerate_minimal_separators(G):
        z = zeta(G, ms.S).value
        if L is not None and z > L:
            report.records.append(SeparatorRecord(ms.S, "above-zeta-max", z))
            continue
        result = build_certificate(G, ms)
        if isinstance(result, DominatedCase):
            # S is its own trace at the dominating vertex
            if G.adj[result.w] & ms.S != ms.S:
                report.trace_failures += 1
            report.records.append(SeparatorRecord(ms.S, "dominated", z, dominator=result.w))
            continue
        before, after = zeta_pair(G, result)
        if after >= before:
            report.claim5_violations += 1
        key = result.key(G)
        if key in keys and keys[key] != ms.S:
            report.key_collisions += 1
        keys[key] = ms.S
        if recover_separator(G, key) != ms.S:
            report.recovery_failures += 1
        for name, w in claim_creatures(G, result):
            report.creatures_checked += 1
            report.creatures_by_claim[name] += 1
            if not verify_creature(G, w):
                report.creature_failures += 1
        report.records.append(
            SeparatorRecord(ms.S, "certified", before, after, len(result.Z), key)
        )
    return report
