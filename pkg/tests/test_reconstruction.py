import pytest
from hypothesis import given, settings

from septamer.families import creature_graph, prism, random_connected_graph, skinny_ladder, theta
from septamer.graph import Graph, GraphInputError, components, is_connected, neighborhood
from septamer.reconstruction import (
    CertificateError,
    DominatedCase,
    ReconstructionCertificate,
    build_certificate,
    check_certificate,
    claim1_creature,
    claim2_creature,
    claim3_creature,
    claim_creatures,
    count_by_reconstruction,
    minimal_connected_dominator,
    recover_separator,
    zeta_pair,
)
from septamer.separators import enumerate_minimal_separators, is_minimal_separator, separates
from septamer.structures import Status, creature_separators, find_creature, verify_creature

from conftest import graphs

# small graphs where each claim construction has something to build
Z_A_FIXTURE = (7, [(0, 1), (0, 2), (1, 3), (1, 5), (2, 4), (2, 6), (3, 4), (3, 5), (5, 6)], [0, 3, 6])
D_FIXTURE = (10, [(0, 1), (0, 3), (0, 4), (0, 6), (0, 9), (1, 2), (1, 3), (1, 6), (1, 8), (2, 4), (2, 5),
                  (2, 8), (2, 9), (3, 7), (4, 5), (4, 7), (4, 9), (5, 8), (6, 9)], [0, 2, 3, 5, 9])
Z_D_FIXTURE = (9, [(0, 3), (0, 4), (0, 6), (0, 8), (1, 5), (1, 6), (1, 7), (2, 4), (2, 5), (2, 7), (2, 8),
                   (3, 7), (3, 8), (4, 5), (5, 6), (7, 8)], [0, 1, 2])


def certificate_for(fixture):
    n, edges, S = fixture
    G = Graph(n, edges)
    ms = is_minimal_separator(G, S)
    assert ms is not None
    c = build_certificate(G, ms)
    assert isinstance(c, ReconstructionCertificate)
    return G, c


def ladder_certificate():
    L = skinny_ladder(3)
    R = L.select(["r1", "r2", "r3"])
    c = build_certificate(L.graph, is_minimal_separator(L.graph, R), L.select(["p1", "p2", "p3"]), L.select(["q1", "q2", "q3"]))
    return L, c


def test_minimal_connected_dominator_examples():
    L = skinny_ladder(3)
    Q = L.select(["q1", "q2", "q3"])
    assert minimal_connected_dominator(L.graph, Q, L.select(["r1", "r2", "r3"])) == Q
    P = prism(3)
    S = P.select(["x1", "x2", "y3"])
    assert minimal_connected_dominator(P.graph, P.select(["y1", "y2"]), S) == P.select(["y1", "y2"])
    T = theta(3, 3)
    assert minimal_connected_dominator(T.graph, {T["y"]}, T.select(["y1", "y2", "y3"])) == {T["y"]}
    with pytest.raises(GraphInputError):
        minimal_connected_dominator(T.graph, {T["y"]}, T.select(["x1"]))


def test_skinny_ladder_certificate():
    L, c = ladder_certificate()
    sel = L.select
    assert c.tB == sel(["q1", "q2", "q3"])
    assert c.u == L["q3"] and c.v == L["r3"]
    assert c.S_u == sel(["r3"]) and c.S_v == frozenset()
    assert c.S_A == frozenset() and c.Z_A == ()
    assert c.D_list == (sel(["p1", "p2"]),)
    assert all(not zs for zs in c.Z_D.values())
    assert c.Q == sel(["r3"]) and c.R == sel(["q3"]) and c.S0 == sel(["r1", "r2"])
    assert zeta_pair(L.graph, c) == (3, 2)
    check_certificate(L.graph, c)
    assert claim1_creature(L.graph, c) is None
    assert claim3_creature(L.graph, c, c.D_list[0]) is None
    w = claim2_creature(L.graph, c)
    assert w is not None and w.k == 1 and verify_creature(L.graph, w)


def test_prism_dominated_case():
    P = prism(3)
    S = P.select(["x1", "x2", "y3"])
    out = build_certificate(P.graph, is_minimal_separator(P.graph, S), P.select(["x3"]), P.select(["y1", "y2"]))
    assert out == DominatedCase(S, P["x3"])


def test_lifted_creature_separators_certify():
    C = creature_graph(3, 1, 1)
    res = find_creature(C.graph, 3)
    for ms in creature_separators(C.graph, res.witness):
        lifted = is_minimal_separator(C.graph, ms.S)
        assert lifted is not None
        c = build_certificate(C.graph, lifted)
        if isinstance(c, ReconstructionCertificate):
            check_certificate(C.graph, c)
            before, after = zeta_pair(C.graph, c)
            assert after < before


def test_claim1_fixture():
    G, c = certificate_for(Z_A_FIXTURE)
    assert len(c.Z_A) == 2
    w = claim1_creature(G, c)
    assert w.k == 2 and verify_creature(G, w)


def test_claim2_fixture():
    G, c = certificate_for(D_FIXTURE)
    assert len(c.D_list) == 2
    w = claim2_creature(G, c)
    assert w.k == 2 and verify_creature(G, w)
    # interiors of the chosen shortest paths avoid every y_D
    interior = w.A - {c.v} - (G.adj[c.v] & c.A)
    assert not (neighborhood(G, interior) & set(w.Y))


def test_claim3_fixture():
    G, c = certificate_for(Z_D_FIXTURE)
    assert (c.u, c.v) == (5, 1) and c.S_B == {0}
    assert c.Z_D == {frozenset({3, 8}): (6,)}
    w = claim3_creature(G, c, frozenset({3, 8}))
    assert w.k == 1 and verify_creature(G, w)
    assert [name for name, _ in claim_creatures(G, c)].count("claim3") == 1


def test_check_certificate_detects_tampering():
    G, c = certificate_for(Z_D_FIXTURE)
    from dataclasses import replace

    with pytest.raises(CertificateError):
        check_certificate(G, replace(c, Q=c.Q - {min(c.Q)}))
    with pytest.raises(CertificateError):
        check_certificate(G, replace(c, S0=c.S0 | {c.v}))


def assert_certificate_invariants(G, c):
    check_certificate(G, c)
    assert c.Q >= c.S_u | c.S_A | c.S_B
    assert c.R >= c.S_v
    side_a = c.A | {c.v}
    side_b = c.tB - {c.u}
    assert separates(G, side_a, side_b, c.S_double_prime)
    for s in c.S_double_prime:
        assert not separates(G, side_a, side_b, c.S_double_prime - {s})
    assert is_connected(G, c.tB)
    assert recover_separator(G, c.key(G)) == c.S
    before, after = zeta_pair(G, c)
    assert after < before
    for _, w in claim_creatures(G, c):
        assert verify_creature(G, w)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=3, max_n=10))
def test_certificate_invariants_on_random_graphs(G):
    for ms in enumerate_minimal_separators(G):
        for i, A in enumerate(ms.full_components):
            for B in ms.full_components[i + 1:]:
                c = build_certificate(G, ms, A, B)
                if isinstance(c, DominatedCase):
                    assert ms.S <= G.adj[c.w]
                else:
                    assert_certificate_invariants(G, c)


@pytest.mark.parametrize("name,G", [
    ("prism(4)", prism(4).graph),
    ("theta(3,3)", theta(3, 3).graph),
    ("skinny_ladder(4)", skinny_ladder(4).graph),
    ("theta(2,5)", theta(2, 5).graph),
])
def test_report_is_clean(name, G):
    report = count_by_reconstruction(G)
    assert report.ok, report.summary()
    assert report.total == report.dominated + report.certified
    assert report.min_zeta_drop is None or report.min_zeta_drop >= 1


def test_skinny_ladder_report_values():
    report = count_by_reconstruction(skinny_ladder(3).graph, k=3)
    s = report.summary()
    assert (s["separators"], s["dominated"], s["certified"], s["max_Z"]) == (20, 9, 11, 2)
    assert s["ok"] and s["Z_below_k_squared"]


def test_zeta_max_filter():
    G = skinny_ladder(4).graph
    full = count_by_reconstruction(G)
    capped = count_by_reconstruction(G, L=1)
    assert capped.total == full.total
    assert capped.above_zeta_max == sum(1 for r in full.records if r.zeta > 1)


@pytest.mark.parametrize("G,k", [(skinny_ladder(4).graph, 3), (skinny_ladder(5).graph, 3), (skinny_ladder(6).graph, 3)])
def test_z_below_k_squared_on_creature_free_graphs(G, k):
    assert find_creature(G, k).status is Status.NONE
    report = count_by_reconstruction(G, k=k)
    assert report.z_bound_holds
    # claims 1 and 3 bound each part below k
    for ms in enumerate_minimal_separators(G):
        c = build_certificate(G, ms)
        if isinstance(c, ReconstructionCertificate):
            assert len(c.Z_A) < k and len(c.D_list) < k
            assert all(len(zs) < k for zs in c.Z_D.values())


def test_random_corpus_reports_are_clean():
    for seed in range(60):
        G = random_connected_graph(4 + seed % 8, 0.35, seed)
        report = count_by_reconstruction(G)
        assert report.ok, (seed, report.summary())
        assert len(components(G)) == 1
