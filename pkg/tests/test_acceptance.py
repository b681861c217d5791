"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section at the end of the report for one PASS/FAIL line per criterion.
"""

import time

import pytest

from conftest import oracle_catalan, oracle_fc_count
from fullcomm.catalan import catalan, catalan_triangle
from fullcomm.klr import OrientedQuiver, homogeneous_modules, verify_grading, verify_relations
from fullcomm.packets import (
    all_collections, build_packet, packet_size_formula, packet_sizes, packets, phi, rho,
    sigma, tau, verify_identity, verify_packet_sizes, verify_phi_rho, verify_sigma_tau,
    verify_theorem,
)
from fullcomm.weight_graph import (
    Content, build_graph, components, count_homogeneous_components, homogeneous_components,
)
from fullcomm.words import DynkinGraph, homogeneous_forms

# frozen after checking against the (n+3)/2·C_n − 1 oracle and an unpruned scan
FC_COUNTS = {4: 48, 5: 167, 6: 593, 7: 2144, 8: 7864}


@pytest.mark.criterion(1, "FC counts of D_4..D_8 by pruned enumeration (< 5 s)")
def test_fc_counts():
    start = time.perf_counter()
    found = {n: sum(1 for _ in homogeneous_forms(n)) for n in range(4, 9)}
    elapsed = time.perf_counter() - start
    assert found == FC_COUNTS
    assert all(FC_COUNTS[n] == oracle_fc_count(n) for n in FC_COUNTS)
    assert elapsed < 5, f"{elapsed:.2f} s"


@pytest.mark.criterion(2, "type A homogeneous component totals 5, 14, 42 (< 10 s)")
def test_type_a_counts():
    start = time.perf_counter()
    totals = [count_homogeneous_components("A", n) for n in (2, 3, 4)]
    elapsed = time.perf_counter() - start
    assert totals == [5, 14, 42]
    assert elapsed < 10, f"{elapsed:.2f} s"


@pytest.mark.criterion(3, "every collection of D_4..D_8 has C(n,k) elements")
def test_collection_sizes():
    for n in range(4, 9):
        report = verify_theorem(n)
        assert report.ok, report.violations
        assert len(report.checks) == 2 ** (n - 1)
        for check in report.checks:
            assert check.size == oracle_catalan(n, check.k)


D4_PACKETS = {
    0: {
        (4, 2, 1, 3): [(4, 2, 1, 3)],
        (4, 2, 1, 3, 2): [(4, 2, 1, 3, 2)],
        (4, 2, 1, 3, 2, 4): [(4, 2, 1, 3, 2, 4)],
    },
    1: {
        (4, 2, 1): [(4, 2, 1), (3, 4, 2, 1), (2, 3, 4, 2, 1), (1, 2, 3, 4, 2, 1)],
        (4, 2, 3): [(3, 2, 1, 4, 2, 3), (2, 1, 4, 2, 3), (1, 4, 2, 3), (4, 2, 3)],
    },
    2: {
        (4, 2): [(4, 2), (3, 2, 1, 4, 2), (2, 1, 4, 2), (1, 4, 2), (2, 1, 3, 4, 2),
                 (1, 3, 4, 2), (3, 4, 2), (2, 3, 4, 2), (1, 2, 3, 4, 2)],
    },
    3: {
        (4,): [(1, 2, 3, 4), (1, 2, 4), (1, 3, 2, 4), (1, 3, 4), (1, 4), (2, 1, 3, 2, 4),
               (2, 1, 3, 4), (2, 1, 4), (2, 3, 4), (2, 4), (3, 2, 1, 4), (3, 2, 4),
               (3, 4), (4,)],
    },
    4: {
        (): [(1, 2, 3), (1, 2), (1, 3, 2), (1, 3), (1,), (2, 1, 3, 2), (2, 1, 3),
             (2, 1), (2, 3), (2,), (3, 2, 1), (3, 2), (3,), ()],
    },
}


@pytest.mark.criterion(4, "D_4 packet decomposition equals the reference listing")
def test_d4_listing():
    found = {
        p.k: {c.suffix.word: set(c.words) for c in p.collections}
        for p in packets(4)
    }
    expected = {k: {s: set(ws) for s, ws in colls.items()} for k, colls in D4_PACKETS.items()}
    assert found == expected


SIGMA_ROWS = [
    ((3, 2, 1, 5, 3, 2), (3, 2, 1, 5, 3, 4)),
    ((4, 3, 2, 1, 5, 3, 2), (4, 3, 2, 1, 5, 3, 4)),
    ((1, 2, 3, 4, 5, 3, 2), (1, 2, 5, 3, 4)),
    ((2, 1, 4, 5, 3, 2), (2, 1, 4, 3, 2, 5, 3, 4)),
]
TAU_ROWS = [
    ((2, 1, 5, 3, 4), (2, 1, 5, 3, 2)),
    ((2, 5, 3, 4), (2, 3, 4, 5, 3, 2)),
    ((1, 4, 3, 2, 5, 3, 4), (1, 4, 5, 3, 2)),
]


@pytest.mark.criterion(5, "sigma/tau example rows and mutual inverses for n <= 7")
def test_sigma_tau():
    for w, image in SIGMA_ROWS:
        assert sigma(w, 5, 2) == image
    for w, image in TAU_ROWS:
        assert tau(w, 5, 2) == image
    for n in range(4, 8):
        colls = all_collections(n)
        for k in range(1, n - 2):
            dom, cod = colls[(k,)].words, colls[(k + 1, n - 1)].words
            assert sorted(sigma(w, n, k) for w in dom) == sorted(cod)
            assert all(tau(sigma(w, n, k), n, k) == w for w in dom)
            assert all(sigma(tau(v, n, k), n, k) == v for v in cod)
        assert all(rep.ok for rep in verify_sigma_tau(n))


COLL_W1 = {(4, 3, 2, 1, 5, 3, 2, 4), (3, 2, 1, 5, 3, 2, 4), (2, 1, 5, 3, 2, 4),
          (1, 5, 3, 2, 4), (5, 3, 2, 4)}
COLL_W3 = {(4, 2), (3, 2, 1, 4, 2), (2, 1, 4, 2), (1, 4, 2), (2, 1, 3, 4, 2),
          (1, 3, 4, 2), (3, 4, 2), (2, 3, 4, 2), (1, 2, 3, 4, 2)}
COLL_W2 = {(4, 3, 2, 1, 5, 3, 2), (3, 2, 1, 5, 3, 2), (2, 1, 5, 3, 2), (1, 5, 3, 2),
          (5, 3, 2), (3, 2, 1, 4, 5, 3, 2), (2, 1, 4, 5, 3, 2), (1, 4, 5, 3, 2),
          (4, 5, 3, 2), (2, 1, 3, 4, 5, 3, 2), (1, 3, 4, 5, 3, 2), (3, 4, 5, 3, 2),
          (2, 3, 4, 5, 3, 2), (1, 2, 3, 4, 5, 3, 2)}


@pytest.mark.criterion(6, "phi is a bijection with inverse rho; reference lists for n=5, k=2")
def test_phi_rho():
    w1 = set(all_collections(5)[(2, 4)].words)
    w3 = set(all_collections(4)[(2,)].words)
    w2 = set(all_collections(5)[(2,)].words)
    assert (w1, w3, w2) == (COLL_W1, COLL_W3, COLL_W2)
    assert (len(w1), len(w3), len(w2)) == (5, 9, 14)
    assert {phi(w, 5, 2) for w in w1 | w3} == w2
    assert {rho(v, 5, 2) for v in w2} == w1 | w3
    for n in range(5, 8):
        big, small = all_collections(n), all_collections(n - 1)
        for k in range(1, n - 1):
            assert len(big[(k, n - 1)]) + len(small[(k,)]) == len(big[(k,)])
        assert all(rep.ok for rep in verify_phi_rho(n))


@pytest.mark.criterion(7, "identity sum C(n,k)|P(n,k)| = (n+3)/2 C_n - 1 for n = 4..12")
def test_identity():
    for n in range(4, 13):
        report = verify_identity(n)
        lhs = sum(oracle_catalan(n, k) * packet_size_formula(n, k) for k in range(n + 1))
        assert report.ok
        assert report.lhs == report.rhs == lhs == oracle_fc_count(n)
        if n <= 8:
            assert report.enumerated == FC_COUNTS[n]


@pytest.mark.criterion(8, "packet sizes match the closed formula and sum to 2^(n-1)")
def test_packet_sizes():
    assert [build_packet(7, k).size for k in range(8)] == [31, 16, 8, 4, 2, 1, 1, 1]
    table = {4: [3, 2, 1, 1, 1], 5: [7, 4, 2, 1, 1, 1], 6: [15, 8, 4, 2, 1, 1, 1]}
    for n, row in table.items():
        assert [packet_size_formula(n, k) for k in range(n + 1)] == row
    for n in range(4, 13):
        sizes = packet_sizes(n)
        assert sizes == [packet_size_formula(n, k) for k in range(n + 1)]
        assert sum(sizes) == 2 ** (n - 1)
    # the suffix count agrees with the full decomposition where that is cheap
    for n in range(4, 10):
        assert [p.size for p in packets(n)] == packet_sizes(n)
        assert verify_packet_sizes(n) == []


@pytest.mark.criterion(9, "A_3 weight graph of a1+2a2+a3: 12 words, 3 edges, one homogeneous component")
def test_weight_graph_example():
    g = DynkinGraph.type_a(3)
    wg = build_graph(Content((1, 2, 1)), g)
    assert len(wg.vertices) == 12
    assert len(wg.edges) == 3
    assert len(components(wg)) == 9
    assert [set(c.words) for c in homogeneous_components(wg, g)] == [{(2, 1, 3, 2), (2, 3, 1, 2)}]


@pytest.mark.criterion(10, "KLR relations and grading on all A_3, D_4, D_5 modules, both orientations (< 60 s)")
def test_klr_suite():
    start = time.perf_counter()
    graphs = [DynkinGraph.type_a(3), DynkinGraph.type_d(4), DynkinGraph.type_d(5)]
    counts = []
    for g in graphs:
        count = 0
        for q in (OrientedQuiver.default(g), OrientedQuiver.default(g).reversed()):
            for m in homogeneous_modules(g, q):
                assert m.height <= 10
                report = verify_relations(m, q)
                assert report.ok, report.to_json()
                assert verify_grading(m, q).ok
                count += 1
        counts.append(count)
    elapsed = time.perf_counter() - start
    assert counts == [2 * 14, 2 * 48, 2 * 167]
    assert elapsed < 60, f"{elapsed:.2f} s"


TRIANGLE_TOP = [
    [1],
    [1, 1],
    [1, 2, 2],
    [1, 3, 5, 5],
    [1, 4, 9, 14, 14],
    [1, 5, 14, 28, 42, 42],
    [1, 6, 20, 48, 90, 132, 132],
    [1, 7, 27, 75, 165, 297, 429, 429],
]


@pytest.mark.criterion(11, "Catalan triangle: both methods agree for n <= 60; top rows match")
def test_catalan_triangle():
    for n in range(61):
        for k in range(n + 1):
            assert catalan(n, k, "recursive") == catalan(n, k, "closed") == oracle_catalan(n, k)
    assert catalan_triangle(8) == TRIANGLE_TOP
