import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parityfactor.catalog import graph_catalog
from parityfactor.errors import EdgeNotInGraph
from parityfactor.finder import find_parity_factor, verify_factor
from parityfactor.graph import build_graph, complete_bipartite_graph, complete_graph, cycle_graph, gnp_graph
from parityfactor.oracle import ParitySpec, brute_force_factor, make_certificate

from conftest import SPEC_GRID, graphs


def ab(g, a, b):
    return ParitySpec.from_ab(g.n, a, b)


def test_k4_perfect_matching(K4):
    out = find_parity_factor(K4, ab(K4, 1, 1))
    assert out.exists and len(out.factor) == 2
    assert len({v for e in out.factor for v in e}) == 4


def test_k25_has_no_24_factor():
    g = complete_bipartite_graph(2, 5)
    out = find_parity_factor(g, ab(g, 2, 4), want_certificate=True)
    assert not out.exists
    assert brute_force_factor(g, ab(g, 2, 4)) is None
    assert out.certificate is not None and out.certificate.eta < 0


def test_cycle_two_factor(C6):
    assert find_parity_factor(C6, ab(C6, 2, 2)).factor == C6.edges


class TestVerify:
    def test_examples(self, C6, K4):
        assert verify_factor(C6, ab(C6, 2, 2), C6.edges)
        assert verify_factor(K4, ab(K4, 1, 1), [(0, 1), (2, 3)])
        assert not verify_factor(K4, ab(K4, 1, 1), [(0, 1), (1, 2)])

    def test_wrong_parity(self, K4):
        assert not verify_factor(K4, ab(K4, 1, 3), [(0, 1), (0, 2), (1, 2), (2, 3), (0, 3)])

    def test_edge_outside_graph(self, P3):
        with pytest.raises(EdgeNotInGraph):
            verify_factor(P3, ab(P3, 1, 1), [(0, 2)])


class TestEarlyExits:
    def test_infeasible_vertex(self, P3):
        out = find_parity_factor(P3, ab(P3, 2, 2), want_certificate=True)
        assert out.reason == "infeasible_vertex"
        assert out.certificate.eta < 0

    def test_odd_g_sum(self, P3):
        out = find_parity_factor(P3, ab(P3, 1, 1))
        assert out.reason == "odd_g_sum" and out.certificate is None

    def test_matching_failure(self):
        g = build_graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])
        out = find_parity_factor(g, ab(g, 1, 3))
        assert out.reason == "no_perfect_matching"

    def test_certificate_size_guard(self):
        g = complete_bipartite_graph(6, 13)
        out = find_parity_factor(g, ab(g, 2, 4), want_certificate=True, cert_max_n=12)
        assert not out.exists and out.certificate is None


def test_disconnected_input():
    g = build_graph(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)])
    out = find_parity_factor(g, ab(g, 2, 2))
    assert out.exists and len(out.factor) == 7


def test_general_spec():
    # leaves need exactly one edge, so the centre's degree equals the number of such leaves
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    spec = ParitySpec([1, 1, 1, 1], [3, 1, 1, 1])
    out = find_parity_factor(g, spec)
    assert out.factor == g.edges
    spec = ParitySpec([0, 1, 1, 0], [2, 1, 1, 2])
    out = find_parity_factor(g, spec)
    assert out.factor == ((0, 1), (0, 2))


def test_agrees_with_brute_force():
    for n in range(1, 7):
        for g in graph_catalog(n):
            for a, b in SPEC_GRID:
                spec = ab(g, a, b)
                out = find_parity_factor(g, spec, want_certificate=True)
                assert out.exists == (brute_force_factor(g, spec) is not None)
                if out.exists:
                    assert verify_factor(g, spec, out.factor)
                else:
                    cert = out.certificate
                    assert cert == make_certificate(g, spec, cert.S, cert.T)
                    assert cert.eta < 0


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), st.sampled_from(SPEC_GRID))
def test_global_parity(g, spec_ab):
    spec = ab(g, *spec_ab)
    if sum(spec.g) % 2:
        assert not find_parity_factor(g, spec).exists


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=8), st.sampled_from(SPEC_GRID), st.randoms(use_true_random=False))
def test_monotone_under_edge_addition(g, spec_ab, rnd):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing:
        return
    spec = ab(g, *spec_ab)
    if find_parity_factor(g, spec).exists:
        assert find_parity_factor(g.with_edge(*rnd.choice(missing)), spec).exists


def test_large_instance_is_fast():
    import time

    g = gnp_graph(56, "9/10", seed=2)
    start = time.perf_counter()
    out = find_parity_factor(g, ab(g, 2, 4))
    assert time.perf_counter() - start < 1.0
    assert out.exists and verify_factor(g, ab(g, 2, 4), out.factor)


def test_complete_graph_k_factors():
    for n in range(4, 12):
        g = complete_graph(n)
        for k in range(1, n):
            out = find_parity_factor(g, ab(g, k, k))
            assert out.exists == (n * k % 2 == 0)
