import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parityfactor.conditions import (
    apex_clique_count,
    build_apex_extremal,
    build_bipartite_extremal,
    check,
    check_li_cai,
    check_main,
    check_nishimura,
    check_odd_lemma,
)
from parityfactor.errors import BadM, BadParity, BadRange, EvenK, KTooSmall
from parityfactor.finder import find_parity_factor
from parityfactor.graph import (
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_connected,
    min_degree,
    path_graph,
)
from parityfactor.oracle import ParitySpec, eta

from conftest import graphs, petersen, star


class TestMain:
    def test_k4_all_hold(self, K4):
        r = check_main(K4, 1, 1)
        assert r.overall and all(c.holds for c in r.clauses)
        assert r.clause("order").slack == 0
        assert r.clause("pair_degree").slack is None

    def test_petersen_order_fails(self):
        r = check_main(petersen(), 3, 3)
        assert not r.clause("order").holds and not r.overall
        # 2*3*10 against 3*6*8
        assert r.clause("order").slack == 60 - 144

    def test_bipartite_pair_fails(self):
        r = check_main(complete_bipartite_graph(6, 13), 2, 4)
        pair = r.clause("pair_degree")
        assert not pair.holds and pair.slack == 6 * 6 - 2 * 19

    def test_bad_parity(self, K4):
        with pytest.raises(BadParity):
            check_main(K4, 1, 2)

    def test_connectivity_informational_by_default(self):
        g = build_graph(8, [(u, v) for u in range(4) for v in range(u + 1, 4)]
                        + [(u, v) for u in range(4, 8) for v in range(u + 1, 8)])
        assert check_main(g, 1, 1).clause("connectivity").informational
        assert not check_main(g, 1, 1, require_connected=True).overall

    def test_threshold_boundaries_are_exact(self):
        # delta = 2 meets a*delta >= a^2+b-a for (2,2) exactly; (2,4) needs delta >= 3
        g = cycle_graph(12)
        assert check_main(g, 2, 2).clause("min_degree").slack == 0
        assert check_main(g, 2, 4).clause("min_degree").slack == -2


class TestNishimura:
    def test_k10(self):
        assert check_nishimura(complete_graph(10), 3).overall

    def test_petersen_pair_fails(self):
        r = check_nishimura(petersen(), 3)
        assert not r.clause("pair_degree").holds and r.clause("order").holds

    def test_k4_order_fails(self, K4):
        assert not check_nishimura(K4, 3).clause("order").holds

    def test_k_too_small(self, K4):
        with pytest.raises(KTooSmall):
            check_nishimura(K4, 2)


class TestLiCai:
    def test_k4(self, K4):
        r = check_li_cai(K4, 1, 2)
        assert r.overall and r.clause("order").slack == 0

    def test_bipartite_pair_fails(self):
        r = check_li_cai(complete_bipartite_graph(20, 61), 1, 3)
        assert not r.clause("pair_degree").holds
        assert r.clause("pair_degree").slack == 4 * 20 - 81

    def test_p3_order_fails(self, P3):
        assert not check_li_cai(P3, 1, 2).clause("order").holds

    def test_bad_range(self, K4):
        with pytest.raises(BadRange):
            check_li_cai(K4, 2, 2)


class TestOddLemma:
    def test_p4_holds_and_has_factor(self):
        g = path_graph(4)
        assert check_odd_lemma(g, 3).overall
        out = find_parity_factor(g, ParitySpec.from_ab(4, 1, 3))
        assert out.factor == ((0, 1), (2, 3))

    def test_star_parity_fails(self):
        assert not check_odd_lemma(star(4), 3).clause("parity").holds

    def test_c6(self, C6):
        r = check_odd_lemma(C6, 3)
        assert r.overall and r.clause("pair_degree").slack == 4 * 2 - 6

    def test_even_k(self, K4):
        with pytest.raises(EvenK):
            check_odd_lemma(K4, 2)


def test_dispatch(K4):
    assert check("main", K4, a=1, b=1).theorem == "main"
    assert check("oddlemma", K4, k=3).overall
    with pytest.raises(ValueError):
        check("other", K4)


def test_report_serializes(K4):
    d = check_main(K4, 1, 1).to_dict()
    assert d["overall"] and [c["name"] for c in d["clauses"]] == [
        "order", "parity", "min_degree", "pair_degree", "connectivity"]


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=9), st.sampled_from([(1, 1), (1, 3), (2, 2), (2, 4), (3, 5)]))
def test_clauses_match_rational_definitions(g, ab):
    from fractions import Fraction

    a, b = ab
    r = check_main(g, a, b)
    n = g.n
    assert r.clause("order").holds == (n >= Fraction(b * (a + b) * (a + b + 2), 2 * a))
    assert r.clause("min_degree").holds == (min_degree(g) >= a + Fraction(b - a, a))
    threshold = Fraction(a * n, a + b)
    pairs_ok = all(max(g.degree(u), g.degree(v)) >= threshold
                   for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v))
    assert r.clause("pair_degree").holds == pairs_ok


class TestBipartiteExtremal:
    def test_examples(self):
        p3 = build_bipartite_extremal(1, 1, 1)
        assert p3.n == 3 and sorted(p3.degrees()) == [1, 1, 2]
        assert build_bipartite_extremal(2, 4, 1).m == 10
        g = build_bipartite_extremal(2, 4, 3)
        assert g == complete_bipartite_graph(6, 13) and g.n == 19 and min_degree(g) == 6

    def test_bad_parity(self):
        with pytest.raises(BadParity):
            build_bipartite_extremal(1, 2, 1)

    @pytest.mark.parametrize("a, b", [(1, 1), (1, 3), (2, 2), (2, 4), (3, 3)])
    def test_near_miss_and_factor_free(self, a, b):
        m = 1
        while m * (a + b) + 1 <= 20:
            g = build_bipartite_extremal(a, b, m)
            n, delta = g.n, min_degree(g)
            assert (a + b) * delta < a * n < (a + b) * (delta + 1)
            assert not find_parity_factor(g, ParitySpec.from_ab(n, a, b)).exists
            m += 1


class TestApexExtremal:
    def test_clique_count(self):
        assert [apex_clique_count(a, b) for a, b in [(2, 4), (2, 2), (3, 5), (1, 1), (1, 3)]] == [2, 1, 3, 0, 2]

    def test_examples(self):
        g = build_apex_extremal(2, 4, 4)
        assert g.n == 9 and g.degree(8) == 2 and min_degree(g) == 2 and is_connected(g)
        g = build_apex_extremal(2, 2, 4)
        assert g.n == 5 and g.degree(4) == 1 and min_degree(g) == 1
        g = build_apex_extremal(3, 5, 6)
        assert g.n == 19 and min_degree(g) == 3

    def test_bad_m(self):
        with pytest.raises(BadM):
            build_apex_extremal(2, 4, 5)
        with pytest.raises(BadM):
            build_apex_extremal(3, 5, 2)

    def test_bad_parity(self):
        with pytest.raises(BadParity):
            build_apex_extremal(2, 3, 4)

    def test_sharpness_up_to_25_vertices(self):
        checked = 0
        for a, b in [(1, 1), (1, 3), (2, 2), (2, 4), (3, 3), (3, 5)]:
            q = apex_clique_count(a, b)
            for m in range(q + 1, 26):
                if m % 2 or q * m + 1 > 25:
                    continue
                g = build_apex_extremal(a, b, m)
                spec = ParitySpec.from_ab(g.n, a, b)
                assert min_degree(g) == q
                assert a * min_degree(g) < a * a + b - a
                assert eta(g, spec, (), (g.n - 1,)) == -a
                assert not find_parity_factor(g, spec).exists
                checked += 1
        assert checked > 10
