"""Degree conditions: reports, fast path, monotonicity, hypothesis clauses."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bipancyclic import (
    BipartiteDigraph,
    Digraph,
    Theorem,
    check_bk,
    check_theorem_hypotheses,
    check_two_sided_condition,
    complete_bipartite,
    d8,
    directed_cycle,
)
from bipancyclic.conditions import bk_holds
from bipancyclic.errors import BadParams

from test_digraph import bipartite_digraphs


class TestCheckBk:
    def test_d8_satisfies_b1_not_b2(self):
        D = d8()
        r1 = check_bk(D, 1)
        assert r1.holds and r1.threshold == 7 and r1.pairs_checked == 10
        assert (str(r1.worst_pair.u), str(r1.worst_pair.v)) == ("x0", "x2")
        assert r1.worst_degree == 7
        r2 = check_bk(D, 2)
        assert not r2.holds and r2.threshold == 8

    def test_vacuous_on_directed_cycle(self):
        r = check_bk(directed_cycle(4), 1)
        assert r.holds and r.pairs_checked == 0 and r.worst_pair is None

    def test_complete_satisfies_everything_reachable(self):
        D = complete_bipartite(4)
        # every degree is 2a = 8, so margins up to 2 hold
        assert check_bk(D, 0).holds
        assert check_bk(D, 2).holds
        assert not check_bk(D, 3).holds

    def test_bad_params(self):
        with pytest.raises(BadParams):
            check_bk(d8(), -1)
        with pytest.raises(BadParams):
            check_bk(Digraph(2, [("v0", "v1")]), 1)

    def test_worst_pair_is_minimum(self):
        # x0/x1 both dominate y0; degrees differ so the max rules
        D = BipartiteDigraph(
            2, [("x0", "y0"), ("x1", "y0"), ("y0", "x0"), ("y1", "x0")]
        )
        r = check_bk(D, 0)
        assert (str(r.worst_pair.u), str(r.worst_pair.v)) == ("x0", "x1")
        assert r.worst_degree == max(D.degree("x0").total, D.degree("x1").total)

    @given(bipartite_digraphs(min_a=1, max_a=4), st.integers(0, 3))
    def test_fast_path_agrees_with_report(self, D, k):
        assert bk_holds(D, k) == check_bk(D, k).holds

    @given(bipartite_digraphs(min_a=1, max_a=4), st.integers(0, 2))
    def test_monotone_in_k(self, D, k):
        if check_bk(D, k + 1).holds:
            assert check_bk(D, k).holds

    @given(bipartite_digraphs(min_a=1, max_a=4))
    def test_report_against_direct_scan(self, D):
        threshold = 2 * D.a - 2
        violated = any(
            max(D.degree(p.u).total, D.degree(p.v).total) < threshold
            for p in D.dominating_pairs()
        )
        assert check_bk(D, 0).holds == (not violated)


class TestTwoSidedCondition:
    def test_complete_holds(self):
        holds, bad = check_two_sided_condition(complete_bipartite(4))
        assert holds and bad is None

    def test_d8_fails(self):
        holds, bad = check_two_sided_condition(d8())
        assert not holds
        assert (str(bad.u), str(bad.v)) == ("x0", "x2")

    def test_vacuous(self):
        holds, bad = check_two_sided_condition(directed_cycle(5))
        assert holds and bad is None


class TestHypotheses:
    def test_d8_per_claim(self):
        D = d8()
        assert check_theorem_hypotheses(D, Theorem.T1_7).satisfied
        assert check_theorem_hypotheses(D, Theorem.T1_8).satisfied
        assert check_theorem_hypotheses(D, Theorem.T1_9).satisfied
        assert check_theorem_hypotheses(D, Theorem.T1_10).satisfied
        rep = check_theorem_hypotheses(D, Theorem.T1_6)
        assert not rep.satisfied
        assert any("degree condition" in f for f in rep.failures)

    def test_directed_cycle_clauses(self):
        C8 = directed_cycle(4)
        assert check_theorem_hypotheses(C8, Theorem.T1_8).satisfied
        rep = check_theorem_hypotheses(C8, Theorem.T1_10)
        assert rep.failures == ("shape: the digraph is a directed cycle",)
        rep = check_theorem_hypotheses(C8, Theorem.T1_9)
        assert rep.failures == ("cycle premise: no cycle of length 6",)

    def test_small_side(self):
        D = complete_bipartite(3)
        rep = check_theorem_hypotheses(D, Theorem.T1_10)
        assert rep.failures == ("order: needs side size >= 4, got 3",)
        assert check_theorem_hypotheses(D, Theorem.T1_6).satisfied

    def test_not_bipartite(self):
        D = Digraph(3, [("v0", "v1"), ("v1", "v2"), ("v2", "v0")])
        rep = check_theorem_hypotheses(D, Theorem.T1_8)
        assert rep.failures == ("structure: not a balanced bipartite digraph",)

    def test_not_strong(self):
        D = BipartiteDigraph(4, [("x0", "y0")])
        rep = check_theorem_hypotheses(D, Theorem.T1_8)
        assert "connectivity: not strongly connected" in rep.failures

    def test_all_failures_reported(self):
        D = BipartiteDigraph(2, [("x0", "y0"), ("x1", "y0")])
        rep = check_theorem_hypotheses(D, Theorem.T1_8)
        kinds = {f.split(":")[0] for f in rep.failures}
        assert {"connectivity", "order", "degree condition"} <= kinds

    def test_render(self):
        rep = check_theorem_hypotheses(d8(), Theorem.T1_10)
        assert rep.render() == "claim 1.10: hypotheses satisfied"
        rep = check_theorem_hypotheses(directed_cycle(4), Theorem.T1_10)
        assert rep.render().splitlines()[0] == "claim 1.10: hypotheses NOT satisfied"
