"""Theorem verdicts, the 8-vertex-exception recognizer, and the search harness."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipancyclic import (
    BipartiteDigraph,
    D8Isomorphism,
    Digraph,
    DirectedCycleWitness,
    HamiltonianWitness,
    PancyclicCertificate,
    SearchConfig,
    SearchTarget,
    Theorem,
    TheoremVerdict,
    TwoAMinus2Cycle,
    Violation,
    check_cycle,
    check_theorem_hypotheses,
    complete_bipartite,
    d8,
    directed_cycle,
    iso_to_D8,
    run_search,
    sample_digraph,
    sample_seed,
    serialize,
    sweep_arc_subsets,
    verify_theorem,
    write_violations,
)
from bipancyclic.errors import BadConfig
from bipancyclic.naive import naive_isomorphism
from bipancyclic.verify import _EVALUATORS, _certificate

from test_digraph import bipartite_digraphs

D8_ARC_LIST = [(str(u), str(v)) for u, v in d8().arcs()]


class TestVerdicts:
    def test_1_6_complete(self):
        v = verify_theorem(complete_bipartite(4), Theorem.T1_6)
        assert v.outcome == "conclusion"
        assert isinstance(v.conclusion, PancyclicCertificate)
        assert v.conclusion.lengths() == (2, 4, 6, 8)

    def test_1_6_d8_misses_hypotheses(self):
        v = verify_theorem(d8(), Theorem.T1_6)
        assert v.outcome == "hypotheses-not-met" and v.conclusion is None

    def test_1_7_d8_is_the_exception(self):
        v = verify_theorem(d8(), Theorem.T1_7)
        assert isinstance(v.conclusion, D8Isomorphism)

    def test_1_7_complete_is_hamiltonian(self):
        v = verify_theorem(complete_bipartite(4), Theorem.T1_7)
        assert isinstance(v.conclusion, HamiltonianWitness)
        assert v.conclusion.cycle.length == 8

    def test_1_8_directed_cycle(self):
        v = verify_theorem(directed_cycle(4), Theorem.T1_8)
        assert isinstance(v.conclusion, DirectedCycleWitness)
        assert v.conclusion.cycle.length == 8

    def test_1_8_d8(self):
        v = verify_theorem(d8(), Theorem.T1_8)
        assert isinstance(v.conclusion, TwoAMinus2Cycle)
        assert str(v.conclusion.cycle) == "x0 y0 x2 y3 x3 y1"

    def test_1_9_d8(self):
        v = verify_theorem(d8(), Theorem.T1_9)
        assert isinstance(v.conclusion, PancyclicCertificate)
        assert v.conclusion.lengths() == (2, 4, 6)

    def test_1_9_directed_cycle_misses_premise(self):
        v = verify_theorem(directed_cycle(4), Theorem.T1_9)
        assert v.outcome == "hypotheses-not-met"
        assert v.hypotheses.failures == ("cycle premise: no cycle of length 6",)

    def test_1_10_d8(self):
        v = verify_theorem(d8(), Theorem.T1_10)
        assert isinstance(v.conclusion, D8Isomorphism)

    def test_1_10_directed_cycle_excluded(self):
        v = verify_theorem(directed_cycle(4), Theorem.T1_10)
        assert v.hypotheses.failures == ("shape: the digraph is a directed cycle",)

    def test_1_10_complete(self):
        v = verify_theorem(complete_bipartite(4), Theorem.T1_10)
        assert isinstance(v.conclusion, PancyclicCertificate)
        assert v.conclusion.lengths() == (2, 4, 6, 8)
        assert v.conclusion.witness(6) is not None

    def test_outcome_mapping(self):
        hyp = check_theorem_hypotheses(d8(), Theorem.T1_10)
        bad = Violation(claim="x", serialization="y")
        assert TheoremVerdict(Theorem.T1_10, hyp, bad).outcome == "violation"

    def test_certificate_violation_path(self):
        out = _certificate(directed_cycle(4), 8)
        assert isinstance(out, Violation)
        assert out.claim == "no cycle of length 2 (even lengths 2..8 claimed)"

    @settings(max_examples=40)
    @given(bipartite_digraphs(min_a=4, max_a=5), st.sampled_from(list(Theorem)))
    def test_verdicts_total_and_sound(self, D, theorem):
        v = verify_theorem(D, theorem)
        # the claims are proven: random inputs never produce a violation
        assert v.outcome in ("conclusion", "hypotheses-not-met")
        if v.outcome == "hypotheses-not-met":
            assert v.hypotheses.failures
        elif isinstance(v.conclusion, PancyclicCertificate):
            for m, cycle in v.conclusion.cycles:
                assert cycle.length == m
                check_cycle(D, cycle)


def _witness_maps_arcs(witness, D, target):
    """Every arc of D must land on an arc of target under the mapping."""
    for u, v in D.arcs():
        if not target.has_arc(witness.image(u), witness.image(v)):
            return False
    return True


class TestIsoD8:
    def test_identity(self):
        w = iso_to_D8(d8())
        assert w is not None and not w.side_swap
        assert all(u == v for u, v in w.mapping)

    def test_relabelled_x_side(self):
        swap = {"x0": "x1", "x1": "x0"}
        D = BipartiteDigraph(
            4, [(swap.get(u, u), swap.get(v, v)) for u, v in D8_ARC_LIST]
        )
        w = iso_to_D8(D)
        assert w is not None and _witness_maps_arcs(w, D, d8())

    def test_side_flip_recognized(self):
        # the target equals its own side flip, so a side-preserving map
        # exists for the flipped labelling too; only validity is pinned
        flip = lambda s: ("y" if s[0] == "x" else "x") + s[1:]
        D = BipartiteDigraph(4, [(flip(u), flip(v)) for u, v in D8_ARC_LIST])
        w = iso_to_D8(D)
        assert w is not None and _witness_maps_arcs(w, D, d8())

    def test_general_relabelling_recognized(self):
        order = ["v3", "v6", "v0", "v5", "v7", "v1", "v4", "v2"]
        names = {str(v): order[i] for i, v in enumerate(d8().vertices())}
        D = Digraph(8, [(names[u], names[v]) for u, v in D8_ARC_LIST])
        w = iso_to_D8(D)
        assert w is not None and _witness_maps_arcs(w, D, d8())

    def test_near_misses_rejected(self):
        assert iso_to_D8(BipartiteDigraph(4, D8_ARC_LIST[:-1])) is None
        extra = D8_ARC_LIST + [("x0", "y1")]
        assert iso_to_D8(BipartiteDigraph(4, extra)) is None
        assert iso_to_D8(complete_bipartite(3)) is None
        assert iso_to_D8(directed_cycle(4)) is None

    def test_same_degree_multiset_rejected(self):
        # 20 arcs and the right degree multiset, but the wrong structure
        arcs = [
            ("x0", "y2"), ("x1", "y0"), ("x1", "y2"), ("x1", "y3"),
            ("x2", "y0"), ("x2", "y1"), ("x2", "y2"), ("x3", "y0"),
            ("y0", "x0"), ("y0", "x1"), ("y0", "x2"), ("y0", "x3"),
            ("y1", "x1"), ("y1", "x2"), ("y2", "x0"), ("y2", "x1"),
            ("y2", "x2"), ("y2", "x3"), ("y3", "x1"), ("y3", "x2"),
        ]
        D = BipartiteDigraph(4, arcs)
        assert sorted(D.degree(v).total for v in D.vertices()) == sorted(
            d8().degree(v).total for v in d8().vertices()
        )
        assert iso_to_D8(D) is None
        assert naive_isomorphism(D, d8()) is None

    def test_random_relabellings_agree_with_naive(self):
        rng = random.Random(11)
        base = d8()
        for _ in range(25):
            xs = [f"x{i}" for i in range(4)]
            ys = [f"y{i}" for i in range(4)]
            px = rng.sample(range(4), 4)
            py = rng.sample(range(4), 4)
            swap = rng.random() < 0.5
            def rename(s):
                i = int(s[1:])
                if s[0] == "x":
                    return ys[px[i]] if swap else xs[px[i]]
                return xs[py[i]] if swap else ys[py[i]]
            D = BipartiteDigraph(
                4, [(rename(u), rename(v)) for u, v in D8_ARC_LIST]
            )
            w = iso_to_D8(D)
            assert w is not None and _witness_maps_arcs(w, D, base)
            assert naive_isomorphism(D, base) is not None

    def test_random_20_arc_digraphs_agree_with_naive(self):
        rng = random.Random(7)
        slots = [
            (f"x{i}", f"y{j}") for i in range(4) for j in range(4)
        ] + [(f"y{j}", f"x{i}") for i in range(4) for j in range(4)]
        for _ in range(40):
            D = BipartiteDigraph(4, rng.sample(slots, 20))
            assert (iso_to_D8(D) is not None) == (
                naive_isomorphism(D, d8()) is not None
            )


class TestSampling:
    def test_sample_seed_is_stable(self):
        assert sample_seed(0, 4, 0.5, 0) == sample_seed(0, 4, 0.5, 0)
        assert sample_seed(0, 4, 0.5, 0) != sample_seed(0, 4, 0.5, 1)
        assert sample_seed(0, 4, 0.5, 0) != sample_seed(1, 4, 0.5, 0)

    def test_sample_digraph_reproducible(self):
        D1 = sample_digraph(5, 4, 0.5, 17)
        D2 = sample_digraph(5, 4, 0.5, 17)
        assert D1 == D2 and D1.a == 4


class TestSearch:
    CONFIG = SearchConfig(
        target=SearchTarget.T1_9,
        a_values=(4,),
        p_values=(0.7,),
        samples=600,
        seed=3,
    )

    def test_deterministic(self):
        r1 = run_search(self.CONFIG)
        r2 = run_search(self.CONFIG)
        assert r1.render() == r2.render()
        assert r1.samples_run == 600
        assert r1.hypothesis_satisfying > 0
        assert r1.violations == ()

    def test_worker_count_invariant(self):
        serial = run_search(self.CONFIG)
        parallel = run_search(self.CONFIG, workers=2)
        assert serial.render() == parallel.render()

    def test_zero_samples(self):
        r = run_search(SearchConfig(target=SearchTarget.T1_8, samples=0))
        assert r.samples_run == 0 and r.hypothesis_satisfying == 0
        assert len(r.cells) == 9  # full default grid still reported

    def test_render_is_stable_and_excludes_runtime(self):
        r = run_search(self.CONFIG)
        text = r.render()
        assert "runtime" not in text
        assert text.splitlines()[0] == "target: 1.9"
        assert "cell a=4 p=0.7:" in text

    def test_bad_configs(self):
        for cfg in (
            SearchConfig(SearchTarget.T1_8, a_values=()),
            SearchConfig(SearchTarget.T1_8, p_values=()),
            SearchConfig(SearchTarget.T1_8, a_values=(0,)),
            SearchConfig(SearchTarget.T1_8, a_values=(13,)),
            SearchConfig(SearchTarget.T1_8, p_values=(1.5,)),
            SearchConfig(SearchTarget.T1_8, samples=-1),
        ):
            with pytest.raises(BadConfig):
                run_search(cfg)
        with pytest.raises(BadConfig):
            run_search(SearchConfig(SearchTarget.T1_8), workers=0)

    @pytest.mark.parametrize(
        "target,theorem",
        [
            (SearchTarget.T1_8, Theorem.T1_8),
            (SearchTarget.T1_9, Theorem.T1_9),
            (SearchTarget.T1_10, Theorem.T1_10),
        ],
    )
    def test_prefilter_matches_hypotheses(self, target, theorem):
        evaluate = _EVALUATORS[target]
        for i in range(300):
            D = sample_digraph(1, 4, 0.7, i)
            units, claims = evaluate(D)
            assert claims == []
            assert units == int(check_theorem_hypotheses(D, theorem).satisfied)

    def test_lemma_targets_run_clean(self):
        for target in (SearchTarget.L3_2, SearchTarget.L3_3, SearchTarget.L3_4):
            r = run_search(
                SearchConfig(target, a_values=(4,), p_values=(0.7,), samples=200)
            )
            assert r.violations == ()
            assert r.samples_run == 200


class TestViolationFiles:
    def _fake_report(self):
        record_source = run_search(
            SearchConfig(SearchTarget.T1_8, a_values=(4,), p_values=(0.5,), samples=1)
        )
        from bipancyclic import ViolationRecord

        record = ViolationRecord(
            target=SearchTarget.T1_8,
            a=4,
            p=0.5,
            sample_index=3,
            sample_seed=sample_seed(0, 4, 0.5, 3),
            claim="claim 1.8: synthetic record for format checks",
            serialization=serialize(d8()),
            config_seed=0,
        )
        return record_source, record

    def test_repro_command(self):
        _, record = self._fake_report()
        assert record.repro_command() == (
            "bipancyclic search --target 1.8 --a 4 --p 0.5 --samples 4 --seed 0"
        )

    def test_write_violations(self, tmp_path):
        report, record = self._fake_report()
        report = type(report)(
            config=report.config,
            samples_run=report.samples_run,
            hypothesis_satisfying=report.hypothesis_satisfying,
            violations=(record,),
            cells=report.cells,
            runtime_seconds=report.runtime_seconds,
        )
        paths = write_violations(report, tmp_path)
        assert [p.name for p in paths] == ["violation-1_8-a4-p0.5-i3.txt"]
        text = paths[0].read_text()
        lines = text.splitlines()
        assert lines[0] == "# claim 1.8: synthetic record for format checks"
        assert lines[1] == "# repro: " + record.repro_command()
        from bipancyclic import parse

        assert parse(text) == d8()


class TestSweep:
    def test_exhaustive_slice(self):
        free = [("y2", "x2"), ("y3", "x3")]
        base = [a for a in D8_ARC_LIST if a not in free]
        count, satisfying, claims = sweep_arc_subsets(
            SearchTarget.T1_10, 4, base, free
        )
        # only the full d8 arc set is strongly connected
        assert (count, satisfying, claims) == (4, 1, [])

    def test_cap(self):
        with pytest.raises(BadConfig):
            sweep_arc_subsets(SearchTarget.T1_8, 4, [], [("x0", "y0")] * 21)
