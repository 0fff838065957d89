"""Cycle engine: witnesses, spectra, bypasses, and oracle agreement."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipancyclic import (
    BipartiteDigraph,
    Digraph,
    check_cycle,
    check_path,
    complete_bipartite,
    cycle_spectrum,
    cycles_through_vertex,
    d6,
    d8,
    directed_cycle,
    find_bypass,
    find_cycle_of_length,
    is_hamiltonian,
    is_valid_cycle,
    longest_non_hamiltonian_cycle,
)
from bipancyclic.errors import (
    BadLength,
    InvalidCycle,
    PreconditionUnmet,
    TooLarge,
)
from bipancyclic.naive import naive_bypasses, naive_cycle_lengths, naive_find_cycle

from test_digraph import bipartite_digraphs, general_digraphs


class TestFindCycle:
    def test_d8_witnesses_are_lex_min(self):
        D = d8()
        assert str(find_cycle_of_length(D, 2)) == "x0 y0"
        assert str(find_cycle_of_length(D, 4)) == "x0 y0 x1 y1"
        assert str(find_cycle_of_length(D, 6)) == "x0 y0 x2 y3 x3 y1"
        assert find_cycle_of_length(D, 8) is None

    def test_odd_length_none_in_bipartite(self):
        assert find_cycle_of_length(d8(), 3) is None
        assert find_cycle_of_length(d8(), 7) is None

    def test_bad_length(self):
        with pytest.raises(BadLength):
            find_cycle_of_length(d8(), 1)
        with pytest.raises(BadLength):
            find_cycle_of_length(d8(), 9)

    def test_general_digraph_odd_cycles(self):
        tri = Digraph(3, [("v0", "v1"), ("v1", "v2"), ("v2", "v0")])
        assert str(find_cycle_of_length(tri, 3)) == "v0 v1 v2"
        assert find_cycle_of_length(tri, 2) is None

    @given(bipartite_digraphs(min_a=1, max_a=3), st.integers(2, 6))
    def test_matches_naive_oracle(self, D, m):
        if m > D.n:
            return
        got = find_cycle_of_length(D, m)
        want = naive_find_cycle(D, m)
        if want is None:
            assert got is None
        else:
            assert got is not None
            assert got.vertices == want

    @given(general_digraphs(min_n=2, max_n=5), st.integers(2, 5))
    def test_matches_naive_oracle_general(self, D, m):
        if m > D.n:
            return
        got = find_cycle_of_length(D, m)
        want = naive_find_cycle(D, m)
        assert (None if got is None else got.vertices) == want

    @given(bipartite_digraphs(min_a=2, max_a=4))
    def test_witnesses_validate(self, D):
        for m in range(2, D.n + 1, 2):
            cycle = find_cycle_of_length(D, m)
            if cycle is not None:
                check_cycle(D, cycle)


class TestSpectrum:
    def test_d8(self):
        spec = cycle_spectrum(d8())
        assert spec.lengths() == (2, 4, 6)
        assert spec.order == 8 and spec.side_size == 4
        assert not spec.is_even_pancyclic()
        assert str(spec.witness(6)) == "x0 y0 x2 y3 x3 y1"
        assert spec.witness(8) is None

    def test_complete_bipartite_even_pancyclic(self):
        spec = cycle_spectrum(complete_bipartite(4))
        assert spec.lengths() == (2, 4, 6, 8)
        assert spec.is_even_pancyclic()

    def test_directed_cycle(self):
        assert cycle_spectrum(directed_cycle(5)).lengths() == (10,)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            cycle_spectrum(complete_bipartite(13))
        # explicit cap override allows it through on a small digraph
        assert cycle_spectrum(directed_cycle(2), max_n=4).lengths() == (4,)

    @given(bipartite_digraphs(min_a=1, max_a=3))
    def test_lengths_match_naive(self, D):
        assert cycle_spectrum(D).lengths() == naive_cycle_lengths(D)

    @given(general_digraphs(min_n=1, max_n=5))
    def test_lengths_match_naive_general(self, D):
        assert cycle_spectrum(D).lengths() == naive_cycle_lengths(D)


class TestHamiltonian:
    def test_known(self):
        assert is_hamiltonian(complete_bipartite(3))
        assert is_hamiltonian(directed_cycle(4))
        assert not is_hamiltonian(d8())
        assert not is_hamiltonian(d6())
        assert not is_hamiltonian(BipartiteDigraph(1, []))

    def test_longest_non_hamiltonian(self):
        assert longest_non_hamiltonian_cycle(d8()).length == 6
        assert longest_non_hamiltonian_cycle(directed_cycle(4)) is None
        got = longest_non_hamiltonian_cycle(complete_bipartite(4))
        assert got.length == 6
        assert str(got) == "x0 y0 x1 y1 x2 y2"
        with pytest.raises(TooLarge):
            longest_non_hamiltonian_cycle(complete_bipartite(13))


class TestValidators:
    def test_check_cycle_accepts(self):
        C = check_cycle(d8(), ["x1", "y1", "x2", "y3", "x3", "y0"])
        assert C.length == 6
        assert "x1" not in C  # membership is by Vertex, not str
        assert check_cycle(d8(), C) == C

    def test_check_cycle_rejects(self):
        D = d8()
        with pytest.raises(InvalidCycle):
            check_cycle(D, ["x0"])
        with pytest.raises(InvalidCycle):
            check_cycle(D, ["x0", "y0", "x0", "y1"])
        with pytest.raises(InvalidCycle):
            check_cycle(D, ["x0", "y0", "x1"])  # odd in bipartite
        with pytest.raises(InvalidCycle):
            check_cycle(D, ["x0", "y2"])  # no such arcs
        assert not is_valid_cycle(D, ["x0", "y2"])
        assert is_valid_cycle(D, ["x0", "y0"])

    def test_check_path(self):
        P = check_path(d8(), ["y0", "x2", "y3"])
        assert P.length == 2
        with pytest.raises(InvalidCycle):
            check_path(d8(), ["y0", "x0", "y0"])
        with pytest.raises(InvalidCycle):
            check_path(d8(), ["x0", "y2"])


class TestBypass:
    def test_d8_minimal_bypass(self):
        D = d8()
        C = check_cycle(D, ["x1", "y1", "x2", "y3", "x3", "y0"])
        bp = find_bypass(D, C)
        assert bp is not None
        assert bp.gap == 4
        assert str(bp.path) == "x3 y2 x2"
        assert bp.host_cycle == C

    def test_d8_bypass_matches_naive_minimum(self):
        D = d8()
        C = check_cycle(D, ["x1", "y1", "x2", "y3", "x3", "y0"])
        allb = naive_bypasses(D, C.vertices)
        assert allb, "bypass expected"
        best_gap = min(gap for gap, _ in allb)
        bp = find_bypass(D, C)
        assert bp.gap == best_gap
        assert (bp.gap, tuple(bp.path.vertices)) in [
            (gap, path) for gap, path in allb
        ]

    def test_no_bypass(self):
        # a 6-cycle plus an arcless pair: nothing can leave the cycle
        ring = ["x0", "y0", "x1", "y1", "x2", "y2"]
        arcs = list(zip(ring, ring[1:] + ring[:1]))
        D = BipartiteDigraph(4, arcs)
        C = check_cycle(D, ring)
        assert find_bypass(D, C) is None

    def test_hamiltonian_cycle_rejected(self):
        D = complete_bipartite(2)
        C = check_cycle(D, ["x0", "y0", "x1", "y1"])
        with pytest.raises(InvalidCycle):
            find_bypass(D, C)

    @given(bipartite_digraphs(min_a=2, max_a=3))
    @settings(max_examples=60)
    def test_bypass_minimal_and_valid(self, D):
        spec = cycle_spectrum(D)
        for m, C in spec.witnesses:
            if m >= D.n:
                continue
            bp = find_bypass(D, C)
            allb = naive_bypasses(D, C.vertices)
            if bp is None:
                assert allb == []
                continue
            assert min(g for g, _ in allb) == bp.gap
            check_path(D, bp.path.vertices)
            # endpoints on the cycle, interior off it
            assert bp.path.vertices[0] in C.vertices
            assert bp.path.vertices[-1] in C.vertices
            for v in bp.path.vertices[1:-1]:
                assert v not in C.vertices


class TestCyclesThroughVertex:
    def test_full_ladder_on_complete(self):
        D = complete_bipartite(4)
        C = check_cycle(D, ["x0", "y0", "x1", "y1", "x2", "y2"])
        found = cycles_through_vertex(D, C, "x3")
        assert sorted(found) == [2, 4, 6]
        for m, cycle in found.items():
            assert cycle.length == m
            check_cycle(D, cycle)
            assert any(str(v) == "x3" for v in cycle.vertices)

    def test_degree_precondition(self):
        D = d8()
        C = check_cycle(D, ["x1", "y1", "x2", "y3", "x3", "y0"])
        with pytest.raises(PreconditionUnmet) as exc:
            cycles_through_vertex(D, C, "x0")
        assert "got 3" in str(exc.value)

    def test_vertex_on_cycle_rejected(self):
        D = complete_bipartite(4)
        C = check_cycle(D, ["x0", "y0", "x1", "y1", "x2", "y2"])
        with pytest.raises(PreconditionUnmet):
            cycles_through_vertex(D, C, "x0")

    def test_y_side_vertex(self):
        D = complete_bipartite(4)
        C = check_cycle(D, ["x0", "y0", "x1", "y1", "x2", "y2"])
        found = cycles_through_vertex(D, C, "y3")
        assert sorted(found) == [2, 4, 6]
        for cycle in found.values():
            assert any(str(v) == "y3" for v in cycle.vertices)


def test_search_is_exact_on_sparse_instance():
    # a strong digraph with exactly one cycle length available
    D = directed_cycle(6)
    for m in range(2, 12, 2):
        got = find_cycle_of_length(D, m)
        assert (got is not None) == (m == 12)
