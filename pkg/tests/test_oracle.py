from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import signed_graphs
from sfk import graphs
from sfk.core import IN, OUT, Mode, SignedGraph, is_edge_cut, switch, verify_flow
from sfk.errors import PreconditionError
from sfk.formats import CatalogEntry
from sfk.oracle import (Outcome, Policy, SearchBudget, corpus, exists_k_flow, exists_zk_flow, flow_number,
                        naive_exists_flow, signatures)
from sfk.structure import is_flow_admissible

# K4 with a single negative edge: no integer flow at all, yet value 2 on the
# negative edge closes a Z_4-flow.
ZK_ONLY = (graphs.k4([0]), 4)


class TestExistence:
    def test_digon_two_flow(self):
        r = exists_k_flow(graphs.digon(), 2)
        assert r.outcome is Outcome.YES and verify_flow(graphs.digon(), r.flow)

    def test_petersen_four_and_five(self):
        g = graphs.petersen()
        assert exists_k_flow(g, 4).outcome is Outcome.NO
        r = exists_k_flow(g, 5)
        assert r and verify_flow(g, r.flow)

    def test_k33_two_independent_negatives_no_three_flow(self):
        g = graphs.k33([0, 4])
        assert exists_k_flow(g, 3).outcome is Outcome.NO
        assert not naive_exists_flow(g, 3)

    def test_yes_values_positive(self):
        r = exists_k_flow(graphs.petersen([0, 7]), 6)
        assert all(1 <= x <= 5 for x in r.flow.values)

    def test_prescribed_value_and_orientation(self):
        g = graphs.k4([0, 5])
        r = exists_k_flow(g, 6, {0: (1, (OUT, OUT))})
        assert r and r.flow.values[0] == 1 and r.flow.orientation[0] == (OUT, OUT)
        assert verify_flow(g, r.flow)

    @pytest.mark.parametrize("bad", [{99: 1}, {0: "x"}, {0: (None, None)}, {1: (None, (IN, IN))}])
    def test_malformed_prescriptions(self, bad):
        with pytest.raises(PreconditionError):
            exists_k_flow(graphs.k4([0, 5]), 4, bad)

    def test_budget_gives_indeterminate(self):
        r = exists_k_flow(graphs.petersen(), 4, budget=SearchBudget(node_limit=5))
        assert r.outcome is Outcome.INDETERMINATE and r.flow is None
        assert flow_number(graphs.petersen(), SearchBudget(node_limit=5)) is Outcome.INDETERMINATE


class TestFlowNumber:
    def test_k33_tight(self):
        assert flow_number(graphs.k33([0, 4])) == 4

    def test_doubled_c6(self):
        assert flow_number(graphs.doubled_c6()) == 6

    def test_k4_by_scan(self):
        g = graphs.k4()
        f = flow_number(g)
        assert f == next(k for k in range(2, 8) if naive_exists_flow(g, k))

    def test_inadmissible(self):
        with pytest.raises(PreconditionError):
            flow_number(graphs.k4([0]))

    @given(signed_graphs(max_n=5, max_m=7), st.data())
    def test_switching_invariance(self, g, data):
        if not is_flow_admissible(g):
            return
        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        assert flow_number(g) == flow_number(switch(g, s))


class TestZk:
    @given(signed_graphs(max_n=5, max_m=7), st.integers(2, 5))
    def test_balanced_graphs_agree(self, g, k):
        g = g.underlying()
        assert bool(exists_zk_flow(g, k)) == bool(exists_k_flow(g, k))

    def test_signed_gap_fixture(self):
        g, k = ZK_ONLY
        r = exists_zk_flow(g, k)
        assert r and r.flow.mode is Mode.MOD_K and verify_flow(g, r.flow)
        assert not exists_k_flow(g, k)
        assert not is_flow_admissible(g)

    def test_single_edge_mod_two(self):
        assert exists_zk_flow(SignedGraph.build(2, [(0, 1)]), 2).outcome is Outcome.NO

    @given(signed_graphs(max_n=4, max_m=6), st.integers(2, 4), st.integers(0, 5))
    def test_seed_changes_witness_not_answer(self, g, k, seed):
        a = exists_zk_flow(g, k)
        b = exists_zk_flow(g, k, seed=seed)
        assert bool(a) == bool(b)
        if b:
            assert verify_flow(g, b.flow)


class TestAgainstNaive:
    @given(signed_graphs(max_n=5, max_m=7), st.integers(2, 4), st.sampled_from(list(Mode)))
    def test_agreement(self, g, k, mode):
        search = exists_k_flow if mode is Mode.INTEGER else exists_zk_flow
        r = search(g, k)
        assert bool(r) == naive_exists_flow(g, k, mode)
        if r:
            assert verify_flow(g, r.flow)

    @given(signed_graphs(max_n=4, max_m=6), st.integers(2, 4), st.data())
    def test_agreement_with_prescriptions(self, g, k, data):
        if g.m == 0:
            return
        e = data.draw(st.integers(0, g.m - 1))
        value = data.draw(st.integers(1, k - 1))
        pres = {e: value}
        assert bool(exists_k_flow(g, k, pres)) == naive_exists_flow(g, k, prescriptions=pres)

    @given(signed_graphs(max_n=5, max_m=7), st.integers(2, 5))
    def test_monotone_in_k(self, g, k):
        if exists_k_flow(g, k):
            assert exists_k_flow(g, k + 1)


def orbit_classes(g: SignedGraph) -> int:
    """Switching classes of 2-edge signatures, by trying every vertex subset."""
    pairs = list(itertools.combinations(range(g.m), 2))
    index = {p: i for i, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for s in range(1 << g.n):
        cut = {e for e, (u, v, _) in enumerate(g.edges) if (s >> u & 1) != (s >> v & 1)}
        for p in pairs:
            q = tuple(sorted(set(p) ^ cut))
            if q in index:
                parent[find(index[p])] = find(index[q])
    return len({find(i) for i in range(len(pairs))})


class TestCorpus:
    def test_k4_all_pairs(self):
        out = list(corpus([CatalogEntry("k4", graphs.k4())], 4, Policy.ALL))
        assert len(out) == 15
        assert all(len(x.graph.negative_edges) == 2 for x in out)

    @pytest.mark.parametrize("g", [graphs.k4(), graphs.k33(), graphs.prism(), graphs.theta()])
    def test_canonical_count_matches_orbits(self, g):
        assert len(list(signatures(g, Policy.CANONICAL))) == orbit_classes(g)

    def test_admissible_excludes_adjacent_pairs_on_k4(self):
        g = graphs.k4()
        kept = list(signatures(g, Policy.ADMISSIBLE))
        assert kept
        for p in kept:
            assert not set(g.edges[p[0]][:2]) & set(g.edges[p[1]][:2])
            assert is_flow_admissible(g.with_negatives(p))

    def test_canonical_pairs_pairwise_inequivalent(self):
        g = graphs.cube()
        kept = list(signatures(g, Policy.CANONICAL))
        for a, b in itertools.combinations(kept, 2):
            assert not is_edge_cut(g, set(a) ^ set(b))

    def test_n_max_filter(self):
        entries = [CatalogEntry("k4", graphs.k4()), CatalogEntry("petersen", graphs.petersen())]
        assert {x.name.split(":")[0] for x in corpus(entries, 8, Policy.ALL)} == {"k4"}
