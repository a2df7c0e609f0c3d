from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import kirchhoff_by_hand, oriented, signed_graphs
from sfk import graphs
from sfk.core import (IN, OUT, Edge, Flow, Mode, SignedGraph, check_orientation, equivalent_to_at_most_one_negative,
                      is_balanced, make_all_positive_values, switch, switch_orientation, verify_flow)
from sfk.errors import OrientationError, PreconditionError
from sfk.oracle import exists_k_flow, naive_exists_flow


def triangle(neg=()):
    return SignedGraph.build(3, [(0, 1), (1, 2), (2, 0)]).with_negatives(neg)


class TestGraphModel:
    def test_edge_ids_dense_and_checked(self):
        g = SignedGraph.build(2, [(0, 1, -1), (1, 1, 1)])
        assert g.m == 2 and g.negative_edges == (0,)
        with pytest.raises(PreconditionError):
            SignedGraph(2, (Edge(0, 2, 1),))
        with pytest.raises(PreconditionError):
            SignedGraph(2, (Edge(0, 1, 0),))

    def test_loop_counts_twice_in_degree(self):
        g = SignedGraph(1, (Edge(0, 0, -1),))
        assert g.degree(0) == 2


class TestSwitch:
    def test_triangle_switched_at_one_vertex(self):
        h = switch(triangle(), {0})
        assert [s for _, _, s in h.edges] == [-1, 1, -1]

    def test_empty_and_full_switch_are_identity(self):
        g = graphs.petersen([0, 7])
        assert switch(g, ()) == g
        assert switch(g, range(g.n)) == g

    def test_loop_never_flips(self):
        g = SignedGraph.build(2, [(0, 0, -1), (0, 1)])
        assert switch(g, {0}).edges[0].sign == -1

    def test_out_of_range(self):
        with pytest.raises(PreconditionError):
            switch(triangle(), {3})

    @given(signed_graphs(), st.data())
    def test_involution(self, g, data):
        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        assert switch(switch(g, s), s) == g

    @given(signed_graphs(), st.data())
    def test_orientation_switch_involution_and_consistency(self, g, data):
        o = data.draw(oriented(g))
        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        o2 = switch_orientation(g, o, s)
        check_orientation(switch(g, s), o2)
        assert switch_orientation(g, o2, s) == o

    def test_positive_edge_switched_at_head_becomes_extroverted(self):
        g = SignedGraph.build(2, [(0, 1)])
        assert switch_orientation(g, ((OUT, IN),), {1}) == ((OUT, OUT),)


class TestBalance:
    def test_all_positive(self):
        b = is_balanced(graphs.k4())
        assert b and b.switching == frozenset()

    def test_negative_loop(self):
        b = is_balanced(SignedGraph(1, (Edge(0, 0, -1),)))
        assert not b and b.cycle == (0,)

    def test_c4_one_negative(self):
        b = is_balanced(graphs.cycle(4, [2]))
        assert not b
        assert sorted(b.cycle) == [0, 1, 2, 3]

    @given(signed_graphs())
    def test_witness_switches_to_all_positive(self, g):
        b = is_balanced(g)
        if b:
            assert switch(g, b.switching).negative_edges == ()
        else:
            assert sum(g.sign(e) == -1 for e in b.cycle) % 2 == 1

    @given(signed_graphs(max_n=5, max_m=6))
    def test_matches_cycle_enumeration(self, g):
        # balanced iff every switching-closure class contains the all-positive signature
        by_search = any(not switch(g, s).negative_edges
                        for r in range(g.n + 1) for s in itertools.combinations(range(g.n), r))
        assert bool(is_balanced(g)) == by_search


class TestAtMostOneNegative:
    def test_single_negative(self):
        assert equivalent_to_at_most_one_negative(graphs.k4([3])) == 3

    def test_balanced_gives_none(self):
        assert equivalent_to_at_most_one_negative(graphs.k4()) is None

    def test_k4_two_negatives_at_a_vertex(self):
        g = graphs.k4([0, 1])  # both meet vertex 0
        e = equivalent_to_at_most_one_negative(g)
        assert e is not None
        expected = [x for x in range(g.m) if is_balanced(g.with_negatives({0, 1} ^ {x}))]
        assert e in expected
        assert 2 in expected  # the third edge at vertex 0 closes the star cut


class TestVerifyFlow:
    def test_digon_circulation(self):
        g = graphs.digon()
        assert verify_flow(g, Flow(((OUT, IN), (IN, OUT)), (1, 1), 2))

    def test_zero_value_rejected(self):
        g = graphs.digon()
        check = verify_flow(g, Flow(((OUT, IN), (IN, OUT)), (1, 0), 2))
        assert not check and check.violations[0].kind == "zero"

    def test_bound_rejected(self):
        g = graphs.digon()
        check = verify_flow(g, Flow(((OUT, IN), (IN, OUT)), (2, 2), 2))
        assert not check and {v.kind for v in check.violations} == {"bound"}

    def test_orientation_mismatch_is_an_error(self):
        with pytest.raises(OrientationError):
            verify_flow(graphs.digon(), Flow(((OUT, OUT), (IN, OUT)), (1, 1), 2))

    def test_negative_loop_contributes_twice(self):
        g = SignedGraph.build(2, [(0, 0, -1), (0, 1, 1), (1, 1, -1)])
        f = Flow(((IN, IN), (OUT, IN), (OUT, OUT)), (1, 2, 1), 3)
        assert verify_flow(g, f)

    @given(signed_graphs(max_n=4, max_m=6), st.data(), st.integers(2, 4), st.booleans())
    def test_agrees_with_independent_summation(self, g, data, k, modular):
        o = data.draw(oriented(g))
        vals = data.draw(st.lists(st.integers(-k, k), min_size=g.m, max_size=g.m))
        f = Flow(o, tuple(vals), k, Mode.MOD_K if modular else Mode.INTEGER)
        assert bool(verify_flow(g, f)) == kirchhoff_by_hand(g, f)

    @given(signed_graphs(max_n=5, max_m=7), st.data())
    def test_switching_preserves_flows(self, g, data):
        found = exists_k_flow(g, 6)
        if found.flow is None:
            return
        s = data.draw(st.sets(st.integers(0, g.n - 1)))
        f = found.flow
        moved = Flow(switch_orientation(g, f.orientation, s), f.values, f.k)
        assert verify_flow(switch(g, s), moved)


class TestMakePositive:
    def test_identity_on_positive(self):
        f = Flow(((OUT, IN), (IN, OUT)), (1, 1), 2)
        assert make_all_positive_values(f) == f

    def test_single_negative_value(self):
        f = Flow(((OUT, IN),), (-2,), 3)
        assert make_all_positive_values(f) == Flow(((IN, OUT),), (2,), 3)

    def test_petersen_six_flow(self):
        g = graphs.petersen()
        f = exists_k_flow(g, 6)
        raw = f.flow.reversed_edges(range(0, g.m, 2))
        assert verify_flow(g, raw)
        pos = make_all_positive_values(raw)
        assert verify_flow(g, pos) and all(1 <= x <= 5 for x in pos.values)


@pytest.mark.parametrize("g", [graphs.k33([0, 4]), graphs.petersen([0, 7]), graphs.cube([0, 11]),
                               graphs.doubled_c6()])
def test_negative_values_cancel(g):
    """Introverted values minus extroverted values over the negative edges is zero."""
    for k in range(2, 8):
        f = exists_k_flow(g, k).flow
        if f is None:
            continue
        total = sum(f.values[e] if f.orientation[e][0] is IN else -f.values[e] for e in g.negative_edges)
        assert total == 0


def test_both_introverted_with_positive_values_is_impossible():
    g = graphs.k33([0, 4])
    assert exists_k_flow(g, 6, {0: (None, (IN, IN)), 4: (None, (IN, IN))}).flow is None
    assert not naive_exists_flow(g, 4, prescriptions={0: (None, (IN, IN)), 4: (None, (IN, IN))})
