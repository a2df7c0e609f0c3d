"""Flow constructions for signed graphs, plus a dispatcher choosing among them."""

from __future__ import annotations

from sfk.builders.bridge import bridge_six_flow
from sfk.builders.colorable import colorable_or_critical_six_flow
from sfk.builders.four import bipartite_four_flow, four_flow_negatives_value2, four_flow_value_one
from sfk.builders.paths import DirectedPath, find_directed_path, reroute_along_path
from sfk.builders.result import BuildResult, PathWitness
from sfk.builders.seven import (LiftSetup, five_flow_conditional_lift, general_lift, lift_graph,
                                positive_flow_with_value, seven_flow)
from sfk.builders.six import six_flow_choose_value, z6_flow_prescribed_at_vertex, z6_to_integer6
from sfk.core import IN, OUT, SignedGraph
from sfk.errors import PreconditionError
from sfk.matching import bipartition, is_critical_snark, three_edge_coloring
from sfk.oracle import Prescription, SearchBudget, exists_k_flow
from sfk.structure import bridges, negative_edges_in_small_cut

METHODS = ("bipartite4", "bridge6", "colorable6", "critical6", "seven", "lift5", "auto")


def lift5_with_oracle(g: SignedGraph, budget: SearchBudget | None = None) -> BuildResult:
    """Search G* for a 5-flow with value 1 on ``ux`` (directed ``u -> x``), then lift it."""
    setup = lift_graph(g)
    pres = {setup.ux: Prescription(1, (OUT, IN))}
    found = exists_k_flow(setup.gstar, 5, pres, budget)
    if found.flow is None:
        raise PreconditionError("G* has no 5-flow with value 1 on ux")
    return five_flow_conditional_lift(g, found.flow, setup)


def _applicable(g: SignedGraph, method: str) -> bool:
    pos = g.underlying()
    plain = g.is_cubic() and not g.has_loops()
    if method == "bipartite4":
        return plain and bipartition(g) is not None and not negative_edges_in_small_cut(g).in_common_3cut
    if method == "bridge6":
        return bool(bridges(g))
    if method == "colorable6":
        return plain and not bridges(g) and three_edge_coloring(pos) is not None
    if method == "critical6":
        return plain and not bridges(g) and three_edge_coloring(pos) is None and is_critical_snark(pos)
    return True


def construct(g: SignedGraph, method: str) -> BuildResult:
    """Run one named construction; ``auto`` takes the first applicable one of the stronger bounds."""
    if method not in METHODS:
        raise PreconditionError(f"unknown method {method!r}")
    if method == "auto":
        for name in ("bipartite4", "colorable6", "critical6", "bridge6"):
            if len(g.negative_edges) == 2 and _applicable(g, name):
                try:
                    return construct(g, name)
                except PreconditionError:
                    continue
        return seven_flow(g)
    if method == "bipartite4":
        return bipartite_four_flow(g)
    if method == "bridge6":
        return bridge_six_flow(g)
    if method == "colorable6":
        return colorable_or_critical_six_flow(g, "colorable")
    if method == "critical6":
        return colorable_or_critical_six_flow(g, "critical")
    if method == "lift5":
        return lift5_with_oracle(g)
    return seven_flow(g)


__all__ = [
    "METHODS", "BuildResult", "DirectedPath", "LiftSetup", "PathWitness", "bipartite_four_flow",
    "bridge_six_flow", "colorable_or_critical_six_flow", "construct", "find_directed_path",
    "five_flow_conditional_lift", "four_flow_negatives_value2", "four_flow_value_one", "general_lift",
    "lift5_with_oracle", "lift_graph", "positive_flow_with_value", "reroute_along_path", "seven_flow",
    "six_flow_choose_value", "z6_flow_prescribed_at_vertex", "z6_to_integer6",
]
