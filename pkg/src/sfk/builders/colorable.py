"""6-flows with value 1 on both negative edges, for bridgeless cubic graphs whose
underlying graph is 3-edge-colorable or a critical snark.

A 4-flow of the underlying graph with value 1 on the two negative edges is
turned into a signed flow by flipping one half of each negative edge; the
resulting surplus at one vertex and deficit at another are repaired by
pushing flow along directed paths between them.
"""

from __future__ import annotations

from collections import deque

from sfk.builders.common import glue, require_two_negative_cubic, switched_six_flow
from sfk.builders.four import four_flow_value_one
from sfk.builders.paths import DirectedPath, find_directed_path, reroute_along_path
from sfk.builders.result import BuildResult
from sfk.builders.six import six_flow_choose_value
from sfk.core import IN, OUT, Flow, SignedGraph, make_all_positive_values, verify_flow
from sfk.errors import InvariantError, PreconditionError
from sfk.matching import is_critical_snark, three_edge_coloring
from sfk.structure import (bridges, enumerate_cuts, is_two_edge_cut, negative_edges_in_small_cut,
                           reduce_2cut, suppress_degree2)

CASES = ("auto", "colorable", "critical")


def _choose(g: SignedGraph, e: int, value: int) -> Flow:
    return six_flow_choose_value(g, e, value).flow


def colorable_or_critical_six_flow(g: SignedGraph, case: str = "auto") -> BuildResult:
    """6-flow with value 1 on both negative edges.

    ``case`` forces the colorable or critical-snark construction; ``auto``
    picks whichever applies.  An edge may end up with value -1 in the
    colorable construction, which is still a valid 6-flow.
    """
    if case not in CASES:
        raise PreconditionError(f"case must be one of {CASES}")
    require_two_negative_cubic(g)
    if g.has_loops() or bridges(g):
        raise PreconditionError("graph must be loopless and bridgeless")
    pos = g.underlying()
    if case == "colorable" and three_edge_coloring(pos) is None:
        raise PreconditionError("underlying graph is not 3-edge-colorable")
    if case == "critical" and not is_critical_snark(pos):
        raise PreconditionError("underlying graph is not a critical snark")
    if case == "auto" and three_edge_coloring(pos) is None and not is_critical_snark(pos):
        raise PreconditionError("underlying graph is neither 3-edge-colorable nor a critical snark")
    if negative_edges_in_small_cut(g).in_common_3cut:
        raise PreconditionError("negative edges share a 3-edge-cut")
    trace: list[tuple[str, object]] = []
    flow = _solve(g, case, 0, trace)
    check = verify_flow(g, flow)
    if not check or any(flow.values[e] != 1 for e in g.negative_edges):
        raise InvariantError("value-one construction failed")
    method = {"auto": "colorable6", "colorable": "colorable6", "critical": "critical6"}[case]
    if case == "auto" and any(step == "critical" for step, _ in trace):
        method = "critical6"
    return BuildResult(flow, method, tuple(trace))


def _solve(g: SignedGraph, case: str, depth: int, trace: list) -> Flow:
    if depth > g.m:
        raise InvariantError("2-edge-cut recursion did not terminate")
    n1, n2 = g.negative_edges
    if is_two_edge_cut(g, n1, n2):
        trace.append(("switch", (n1, n2)))
        return switched_six_flow(g, n1, _choose)
    for cut in enumerate_cuts(g, 2):
        if sum(g.sign(e) == -1 for e in cut.edge_ids) != 1:
            continue
        r = reduce_2cut(g, cut)
        trace.append(("reduce", (r.uv, r.xy)))
        f1 = make_all_positive_values(_solve(r.g1, "auto", depth + 1, trace))
        f2 = _choose(r.g2, r.new_edge_in_g2, f1.values[r.new_edge_in_g1])
        return glue(r, f1, f2, 6)
    pos = g.underlying()
    coloring = three_edge_coloring(pos) if case != "critical" else None
    if coloring is not None:
        trace.append(("colorable", tuple(coloring)))
        return _colorable(g, coloring, trace)
    if case != "colorable" and is_critical_snark(pos):
        trace.append(("critical", n1))
        return _critical(g, trace)
    raise InvariantError("reduced graph is neither colorable nor a critical snark")


def _ends(g: SignedGraph, f: Flow, e: int) -> tuple[int, int]:
    """Tail and head of positive-oriented edge ``e`` under ``f``."""
    u, v, _ = g.edges[e]
    return (u, v) if f.orientation[e][0] is OUT else (v, u)


def _flip_half(orient: list, g: SignedGraph, e: int, w: int) -> None:
    i = g.end_index(e, w)
    pair = list(orient[e])
    pair[i] = pair[i].flipped()
    orient[e] = tuple(pair)


def _reach(g: SignedGraph, f: Flow, start: int, forward: bool) -> set[int]:
    """Vertices reachable from ``start`` along (or against) positive edge directions."""
    want = OUT if forward else IN
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for e, end in g.incidence[a]:
            if g.edges[e].sign != 1 or g.edges[e].is_loop or f.orientation[e][end] is not want:
                continue
            b = g.edges[e][1 - end]
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def _colorable(g: SignedGraph, coloring, trace: list) -> Flow:
    n1, n2 = g.negative_edges
    base = four_flow_value_one(g.underlying(), n1, n2, coloring)
    x1, _ = _ends(g, base, n1)
    _, y2 = _ends(g, base, n2)
    orient = list(base.orientation)
    _flip_half(orient, g, n1, x1)
    _flip_half(orient, g, n2, y2)
    flow = Flow(tuple(orient), base.values, 6)
    path = find_directed_path(g, flow, x1, y2)
    if path is None:
        path = _detour(g, flow, x1, y2)
        trace.append(("detour", path))
    else:
        trace.append(("path", path))
    return reroute_along_path(g, flow, path, delta=2)


def _detour(g: SignedGraph, flow: Flow, x1: int, y2: int) -> DirectedPath:
    """Path from ``x1`` to ``y2`` that uses exactly one edge backwards.

    The backward edge runs from a vertex that reaches ``y2`` into a vertex
    reachable from ``x1``; pushing 2 units against its value 1 leaves -1.
    """
    ahead = _reach(g, flow, x1, True)
    behind = _reach(g, flow, y2, False)
    for e in range(g.m):
        if g.edges[e].sign != 1 or g.edges[e].is_loop:
            continue
        z1, z2 = _ends(g, flow, e)
        if z2 in ahead and z1 in behind:
            p2 = find_directed_path(g, flow, x1, z2)
            p3 = find_directed_path(g, flow, z1, y2)
            if p2 is None or p3 is None:
                continue
            return DirectedPath(p2.vertices + p3.vertices, p2.edges + (e,) + p3.edges)
    raise InvariantError(f"no directed route from {x1} to {y2}, even with one backward edge")


def _critical(g: SignedGraph, trace: list) -> Flow:
    n1, n2 = g.negative_edges
    rest, keep = g.underlying().without_edges([n1])
    sup = suppress_degree2(rest)
    if sup.graph.has_loops():
        raise InvariantError("suppressing after deleting a negative edge produced a loop")
    coloring = three_edge_coloring(sup.graph)
    if coloring is None:
        raise InvariantError("graph minus a negative edge is not colorable; not a critical snark")
    inner = sup.new_edge_of(keep.index(n2))
    lifted = sup.lift_flow(four_flow_value_one(sup.graph, inner, inner, coloring))
    orient: list = [None] * g.m
    values = [0] * g.m
    for i, e in enumerate(keep):
        orient[e] = lifted.orientation[i]
        values[e] = lifted.values[i]
    _, y2 = _ends(rest, lifted, keep.index(n2))
    x1, x2, _ = g.edges[n1]
    orient[n1] = (IN, IN)
    values[n1] = 1
    _flip_half(orient, g, n2, y2)
    flow = Flow(tuple(orient), tuple(values), 6)
    for start in (x1, x2):
        path = find_directed_path(g, flow, start, y2, avoid=(n2,))
        if path is None:
            raise InvariantError(f"no directed path from {start} to {y2} avoiding edge {n2}")
        trace.append(("path", path))
        flow = reroute_along_path(g, flow, path, delta=1)
    return flow
