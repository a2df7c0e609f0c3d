"""6-flows on all-positive cubic graphs with a chosen value on one edge.

A nowhere-zero Z6-flow with prescribed values around a degree-3 vertex is
found by exhaustive search, then turned into an integer 6-flow by
repeatedly reversing directed paths between vertices of positive and
negative integer outflow (each reversal maps values ``x -> 6 - x``).  Graphs
with a 2-edge-cut are split, solved piecewise and glued back.
"""

from __future__ import annotations

from typing import Sequence

from sfk.builders.paths import find_directed_path, reroute_along_path
from sfk.builders.result import BuildResult
from sfk.core import (IN, OUT, Flow, HalfPair, Mode, SignedGraph, net_inflow, reverse_all,
                      verify_flow)
from sfk.errors import InvariantError, PreconditionError
from sfk.oracle import Prescription, exists_zk_flow
from sfk.structure import (bridges, component_vertex_sets, enumerate_cuts, is_three_edge_connected,
                           recombine_flows, reduce_2cut, subgraph)


def _half_pair(g: SignedGraph, e: int, w: int, at_w) -> HalfPair:
    """Orientation of ``e`` whose half at ``w`` is ``at_w``."""
    other = at_w.flipped() if g.sign(e) == 1 else at_w
    return (at_w, other) if g.end_index(e, w) == 0 else (other, at_w)


def z6_flow_prescribed_at_vertex(g: SignedGraph, v: int, a: int, b: int, c: int, *,
                                 inward: bool = False, edges: Sequence[int] | None = None,
                                 seed: int | None = None) -> Flow:
    """Nowhere-zero Z6-flow whose edges at ``v`` carry ``a, b, c``.

    The three edges (``edges``, default: ``v``'s edges by id) are oriented
    away from ``v``, or toward it when ``inward``.  The underlying graph
    must be 3-edge-connected; then such a flow exists, and failing to find
    one raises :class:`InvariantError`.
    """
    g._check_vertex(v)
    at_v = list(edges) if edges is not None else [e for e, _ in g.incidence[v]]
    if sorted(at_v) != sorted(e for e, _ in g.incidence[v]) or len(set(at_v)) != 3:
        raise PreconditionError(f"vertex {v} must have three distinct non-loop edges")
    if any(x % 6 == 0 for x in (a, b, c)):
        raise PreconditionError("prescribed values must be nonzero mod 6")
    if (a + b + c) % 6:
        raise PreconditionError(f"prescribed values {a}, {b}, {c} do not sum to 0 mod 6")
    if not is_three_edge_connected(g.underlying()):
        raise PreconditionError("graph must be 3-edge-connected")
    d = IN if inward else OUT
    wanted = {e: _half_pair(g, e, v, d) for e in at_v}
    pres = {e: Prescription(x % 6, wanted[e]) for e, x in zip(at_v, (a, b, c))}
    result = exists_zk_flow(g, 6, pres, seed=seed)
    if result.flow is None:
        raise InvariantError(f"no Z6-flow with values {a}, {b}, {c} at vertex {v} of a 3-edge-connected graph")
    flow = result.flow
    orient = list(flow.orientation)
    values = list(flow.values)
    for e in at_v:
        if orient[e] != wanted[e]:
            orient[e] = wanted[e]
            values[e] = -values[e] % 6
    return Flow(tuple(orient), tuple(values), 6, Mode.MOD_K)


def _common_vertex(g: SignedGraph, edges: Sequence[int], at: int | None) -> int:
    shared = set(g.edges[edges[0]][:2])
    for e in edges[1:]:
        shared &= set(g.edges[e][:2])
    if at is not None:
        if at not in shared:
            raise PreconditionError(f"edges {tuple(edges)} do not all meet vertex {at}")
        return at
    if len(shared) != 1:
        raise PreconditionError(f"edges {tuple(edges)} do not meet in exactly one vertex")
    return shared.pop()


def z6_to_integer6(g: SignedGraph, f: Flow, e1: int, e2: int, e3: int,
                   at: int | None = None) -> BuildResult:
    """Integer 6-flow agreeing with a Z6-flow around one vertex.

    Needs the three edges at a common vertex, all directed away from it (or
    all toward it) with residues 1, x, -1-x for some x in 1..4.  The result
    keeps that direction on ``e1`` and ``e2`` with values 1 and x; ``e3``
    runs the other way with value 1+x.  All values are positive.  The trace
    records the outflow L1-norm after every path reversal; it strictly
    decreases.  ``at`` names the common vertex when the edges share both ends.
    """
    if g.negative_edges:
        raise PreconditionError("graph must be all-positive")
    if f.mode is not Mode.MOD_K or f.k != 6:
        raise PreconditionError("a Z6-flow is required")
    if bridges(g):
        raise PreconditionError("graph must be bridgeless")
    if len({e1, e2, e3}) != 3:
        raise PreconditionError("three distinct edges required")
    v = _common_vertex(g, (e1, e2, e3), at)
    check = verify_flow(g, f)
    if not check:
        raise PreconditionError(f"input is not a nowhere-zero Z6-flow: {check.violations[0]}")
    dirs = {f.orientation[e][g.end_index(e, v)] for e in (e1, e2, e3)}
    if len(dirs) != 1:
        raise PreconditionError("the three edges must all leave or all enter their common vertex")
    inward = dirs == {IN}
    if inward:
        f = reverse_all(f)
    vals = [x % 6 for x in f.values]
    x = vals[e2]
    if vals[e1] != 1 or not 1 <= x <= 4 or vals[e3] != 5 - x:
        raise PreconditionError(f"values at vertex {v} must be 1, x, -1-x with 1 <= x <= 4")
    orient = list(f.orientation)
    du, dv = orient[e3]
    orient[e3] = (du.flipped(), dv.flipped())
    vals[e3] = 6 - vals[e3]

    current = Flow(tuple(orient), tuple(vals), 6)
    norms = []
    while True:
        out = [-x for x in net_inflow(g, current.orientation, current.values)]
        norm = sum(abs(x) for x in out)
        if norms and norm >= norms[-1]:
            raise InvariantError(f"outflow norm did not decrease: {norms[-1]} -> {norm}")
        norms.append(norm)
        if norm == 0:
            break
        w1 = min(w for w in range(g.n) if out[w] > 0)
        sinks = {w for w in range(g.n) if out[w] < 0}
        path = find_directed_path(g, current, w1, sinks, avoid=(e1,))
        if path is None:
            raise InvariantError(f"no directed path from {w1} to a vertex of negative outflow")
        current = reroute_along_path(g, current, path, k=6)

    if current.values[e2] == 6 - x and current.values[e3] == 5 - x:
        u2 = g.other_end(e2, v)
        u3 = g.other_end(e3, v)
        q = find_directed_path(g, current, u3, u2, avoid=(e1, e2, e3))
        if q is None:
            raise InvariantError(f"no directed path from {u3} to {u2} to close the correcting cycle")
        cycle = type(q)(q.vertices, q.edges + (e2, e3))
        current = reroute_along_path(g, current, cycle, k=6)
    if current.values[e2] != x or current.values[e3] != 1 + x or current.values[e1] != 1:
        raise InvariantError("values around the prescribed vertex drifted")
    if inward:
        current = reverse_all(current)
    check = verify_flow(g, current)
    if not check:
        raise InvariantError(f"converted flow is invalid: {check.violations[0]}")
    return BuildResult(current, "z6_to_integer6", (("norms", tuple(norms)),))


def six_flow_choose_value(g: SignedGraph, e: int, target: int) -> BuildResult:
    """All-positive integer 6-flow on a bridgeless cubic graph with value ``target`` on ``e``."""
    g._check_edge(e)
    if not 1 <= target <= 5:
        raise PreconditionError("target value must be in 1..5")
    if g.negative_edges:
        raise PreconditionError("graph must be all-positive")
    if not g.is_cubic() or g.has_loops():
        raise PreconditionError("graph must be cubic and loopless")
    if bridges(g):
        raise PreconditionError("graph must be bridgeless")
    trace: list[tuple[str, object]] = []
    flow = _choose(g, e, target, 0, trace)
    return BuildResult(flow, "choose_value", tuple(trace))


def _choose(g: SignedGraph, e: int, target: int, depth: int, trace: list) -> Flow:
    if depth > g.m + 1:
        raise InvariantError("2-edge-cut recursion did not terminate")
    parts = component_vertex_sets(g)
    if len(parts) > 1:
        return _per_component(g, parts, e, target, depth, trace)
    if is_three_edge_connected(g):
        return _choose_3connected(g, e, target)
    r = reduce_2cut(g, enumerate_cuts(g, 2)[0])
    trace.append(("reduce", (r.uv, r.xy)))
    ux, vy = r.new_edge_in_g1, r.new_edge_in_g2
    if e in r.g2_edges:
        f2 = _choose(r.g2, r.g2_edges.index(e), target, depth + 1, trace)
        f1 = _choose(r.g1, ux, f2.values[vy], depth + 1, trace)
    else:
        inner = ux if e in (r.uv, r.xy) else r.g1_edges.index(e)
        f1 = _choose(r.g1, inner, target, depth + 1, trace)
        f2 = _choose(r.g2, vy, f1.values[ux], depth + 1, trace)
    if f1.orientation[ux][0] is not OUT:
        f1 = reverse_all(f1)
    if f2.orientation[vy][0] is not IN:
        f2 = reverse_all(f2)
    return recombine_flows(r, f1, f2, 6)


def _per_component(g: SignedGraph, parts: list[list[int]], e: int, target: int,
                   depth: int, trace: list) -> Flow:
    orient: list = [None] * g.m
    values = [0] * g.m
    for part in parts:
        sub, _, emap = subgraph(g, part)
        if not emap:
            continue
        if e in emap:
            f = _choose(sub, emap.index(e), target, depth + 1, trace)
        else:
            f = _choose(sub, 0, 1, depth + 1, trace)
        for i, old in enumerate(emap):
            orient[old] = f.orientation[i]
            values[old] = f.values[i]
    return Flow(tuple(orient), tuple(values), 6)


def _choose_3connected(g: SignedGraph, e: int, target: int) -> Flow:
    w = g.edges[e].u
    others = [x for x, _ in g.incidence[w] if x != e]
    if target <= 4:
        e1, e2, e3, x = others[0], e, others[1], target
    else:
        e1, e2, e3, x = others[0], others[1], e, 4
    z6 = z6_flow_prescribed_at_vertex(g, w, 1, x, -1 - x, edges=(e1, e2, e3))
    flow = z6_to_integer6(g, z6, e1, e2, e3, at=w).flow
    if flow.values[e] != target:
        raise InvariantError(f"edge {e} received {flow.values[e]} instead of {target}")
    return flow
