"""k+1-flows by lifting a k-flow of a smaller all-positive graph.

Deleting both negative edges ``uv`` and ``xy`` and joining ``u`` to ``x``
gives an all-positive graph G*.  From a positive k-flow of G* with value 1
on ``ux`` (directed ``u -> x``), the signed graph gets ``uv`` extroverted
and ``xy`` introverted with value 1, plus one unit pushed from ``y`` to
``v`` along a directed path.  Only edges on that path can reach value k,
which is what makes the result useful for 7-flows.
"""

from __future__ import annotations

from dataclasses import dataclass

from sfk.builders.bridge import bridge_six_flow
from sfk.builders.common import glue, require_two_negative_cubic, switched_six_flow, undirected_path
from sfk.builders.paths import DirectedPath, find_directed_path, reroute_along_path
from sfk.builders.result import BuildResult, PathWitness
from sfk.builders.six import six_flow_choose_value
from sfk.core import IN, OUT, Edge, Flow, Mode, SignedGraph, make_all_positive_values, reverse_all, verify_flow
from sfk.errors import InvariantError, PreconditionError
from sfk.structure import ReductionResult, bridges, enumerate_cuts, is_two_edge_cut, reduce_2cut, suppress_degree2


@dataclass(frozen=True)
class LiftSetup:
    """G* together with how it sits inside the signed graph.

    ``keep[i]`` is the signed graph's id for edge ``i`` of G*, for every
    edge but the last, which is the new edge ``ux``.
    """

    gstar: SignedGraph
    keep: tuple[int, ...]
    ux: int
    u: int
    v: int
    x: int
    y: int
    uv: int
    xy: int


def lift_graph(g: SignedGraph) -> LiftSetup:
    """Build G* from the two negative edges (lower id first)."""
    neg = g.negative_edges
    if len(neg) != 2:
        raise PreconditionError(f"exactly two negative edges expected, found {len(neg)}")
    uv, xy = neg
    u, v, _ = g.edges[uv]
    x, y, _ = g.edges[xy]
    if u == v or x == y:
        raise PreconditionError("negative loops cannot be lifted")
    if u == x:
        raise PreconditionError("the new edge ux would be a loop")
    rest, keep = g.underlying().without_edges([uv, xy])
    gstar = SignedGraph(g.n, rest.edges + (Edge(u, x, 1),))
    return LiftSetup(gstar, tuple(keep), gstar.m - 1, u, v, x, y, uv, xy)


def general_lift(g: SignedGraph, star_flow: Flow, setup: LiftSetup | None = None) -> BuildResult:
    """(k+1)-flow of ``g`` from a positive k-flow of G* with ``ux`` directed ``u -> x`` at value 1.

    The returned path runs from ``v`` to ``y``; every edge with value k
    lies on it and none of its edges has value 1.
    """
    setup = setup or lift_graph(g)
    gs = setup.gstar
    if star_flow.mode is not Mode.INTEGER or star_flow.m != gs.m:
        raise PreconditionError("an integer flow on G* is required")
    check = verify_flow(gs, star_flow)
    if not check:
        raise PreconditionError(f"not a flow on G*: {check.violations[0]}")
    if any(x <= 0 for x in star_flow.values):
        raise PreconditionError("G* flow must have all values positive")
    if star_flow.values[setup.ux] != 1 or star_flow.orientation[setup.ux] != (OUT, IN):
        raise PreconditionError("ux must carry value 1 from u to x")
    k = star_flow.k
    route = find_directed_path(gs, star_flow, setup.y, setup.v, avoid=(setup.ux,))
    if route is None:
        raise InvariantError(f"no directed path from {setup.y} to {setup.v} in G* - ux")

    orient: list = [None] * g.m
    values = [0] * g.m
    for i, e in enumerate(setup.keep):
        orient[e] = star_flow.orientation[i]
        values[e] = star_flow.values[i]
    orient[setup.uv] = (OUT, OUT)
    orient[setup.xy] = (IN, IN)
    values[setup.uv] = values[setup.xy] = 1
    path = DirectedPath(route.vertices, tuple(setup.keep[e] for e in route.edges))
    flow = reroute_along_path(g, Flow(tuple(orient), tuple(values), k + 1), path, delta=1)
    check = verify_flow(g, flow)
    if not check:
        raise InvariantError(f"lifted flow is invalid: {check.violations[0]}")
    on_path = set(path.edges)
    if any(flow.values[e] == k and e not in on_path for e in range(g.m)):
        raise InvariantError(f"an edge of value {k} lies off the lifting path")
    if any(flow.values[e] == 1 for e in on_path):
        raise InvariantError("an edge of the lifting path has value 1")
    witness = PathWitness(path.vertices[::-1], path.edges[::-1])
    return BuildResult(flow, f"lift{k + 1}", (("path", witness),), witness)


def five_flow_conditional_lift(g: SignedGraph, star_flow: Flow, setup: LiftSetup | None = None) -> BuildResult:
    """6-flow of ``g`` from a positive 5-flow of G* with value 1 on ``ux``."""
    if star_flow.k != 5:
        raise PreconditionError("a 5-flow on G* is required")
    result = general_lift(g, star_flow, setup)
    return BuildResult(result.flow, "lift5", result.trace, result.path)


def seven_flow(g: SignedGraph) -> BuildResult:
    """7-flow with value 1 on both negative edges; edges of value 6 lie on one path.

    The result's ``path`` is that path (empty when no edge has value 6).
    """
    require_two_negative_cubic(g)
    trace: list[tuple[str, object]] = []
    flow, path = _solve(g, 0, trace)
    flow = flow.with_k(7)
    check = verify_flow(g, flow)
    if not check or any(flow.values[e] != 1 for e in g.negative_edges):
        raise InvariantError("7-flow construction failed")
    _check_witness(g, flow, path)
    return BuildResult(flow, "seven", tuple(trace), path)


def _check_witness(g: SignedGraph, flow: Flow, path: PathWitness) -> None:
    if len(path.vertices) != (len(path.edges) + 1 if path.edges else len(path.vertices)):
        raise InvariantError("malformed path witness")
    if len(set(path.vertices)) != len(path.vertices):
        raise InvariantError("path witness repeats a vertex")
    for i, e in enumerate(path.edges):
        if {path.vertices[i], path.vertices[i + 1]} != set(g.edges[e][:2]):
            raise InvariantError(f"edge {e} does not join consecutive path vertices")
    if any(abs(flow.values[e]) == 6 and e not in path.edges for e in range(g.m)):
        raise InvariantError("an edge of value 6 lies off the path witness")


EMPTY = PathWitness((), ())


def _solve(g: SignedGraph, depth: int, trace: list) -> tuple[Flow, PathWitness]:
    if depth > g.m:
        raise InvariantError("2-edge-cut recursion did not terminate")
    if bridges(g):
        trace.append(("bridge", depth))
        return make_all_positive_values(bridge_six_flow(g).flow), EMPTY
    n1, n2 = g.negative_edges
    if is_two_edge_cut(g, n1, n2):
        trace.append(("switch", (n1, n2)))
        return switched_six_flow(g, n1, lambda h, e, t: six_flow_choose_value(h, e, t).flow), EMPTY
    for cut in enumerate_cuts(g, 2):
        if sum(g.sign(e) == -1 for e in cut.edge_ids) == 1:
            r = reduce_2cut(g, cut)
            trace.append(("reduce", (r.uv, r.xy)))
            return _reduced(r, depth, trace)
    return _lift(g, trace)


def positive_flow_with_value(g: SignedGraph, e: int, a: int) -> tuple[Flow, DirectedPath | None]:
    """Positive flow on a bridgeless all-positive cubic graph with value ``a`` (1..6) on ``e``.

    Values up to 5 give a 6-flow directly.  For 6, a 6-flow with value 5
    on ``e`` gets one more unit around a directed circuit through ``e``,
    making a 7-flow; the circuit minus ``e`` is returned as well, running
    from the head of ``e`` back to its tail.
    """
    if not 1 <= a <= 6:
        raise PreconditionError("value must be in 1..6")
    if a <= 5:
        return six_flow_choose_value(g, e, a).flow, None
    f = six_flow_choose_value(g, e, 5).flow.with_k(7)
    tail, head = g.edges[e][:2]
    if f.orientation[e][0] is not OUT:
        tail, head = head, tail
    back = find_directed_path(g, f, head, tail, avoid=(e,))
    if back is None:
        raise InvariantError(f"no directed circuit through edge {e}")
    circuit = DirectedPath((tail,) + back.vertices, (e,) + back.edges)
    return reroute_along_path(g, f, circuit, delta=1), back


def _reduced(r: ReductionResult, depth: int, trace: list) -> tuple[Flow, PathWitness]:
    f1, p1 = _solve(r.g1, depth + 1, trace)
    f1 = make_all_positive_values(f1)
    vy = r.new_edge_in_g2
    f2, back = positive_flow_with_value(r.g2, vy, f1.values[r.new_edge_in_g1])
    route = None
    if back is not None:
        trace.append(("circuit", back))
        route = (list(back.vertices), list(back.edges))
        if back.start != r.g2.edges[vy].u:
            route = (route[0][::-1], route[1][::-1])
    flow = glue(r, f1, f2, max(f1.k, f2.k))
    return flow, _splice(r, p1, route)


def _splice(r: ReductionResult, p1: PathWitness, route) -> PathWitness:
    """Map a path of g1 into g, replacing ``ux`` by ``u v ... y x``."""
    ux, vy = r.new_edge_in_g1, r.new_edge_in_g2
    vmap1, emap1 = r.g1_vertices, r.g1_edges
    if ux not in p1.edges:
        return PathWitness(tuple(vmap1[w] for w in p1.vertices), tuple(emap1[e] for e in p1.edges))
    if route is None:
        v2, y2 = r.g2.edges[vy].u, r.g2.edges[vy].v
        route = undirected_path(r.g2, v2, y2, {vy})
    inner_v = [r.g2_vertices[w] for w in route[0]]
    inner_e = [r.g2_edges[e] for e in route[1]]
    forward_v = [r.u] + inner_v + [r.x]
    forward_e = [r.uv] + inner_e + [r.xy]
    i = p1.edges.index(ux)
    vertices = [vmap1[w] for w in p1.vertices[:i]]
    edges = [emap1[e] for e in p1.edges[:i]]
    if vmap1[p1.vertices[i]] == r.u:
        vertices += forward_v
        edges += forward_e
    else:
        vertices += forward_v[::-1]
        edges += forward_e[::-1]
    vertices += [vmap1[w] for w in p1.vertices[i + 2:]]
    edges += [emap1[e] for e in p1.edges[i + 1:]]
    return PathWitness(tuple(vertices), tuple(edges))


def _lift(g: SignedGraph, trace: list) -> tuple[Flow, PathWitness]:
    setup = lift_graph(g)
    sup = suppress_degree2(setup.gstar)
    inner = sup.new_edge_of(setup.ux)
    try:
        f = six_flow_choose_value(sup.graph, inner, 1).flow
    except PreconditionError as exc:
        raise InvariantError(f"G* is not a bridgeless cubic graph after suppression: {exc}") from exc
    star = sup.lift_flow(f)
    if star.orientation[setup.ux] != (OUT, IN):
        star = reverse_all(star)
    trace.append(("lift", (setup.uv, setup.xy)))
    result = general_lift(g, star, setup)
    return result.flow, result.path  # type: ignore[return-value]
