"""4-flows assembled from 3-edge-colorings.

Two color classes of a cubic graph's 3-edge-coloring form a disjoint union
of even cycles, so each pair carries a nowhere-zero 2-flow.  Adding one such
2-flow to twice another gives a nowhere-zero 4-flow whose values on each
color class are easy to predict.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from sfk.builders.paths import find_directed_path, reroute_along_path
from sfk.builders.result import BuildResult
from sfk.core import IN, OUT, Flow, SignedGraph, make_all_positive_values, verify_flow
from sfk.errors import InvariantError, PreconditionError
from sfk.matching import bipartition, one_factor_containing_two, require_cubic
from sfk.structure import is_flow_admissible, negative_edges_in_small_cut

Cycle = tuple[tuple[int, ...], tuple[int, ...]]


def class_cycles(g: SignedGraph, edge_set: Iterable[int]) -> list[Cycle]:
    """Split a 2-regular edge set into cycles, each walked from its least edge's first endpoint."""
    chosen = set(edge_set)
    at: dict[int, list[int]] = {}
    for e in sorted(chosen):
        u, v, _ = g.edges[e]
        at.setdefault(u, []).append(e)
        at.setdefault(v, []).append(e)
    if any(len(es) != 2 for es in at.values()):
        raise PreconditionError("edge set is not 2-regular")
    seen: set[int] = set()
    cycles = []
    for start in sorted(chosen):
        if start in seen:
            continue
        vertices = [g.edges[start].u]
        edges = []
        e = start
        while True:
            seen.add(e)
            edges.append(e)
            b = g.other_end(e, vertices[-1])
            e = next(x for x in at[b] if x != e)
            if e == start:
                break
            vertices.append(b)
        cycles.append((tuple(vertices), tuple(edges)))
    return cycles


def _circulate(g: SignedGraph, signed: list[int], cycle: Cycle, value: int) -> None:
    """Add ``value`` around ``cycle`` in walking order, measured in stored u->v direction."""
    vertices, edges = cycle
    for i, e in enumerate(edges):
        signed[e] += value if g.edges[e].u == vertices[i] else -value


def _direction_on(g: SignedGraph, cycle: Cycle, e: int) -> int:
    vertices, edges = cycle
    i = edges.index(e)
    return 1 if g.edges[e].u == vertices[i] else -1


def _positive_flow(signed: Sequence[int], k: int) -> Flow:
    orientation = tuple((OUT, IN) if x > 0 else (IN, OUT) for x in signed)
    return Flow(orientation, tuple(abs(x) for x in signed), k)


def check_coloring(g: SignedGraph, coloring: Sequence[int]) -> None:
    if len(coloring) != g.m:
        raise PreconditionError("coloring length differs from the edge count")
    for v in range(g.n):
        colors = [coloring[e] for e, _ in g.incidence[v]]
        if sorted(colors) != [0, 1, 2]:
            raise PreconditionError(f"coloring is not proper at vertex {v}")


def _two_negatives(g: SignedGraph) -> tuple[int, int]:
    neg = g.negative_edges
    if len(neg) != 2:
        raise PreconditionError(f"exactly two negative edges expected, found {len(neg)}")
    return neg[0], neg[1]


def four_flow_negatives_value2(g: SignedGraph, coloring: Sequence[int]) -> BuildResult:
    """4-flow with value 2 on both negative edges, from a coloring giving them one color.

    A 2-flow on the two other classes plus twice a 2-flow through the
    negatives' class gives an all-positive 4-flow with value 2 on that
    class.  Turning the first negative into an introverted edge and the
    second into an extroverted one leaves a surplus of 4 at one vertex and a
    deficit of 4 at another; reversing a directed path between them (values
    ``x -> 4 - x``) repairs Kirchhoff's law.
    """
    require_cubic(g)
    n1, n2 = _two_negatives(g)
    check_coloring(g, coloring)
    if coloring[n1] != coloring[n2]:
        raise PreconditionError("the negative edges must share a color class")
    c2 = coloring[n1]
    c1, c3 = (c for c in range(3) if c != c2)
    signed = [0] * g.m
    for cyc in class_cycles(g, (e for e in range(g.m) if coloring[e] in (c1, c3))):
        _circulate(g, signed, cyc, 1)
    for cyc in class_cycles(g, (e for e in range(g.m) if coloring[e] in (c2, c3))):
        _circulate(g, signed, cyc, 2)
    base = _positive_flow(signed, 4)

    orient = list(base.orientation)
    # n1 runs u1 -> u2; its tail half turns inward
    i1 = 0 if orient[n1][0] is OUT else 1
    u1 = g.edges[n1][i1]
    orient[n1] = (IN, IN)
    # n2 runs v1 -> v2; its head half turns outward
    i2 = 0 if orient[n2][0] is IN else 1
    v2 = g.edges[n2][i2]
    orient[n2] = (OUT, OUT)
    flow = Flow(tuple(orient), base.values, 4)
    path = find_directed_path(g, flow, v2, u1)
    if path is None:
        raise InvariantError(f"no directed path from {v2} to {u1}; is the graph connected?")
    flow = reroute_along_path(g, flow, path)
    check = verify_flow(g, flow)
    if not check:
        raise InvariantError(f"4-flow construction failed: {check.violations[0]}")
    trace = (("coloring", tuple(coloring)), ("classes", (c1, c2, c3)), ("base", base),
             ("path", path))
    return BuildResult(flow, "four_flow_negatives_value2", trace)


def four_flow_value_one(g: SignedGraph, e1: int, e2: int,
                        coloring: Sequence[int]) -> Flow:
    """All-positive 4-flow on the all-positive graph with value 1 on ``e1`` and ``e2``.

    Class of ``e1`` is c1; c2 is the class of ``e2`` when different, else
    the smaller remaining color.  2-flow on c1+c2 plus twice a 2-flow on
    c2+c3, the latter turned against the former on ``e2`` when needed.
    """
    require_cubic(g)
    check_coloring(g, coloring)
    c1 = coloring[e1]
    c2 = coloring[e2] if coloring[e2] != c1 else min(c for c in range(3) if c != c1)
    c3 = 3 - c1 - c2
    signed = [0] * g.m
    for cyc in class_cycles(g, (e for e in range(g.m) if coloring[e] in (c1, c2))):
        _circulate(g, signed, cyc, 1)
    for cyc in class_cycles(g, (e for e in range(g.m) if coloring[e] in (c2, c3))):
        way = 1
        if e2 in cyc[1] and _direction_on(g, cyc, e2) * signed[e2] > 0:
            way = -1
        _circulate(g, signed, cyc, 2 * way)
    flow = make_all_positive_values(_positive_flow(signed, 4))
    pos = g.underlying()
    check = verify_flow(pos, flow)
    if not check or flow.values[e1] != 1 or flow.values[e2] != 1:
        raise InvariantError(f"value-one 4-flow construction failed: {check.violations[:1]}")
    return flow


def bipartite_four_flow(g: SignedGraph) -> BuildResult:
    """4-flow on a flow-admissible cubic bipartite graph with two negative edges.

    A 1-factor through both negatives becomes the middle color class; the
    remaining even cycles are colored alternately.
    """
    require_cubic(g)
    n1, n2 = _two_negatives(g)
    if bipartition(g) is None:
        raise PreconditionError("graph is not bipartite")
    verdict = is_flow_admissible(g)
    if not verdict:
        raise PreconditionError(f"graph is not flow-admissible: {verdict.reason}")
    if negative_edges_in_small_cut(g).in_common_3cut:
        raise PreconditionError("negative edges share a 3-edge-cut")
    factor = one_factor_containing_two(g, n1, n2)
    coloring = [1] * g.m
    rest = sorted(set(range(g.m)) - set(factor))
    for _, edges in class_cycles(g, rest):
        for i, e in enumerate(edges):
            coloring[e] = 0 if i % 2 == 0 else 2
    inner = four_flow_negatives_value2(g, coloring)
    trace = (("one_factor", factor),) + inner.trace
    return BuildResult(inner.flow, "bipartite4", trace)
