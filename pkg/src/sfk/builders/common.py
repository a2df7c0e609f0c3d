"""Checks and small helpers shared by the two-negative-edge builders."""

from __future__ import annotations

from collections import deque
from typing import Callable

from sfk.core import IN, OUT, Flow, SignedGraph, is_balanced, is_connected, reverse_all, switch_orientation
from sfk.errors import InvariantError, PreconditionError
from sfk.structure import ReductionResult, is_flow_admissible, recombine_flows


def require_two_negative_cubic(g: SignedGraph) -> tuple[int, int]:
    """Validate a connected cubic signed graph (loops count twice) with exactly two negative edges."""
    if not all(g.degree(v) == 3 for v in range(g.n)):
        raise PreconditionError("graph must be cubic")
    neg = g.negative_edges
    if len(neg) != 2:
        raise PreconditionError(f"exactly two negative edges expected, found {len(neg)}")
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    verdict = is_flow_admissible(g)
    if not verdict:
        raise PreconditionError(f"graph is not flow-admissible: {verdict.reason}")
    return neg[0], neg[1]


def glue(r: ReductionResult, f1: Flow, f2: Flow, k: int | None = None) -> Flow:
    """Recombine after turning ``ux`` away from ``u`` and ``vy`` toward ``v``.

    Reversing every half-edge of a flow keeps it a flow with the same
    values, so both pieces can be aligned without touching their values.
    """
    if f1.orientation[r.new_edge_in_g1][0] is not OUT:
        f1 = reverse_all(f1)
    if f2.orientation[r.new_edge_in_g2][0] is not IN:
        f2 = reverse_all(f2)
    return recombine_flows(r, f1, f2, k)


def switched_six_flow(g: SignedGraph, n1: int, choose: Callable[[SignedGraph, int, int], Flow]) -> Flow:
    """Flow with value 1 on the negatives when they form a 2-edge-cut.

    The signature is then equivalent to the all-positive one; a 6-flow of
    the all-positive graph with value 1 on ``n1`` is carried over by
    switching, and the other cut edge gets value 1 as well.
    """
    balance = is_balanced(g)
    if not balance:
        raise PreconditionError("negative edges do not form an edge cut")
    pos = g.underlying()
    f = choose(pos, n1, 1)
    flow = Flow(switch_orientation(pos, f.orientation, balance.switching), f.values, f.k)
    if any(flow.values[e] != 1 for e in g.negative_edges):
        raise InvariantError("2-edge-cut values differ")
    return flow


def undirected_path(g: SignedGraph, s: int, t: int, avoid: set[int]) -> tuple[list[int], list[int]]:
    """Breadth-first path from ``s`` to ``t`` ignoring orientation; vertices and edges."""
    parent: dict[int, tuple[int, int] | None] = {s: None}
    queue = deque([s])
    while queue and t not in parent:
        a = queue.popleft()
        for e, end in g.incidence[a]:
            if e in avoid:
                continue
            b = g.edges[e][1 - end]
            if b not in parent:
                parent[b] = (a, e)
                queue.append(b)
    if t not in parent:
        raise InvariantError(f"vertices {s} and {t} are not connected")
    vertices = [t]
    edges = []
    while parent[vertices[-1]] is not None:
        a, e = parent[vertices[-1]]  # type: ignore[misc]
        vertices.append(a)
        edges.append(e)
    return vertices[::-1], edges[::-1]
