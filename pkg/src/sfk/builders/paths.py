"""Directed paths in oriented graphs and the two ways of pushing flow along them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from sfk.core import OUT, Flow, Mode, SignedGraph
from sfk.errors import PreconditionError


@dataclass(frozen=True)
class DirectedPath:
    """Vertices ``u0..un`` and the edges ``u_i u_{i+1}`` between them."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def trivial(self) -> bool:
        return not self.edges

    def steps(self) -> Iterable[tuple[int, int, int]]:
        """``(tail, edge, head)`` triples in path order."""
        return zip(self.vertices, self.edges, self.vertices[1:])


def leaves(g: SignedGraph, f: Flow, e: int, w: int) -> bool:
    """True if positive edge ``e`` is directed away from its endpoint ``w``."""
    return f.orientation[e][g.end_index(e, w)] is OUT


def find_directed_path(g: SignedGraph, f: Flow, u: int, v: int | set[int],
                       avoid: Iterable[int] = ()) -> DirectedPath | None:
    """Shortest directed path from ``u`` to ``v`` (or to any vertex of a set ``v``).

    Only positive, non-loop edges are used, each traversed from its OUT
    half to its IN half.  Ties go to smaller edge ids, so the result is
    deterministic.  Returns ``None`` when no such path exists.
    """
    targets = {v} if isinstance(v, int) else set(v)
    blocked = set(avoid)
    parent: dict[int, tuple[int, int] | None] = {u: None}
    queue = deque([u])
    hit = u if u in targets else None
    while queue and hit is None:
        a = queue.popleft()
        for e, end in g.incidence[a]:
            if e in blocked or g.edges[e].sign != 1 or g.edges[e].is_loop:
                continue
            if f.orientation[e][end] is not OUT:
                continue
            b = g.edges[e][1 - end]
            if b in parent:
                continue
            parent[b] = (a, e)
            if b in targets:
                hit = b
                break
            queue.append(b)
    if hit is None:
        return None
    vertices = [hit]
    edges = []
    while parent[vertices[-1]] is not None:
        a, e = parent[vertices[-1]]  # type: ignore[misc]
        edges.append(e)
        vertices.append(a)
    return DirectedPath(tuple(reversed(vertices)), tuple(reversed(edges)))


def reroute_along_path(g: SignedGraph, f: Flow, path: DirectedPath, *, delta: int | None = None,
                       k: int | None = None) -> Flow:
    """Push flow along ``path``.

    Reversal mode (``delta`` is None): every path edge has both halves
    reversed and its value ``x`` replaced by ``k - x``; along a directed path
    this moves ``k`` units of net inflow from the start to the end.

    Additive mode: ``delta`` units are sent from the start to the end; edges
    traversed against their orientation lose ``delta``.  Values must stay
    inside ``(-k, k)`` with ``k = f.k``.

    Kirchhoff's law is the caller's business.
    """
    if f.mode is not Mode.INTEGER:
        raise PreconditionError("path rerouting works on integer flows")
    orient = list(f.orientation)
    values = list(f.values)
    if delta is None:
        k = f.k if k is None else k
        for e in path.edges:
            du, dv = orient[e]
            orient[e] = (du.flipped(), dv.flipped())
            values[e] = k - values[e]
        return Flow(tuple(orient), tuple(values), f.k, f.mode)
    carried = delta
    for tail, e, head in path.steps():
        d_tail = orient[e][g.end_index(e, tail)]
        change = -carried * d_tail.inflow
        values[e] += change
        if not -f.k < values[e] < f.k:
            raise PreconditionError(f"value of edge {e} would become {values[e]}, outside (-{f.k}, {f.k})")
        d_head = orient[e][1 - g.end_index(e, tail)] if not g.edges[e].is_loop else orient[e][1]
        carried = d_head.inflow * change
    return Flow(tuple(orient), tuple(values), f.k, f.mode)
