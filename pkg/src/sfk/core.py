"""Signed multigraphs, bidirected orientations and flows.

A signed graph is a multigraph (loops and parallel edges allowed) whose
edges carry a sign in {+1, -1}.  Every edge has two half-edges, one at each
endpoint; an orientation gives each half-edge a direction relative to its
own endpoint (``IN`` means directed toward that endpoint).  A positive edge
has exactly one ``IN`` half, a negative edge has two equal halves.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from sfk.errors import OrientationError, PreconditionError


class Dir(enum.Enum):
    """Direction of a half-edge relative to the vertex it is attached to."""

    IN = "i"
    OUT = "o"

    def flipped(self) -> Dir:
        return Dir.OUT if self is Dir.IN else Dir.IN

    @property
    def inflow(self) -> int:
        """+1 if a value on this half-edge enters the vertex, -1 if it leaves."""
        return 1 if self is Dir.IN else -1


IN = Dir.IN
OUT = Dir.OUT

HalfPair = tuple[Dir, Dir]
Orientation = tuple[HalfPair, ...]


class Mode(enum.Enum):
    INTEGER = "integer"
    MOD_K = "mod"


class Edge(NamedTuple):
    u: int
    v: int
    sign: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class SignedGraph:
    """Signed multigraph on vertices ``0..n-1`` with edge ids ``0..m-1``."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        fixed = []
        for e, item in enumerate(self.edges):
            u, v, s = item
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            if s not in (1, -1):
                raise PreconditionError(f"edge {e} has sign {s!r}, expected +1 or -1")
            fixed.append(Edge(int(u), int(v), int(s)))
        object.__setattr__(self, "edges", tuple(fixed))

    @classmethod
    def build(cls, n: int, edges: Iterable[Sequence[int]]) -> SignedGraph:
        """Accept ``(u, v)`` pairs (positive) or ``(u, v, sign)`` triples."""
        items = []
        for item in edges:
            if len(item) == 2:
                items.append(Edge(item[0], item[1], 1))
            else:
                items.append(Edge(item[0], item[1], item[2]))
        return cls(n, tuple(items))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def negative_edges(self) -> tuple[int, ...]:
        return tuple(e for e, edge in enumerate(self.edges) if edge.sign == -1)

    def sign(self, e: int) -> int:
        return self.edges[e].sign

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the half-edges ``(edge_id, end)`` with ``end`` 0 for u, 1 for v.

        A loop appears twice at its vertex.  Sorted by edge id.
        """
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e, (u, v, _) in enumerate(self.edges):
            inc[u].append((e, 0))
            inc[v].append((e, 1))
        return tuple(tuple(sorted(x)) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def other_end(self, e: int, w: int) -> int:
        u, v, _ = self.edges[e]
        if w == u:
            return v
        if w == v:
            return u
        raise PreconditionError(f"vertex {w} is not an endpoint of edge {e}")

    def end_index(self, e: int, w: int) -> int:
        """0 if ``w`` is the stored first endpoint of ``e``, 1 if the second."""
        u, v, _ = self.edges[e]
        if w == u:
            return 0
        if w == v:
            return 1
        raise PreconditionError(f"vertex {w} is not an endpoint of edge {e}")

    def with_negatives(self, negatives: Iterable[int]) -> SignedGraph:
        neg = set(negatives)
        for e in neg:
            self._check_edge(e)
        return SignedGraph(self.n, tuple(Edge(u, v, -1 if e in neg else 1)
                                         for e, (u, v, _) in enumerate(self.edges)))

    def underlying(self) -> SignedGraph:
        """The all-positive graph on the same edges."""
        return self.with_negatives(())

    def without_edges(self, removed: Iterable[int]) -> tuple[SignedGraph, list[int]]:
        """Delete edges; returns the new graph and new-id -> old-id list."""
        drop = set(removed)
        keep = [e for e in range(self.m) if e not in drop]
        return SignedGraph(self.n, tuple(self.edges[e] for e in keep)), keep

    def is_cubic(self) -> bool:
        return all(self.degree(v) == 3 for v in range(self.n))

    def has_loops(self) -> bool:
        return any(edge.is_loop for edge in self.edges)

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < self.m:
            raise PreconditionError(f"edge id {e} out of range 0..{self.m - 1}")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise PreconditionError(f"vertex id {v} out of range 0..{self.n - 1}")


def components(g: SignedGraph, removed: Iterable[int] = ()) -> list[int]:
    """Component label per vertex of ``g`` minus the ``removed`` edges.

    Labels are the smallest vertex id of each component.
    """
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    drop = set(removed)
    for e, (u, v, _) in enumerate(g.edges):
        if e in drop:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    return [find(a) for a in range(g.n)]


def component_count(g: SignedGraph, removed: Iterable[int] = ()) -> int:
    return len(set(components(g, removed)))


def is_connected(g: SignedGraph) -> bool:
    return g.n <= 1 or component_count(g) == 1


# -- switching ---------------------------------------------------------------

def switch(g: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Switch at every vertex of ``s``: an edge flips iff exactly one end is in ``s``."""
    sw = set(s)
    for v in sw:
        g._check_vertex(v)
    return SignedGraph(g.n, tuple(
        Edge(u, v, -sign if (u in sw) != (v in sw) else sign)
        for u, v, sign in g.edges))


def switch_orientation(g: SignedGraph, o: Orientation, s: Iterable[int]) -> Orientation:
    """Reverse every half-edge attached to a vertex of ``s``."""
    sw = set(s)
    for v in sw:
        g._check_vertex(v)
    if len(o) != g.m:
        raise OrientationError(f"orientation has {len(o)} entries, graph has {g.m} edges")
    out = []
    for (u, v, _), (du, dv) in zip(g.edges, o):
        out.append((du.flipped() if u in sw else du, dv.flipped() if v in sw else dv))
    return tuple(out)


@dataclass(frozen=True)
class Balance:
    """Outcome of :func:`is_balanced`.

    ``switching`` turns the signature all-positive when ``balanced``;
    otherwise ``cycle`` lists the edges of one unbalanced cycle in order.
    """

    balanced: bool
    switching: frozenset[int] = frozenset()
    cycle: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.balanced


def is_balanced(g: SignedGraph) -> Balance:
    side = [-1] * g.n
    parent_edge = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for e, end in g.incidence[a]:
                u, v, s = g.edges[e]
                b = v if end == 0 else u
                want = side[a] ^ (s == -1)
                if side[b] == -1:
                    side[b] = want
                    parent_edge[b] = e
                    depth[b] = depth[a] + 1
                    queue.append(b)
                elif side[b] != want:
                    return Balance(False, cycle=_close_cycle(g, a, b, e, parent_edge, depth))
    return Balance(True, switching=frozenset(v for v in range(g.n) if side[v] == 1))


def _close_cycle(g: SignedGraph, a: int, b: int, e: int,
                 parent_edge: list[int], depth: list[int]) -> tuple[int, ...]:
    if a == b:
        return (e,)
    up_a: list[int] = []
    up_b: list[int] = []
    x, y = a, b
    while depth[x] > depth[y]:
        up_a.append(parent_edge[x])
        x = g.other_end(parent_edge[x], x)
    while depth[y] > depth[x]:
        up_b.append(parent_edge[y])
        y = g.other_end(parent_edge[y], y)
    while x != y:
        up_a.append(parent_edge[x])
        x = g.other_end(parent_edge[x], x)
        up_b.append(parent_edge[y])
        y = g.other_end(parent_edge[y], y)
    # a up to the common ancestor, down to b, then e closes the cycle
    return tuple(up_a) + tuple(reversed(up_b)) + (e,)


def is_edge_cut(g: SignedGraph, edge_set: Iterable[int]) -> bool:
    """True iff ``edge_set`` equals the set of edges between some W and V-W.

    The empty set counts as a cut.  A set is such a cut exactly when the
    signature having it as negative set is balanced.
    """
    return is_balanced(g.with_negatives(edge_set)).balanced


def equivalent_to_at_most_one_negative(g: SignedGraph) -> int | None:
    """Some edge ``e`` with ``g`` switching-equivalent to negative set ``{e}``.

    Returns ``None`` when there is no such edge, including when ``g`` is balanced.
    """
    if is_balanced(g):
        return None
    neg = set(g.negative_edges)
    for e in range(g.m):
        if is_balanced(g.with_negatives(neg ^ {e})):
            return e
    return None


# -- flows -------------------------------------------------------------------

def check_orientation(g: SignedGraph, o: Orientation) -> None:
    """Raise :class:`OrientationError` unless ``o`` is sign-consistent with ``g``."""
    if len(o) != g.m:
        raise OrientationError(f"orientation has {len(o)} entries, graph has {g.m} edges")
    for e, ((du, dv), edge) in enumerate(zip(o, g.edges)):
        if not isinstance(du, Dir) or not isinstance(dv, Dir):
            raise OrientationError(f"edge {e}: half-edge directions must be Dir values")
        if (du is not dv) != (edge.sign == 1):
            kind = "positive" if edge.sign == 1 else "negative"
            raise OrientationError(
                f"edge {e} is {kind} but oriented ({du.value},{dv.value})")


def positive_orientation(g: SignedGraph) -> Orientation:
    """Reference orientation: positive edges u->v, negative edges with both halves OUT."""
    return tuple((OUT, IN) if s == 1 else (OUT, OUT) for _, _, s in g.edges)


@dataclass(frozen=True)
class Flow:
    orientation: Orientation
    values: tuple[int, ...]
    k: int
    mode: Mode = Mode.INTEGER

    def __post_init__(self) -> None:
        object.__setattr__(self, "orientation", tuple(tuple(p) for p in self.orientation))
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if len(self.orientation) != len(self.values):
            raise PreconditionError("orientation and values differ in length")
        if self.k < 1:
            raise PreconditionError("flow bound k must be positive")

    @property
    def m(self) -> int:
        return len(self.values)

    def with_k(self, k: int) -> Flow:
        return Flow(self.orientation, self.values, k, self.mode)

    def reversed_edges(self, edge_ids: Iterable[int]) -> Flow:
        """Reverse both halves of each edge and negate its value."""
        o = list(self.orientation)
        vals = list(self.values)
        for e in set(edge_ids):
            du, dv = o[e]
            o[e] = (du.flipped(), dv.flipped())
            vals[e] = -vals[e]
        return Flow(tuple(o), tuple(vals), self.k, self.mode)


def net_inflow(g: SignedGraph, o: Orientation, values: Sequence[int]) -> list[int]:
    """Sum of incoming minus outgoing values at each vertex."""
    net = [0] * g.n
    for (u, v, _), (du, dv), x in zip(g.edges, o, values):
        net[u] += du.inflow * x
        net[v] += dv.inflow * x
    return net


@dataclass(frozen=True)
class Violation:
    kind: str  # "kirchhoff", "zero" or "bound"
    where: int  # vertex id for "kirchhoff", edge id otherwise
    detail: str

    def __str__(self) -> str:
        noun = "vertex" if self.kind == "kirchhoff" else "edge"
        return f"{self.kind} at {noun} {self.where}: {self.detail}"


@dataclass(frozen=True)
class FlowCheck:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def verify_flow(g: SignedGraph, f: Flow) -> FlowCheck:
    """Check Kirchhoff's law, nowhere-zero and the value bound.

    Raises :class:`OrientationError` when the orientation does not fit the
    signature; every other defect is listed in the returned check.
    """
    check_orientation(g, f.orientation)
    if f.m != g.m:
        raise OrientationError(f"flow has {f.m} values, graph has {g.m} edges")
    bad: list[Violation] = []
    for e, x in enumerate(f.values):
        if f.mode is Mode.MOD_K:
            if x % f.k == 0:
                bad.append(Violation("zero", e, f"value {x} is 0 mod {f.k}"))
        elif x == 0:
            bad.append(Violation("zero", e, "value is 0"))
        elif not -f.k < x < f.k:
            bad.append(Violation("bound", e, f"value {x} outside ({-f.k}, {f.k})"))
    for v, net in enumerate(net_inflow(g, f.orientation, f.values)):
        if (net % f.k if f.mode is Mode.MOD_K else net) != 0:
            bad.append(Violation("kirchhoff", v, f"net inflow {net}"))
    return FlowCheck(tuple(bad))


def make_all_positive_values(f: Flow) -> Flow:
    """Reverse and negate every edge carrying a negative value."""
    if f.mode is not Mode.INTEGER:
        raise PreconditionError("make_all_positive_values needs an integer flow")
    return f.reversed_edges(e for e, x in enumerate(f.values) if x < 0)


def reverse_all(f: Flow) -> Flow:
    """Reverse every half-edge and keep the values; still a flow."""
    return Flow(tuple((du.flipped(), dv.flipped()) for du, dv in f.orientation),
                f.values, f.k, f.mode)


def negate_all(f: Flow) -> Flow:
    return Flow(f.orientation, tuple(-x for x in f.values), f.k, f.mode)
