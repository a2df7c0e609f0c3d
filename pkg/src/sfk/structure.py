"""Cuts, bridges, signed circuits, flow-admissibility and the 2-edge-cut reduction."""

from __future__ import annotations

import enum
import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from sfk.core import (
    IN,
    OUT,
    Dir,
    Edge,
    Flow,
    Mode,
    SignedGraph,
    components,
    is_balanced,
    is_connected,
    is_edge_cut,
    verify_flow,
)
from sfk.errors import InvariantError, PreconditionError


def subgraph(g: SignedGraph, vertices: Iterable[int]) -> tuple[SignedGraph, list[int], list[int]]:
    """Induced subgraph on ``vertices``.

    Returns the graph plus new->old vertex and edge id lists.
    """
    vs = sorted(set(vertices))
    new_id = {v: i for i, v in enumerate(vs)}
    emap = [e for e, (u, v, _) in enumerate(g.edges) if u in new_id and v in new_id]
    sub = SignedGraph(len(vs), tuple(Edge(new_id[g.edges[e].u], new_id[g.edges[e].v],
                                          g.edges[e].sign) for e in emap))
    return sub, vs, emap


def component_vertex_sets(g: SignedGraph, removed: Iterable[int] = ()) -> list[list[int]]:
    label = components(g, removed)
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(label):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


# -- bridges and cuts --------------------------------------------------------

def bridges(g: SignedGraph) -> list[int]:
    """Edge ids whose removal increases the number of components (ascending)."""
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[int] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, edge used to enter, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, via, pos = stack[-1]
            inc = g.incidence[v]
            if pos < len(inc):
                stack[-1] = (v, via, pos + 1)
                e, end = inc[pos]
                if e == via:
                    continue
                w = g.edges[e].v if end == 0 else g.edges[e].u
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.append(via)
    return sorted(found)


@dataclass(frozen=True)
class CutSet:
    edge_ids: tuple[int, ...]
    sides: tuple[tuple[int, ...], tuple[int, ...]]


def _bond_sides(g: SignedGraph, cut: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Sides of ``cut`` if removing it leaves exactly two parts and every cut edge joins them."""
    label = components(g, cut)
    if len(set(label)) != 2:
        return None
    for e in cut:
        u, v, _ = g.edges[e]
        if label[u] == label[v]:
            return None
    first = label[0]
    w1 = tuple(v for v in range(g.n) if label[v] == first)
    w2 = tuple(v for v in range(g.n) if label[v] != first)
    return w1, w2


def enumerate_cuts(g: SignedGraph, size: int) -> list[CutSet]:
    """All minimal edge-cuts with exactly ``size`` edges, in lexicographic order.

    Minimal means no proper subset is a cut, so both sides are connected.
    """
    if size not in (1, 2, 3):
        raise PreconditionError("cut size must be 1, 2 or 3")
    if not is_connected(g):
        raise PreconditionError("enumerate_cuts needs a connected graph")
    candidates = [e for e, edge in enumerate(g.edges) if not edge.is_loop]
    out = []
    for combo in itertools.combinations(candidates, size):
        sides = _bond_sides(g, combo)
        if sides is not None:
            out.append(CutSet(combo, sides))
    return out


def is_three_edge_connected(g: SignedGraph) -> bool:
    """Connected, and no one or two edges disconnect it."""
    if not is_connected(g):
        return False
    return not bridges(g) and not enumerate_cuts(g, 2)


def is_two_edge_cut(g: SignedGraph, e: int, f: int) -> bool:
    """True iff ``{e, f}`` (two distinct edges) is an edge-cut of ``g``."""
    return e != f and is_edge_cut(g, (e, f))


@dataclass(frozen=True)
class CutReport:
    """Where the two negative edges sit relative to small edge-cuts.

    Each witness field is ``None`` when the corresponding statement is false.
    """

    negatives_form_2cut: bool
    common_3cut_partner: int | None
    one_negative_2cut: tuple[int, int] | None
    separating_2cut: tuple[int, int] | None

    @property
    def in_common_3cut(self) -> bool:
        return self.common_3cut_partner is not None


def negative_edges_in_small_cut(g: SignedGraph) -> CutReport:
    neg = g.negative_edges
    if len(neg) != 2:
        raise PreconditionError(f"expected exactly 2 negative edges, found {len(neg)}")
    n1, n2 = neg
    positives = [e for e, edge in enumerate(g.edges) if edge.sign == 1 and not edge.is_loop]

    partner = next((p for p in positives if is_edge_cut(g, (n1, n2, p))), None)

    one = None
    for n, p in itertools.product(neg, positives):
        if is_two_edge_cut(g, n, p):
            one = (min(n, p), max(n, p))
            break

    separating = None
    for p, q in itertools.combinations(positives, 2):
        if not is_two_edge_cut(g, p, q):
            continue
        label = components(g, (p, q))
        ends1 = {label[g.edges[n1].u], label[g.edges[n1].v]}
        ends2 = {label[g.edges[n2].u], label[g.edges[n2].v]}
        if not ends1 & ends2:
            separating = (p, q)
            break

    return CutReport(
        negatives_form_2cut=is_two_edge_cut(g, n1, n2),
        common_3cut_partner=partner,
        one_negative_2cut=one,
        separating_2cut=separating,
    )


# -- signed circuits ---------------------------------------------------------

class CircuitKind(enum.Enum):
    BALANCED_CIRCUIT = "balanced circuit"
    BARBELL = "barbell"


@dataclass(frozen=True)
class Cycle:
    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    negatives: int

    @property
    def balanced(self) -> bool:
        return self.negatives % 2 == 0


@dataclass(frozen=True)
class SignedCircuit:
    kind: CircuitKind
    cycle1: Cycle
    cycle2: Cycle | None = None
    path_edges: tuple[int, ...] = ()
    path_vertices: tuple[int, ...] = ()

    @property
    def edges(self) -> frozenset[int]:
        out = set(self.cycle1.edges) | set(self.path_edges)
        if self.cycle2 is not None:
            out |= set(self.cycle2.edges)
        return frozenset(out)


def _cycle(g: SignedGraph, edges: Sequence[int], vertices: Sequence[int]) -> Cycle:
    return Cycle(tuple(edges), tuple(vertices), sum(g.edges[e].sign == -1 for e in edges))


def _paths(g: SignedGraph, src: int, dst: int, allowed_edge, blocked: set[int]) -> Iterator[tuple[list[int], list[int]]]:
    """Simple paths src -> dst (edges, vertices) over edges passing ``allowed_edge``."""
    path_e: list[int] = []
    path_v = [src]
    on_path = {src}

    def walk(a: int) -> Iterator[tuple[list[int], list[int]]]:
        for e, end in g.incidence[a]:
            if not allowed_edge(e) or g.edges[e].is_loop:
                continue
            b = g.edges[e].v if end == 0 else g.edges[e].u
            if b == dst:
                yield path_e + [e], path_v + [b]
                continue
            if b in on_path or b in blocked:
                continue
            on_path.add(b)
            path_e.append(e)
            path_v.append(b)
            yield from walk(b)
            path_e.pop()
            path_v.pop()
            on_path.discard(b)

    if src == dst:
        return
    yield from walk(src)


def simple_cycles(g: SignedGraph) -> Iterator[Cycle]:
    """Every circuit of ``g`` exactly once (loops and digons included)."""
    for e0, (a, b, _) in enumerate(g.edges):
        if a == b:
            yield _cycle(g, (e0,), (a,))
            continue
        for pe, pv in _paths(g, b, a, lambda e: e > e0, set()):
            yield _cycle(g, [e0] + pe, [a] + pv[:-1])


def cycles_through(g: SignedGraph, e0: int) -> Iterator[Cycle]:
    a, b, _ = g.edges[e0]
    if a == b:
        yield _cycle(g, (e0,), (a,))
        return
    for pe, pv in _paths(g, b, a, lambda e: e != e0, set()):
        yield _cycle(g, [e0] + pe, [a] + pv[:-1])


def _connecting_path(g: SignedGraph, start: set[int], goal: set[int],
                     blocked: set[int]) -> tuple[list[int], list[int]] | None:
    """Shortest path from ``start`` to ``goal`` whose interior avoids ``blocked``."""
    prev: dict[int, tuple[int, int] | None] = {s: None for s in sorted(start)}
    queue = deque(sorted(start))
    while queue:
        a = queue.popleft()
        for e, end in g.incidence[a]:
            if g.edges[e].is_loop:
                continue
            b = g.edges[e].v if end == 0 else g.edges[e].u
            if b in goal:
                edges, verts = [e], [b, a]
                cur = a
                while prev[cur] is not None:
                    pe, pa = prev[cur]
                    edges.append(pe)
                    verts.append(pa)
                    cur = pa
                return edges[::-1], verts[::-1]
            if b in prev or b in blocked:
                continue
            prev[b] = (e, a)
            queue.append(b)
    return None


def find_signed_circuit_through(g: SignedGraph, e: int) -> SignedCircuit | None:
    """A balanced circuit or a barbell containing edge ``e``, or ``None``.

    Exhaustive; exponential in the worst case and meant for small graphs.
    """
    g._check_edge(e)
    for c in cycles_through(g, e):
        if c.balanced:
            return SignedCircuit(CircuitKind.BALANCED_CIRCUIT, c)

    unbalanced = [c for c in simple_cycles(g) if not c.balanced]
    for c1 in unbalanced:
        if e not in c1.edges:
            continue
        for c2 in unbalanced:
            found = _join_barbell(g, c1, c2)
            if found is not None:
                return found

    a, b, _ = g.edges[e]
    if a == b:
        return None
    for c1, c2 in itertools.combinations(unbalanced, 2):
        if e in c1.edges or e in c2.edges:
            continue
        v1, v2 = set(c1.vertices), set(c2.vertices)
        if v1 & v2:
            continue
        for first, second in ((c1, c2), (c2, c1)):
            found = _barbell_with_path_edge(g, first, second, e)
            if found is not None:
                return found
    return None


def _join_barbell(g: SignedGraph, c1: Cycle, c2: Cycle) -> SignedCircuit | None:
    if set(c1.edges) & set(c2.edges):
        return None
    v1, v2 = set(c1.vertices), set(c2.vertices)
    common = v1 & v2
    if len(common) == 1:
        w = next(iter(common))
        return SignedCircuit(CircuitKind.BARBELL, c1, c2, (), (w,))
    if common:
        return None
    path = _connecting_path(g, v1, v2, v1 | v2)
    if path is None:
        return None
    return SignedCircuit(CircuitKind.BARBELL, c1, c2, tuple(path[0]), tuple(path[1]))


def _barbell_with_path_edge(g: SignedGraph, c1: Cycle, c2: Cycle, e: int) -> SignedCircuit | None:
    v1, v2 = set(c1.vertices), set(c2.vertices)
    both = v1 | v2
    a, b, _ = g.edges[e]
    for s, t in ((a, b), (b, a)):
        if s in v2 or t in v1:
            continue
        # first leg: from c1 to s, second leg: from t to c2
        if s in v1:
            first_legs: Iterable[tuple[list[int], list[int]]] = [([], [s])]
        else:
            first_legs = (
                (pe[::-1], pv[::-1])
                for target in sorted(v1)
                for pe, pv in _paths(g, s, target, lambda x: x != e, both | {t})
            )
        for pe1, pv1 in first_legs:
            if t in v2:
                pe2, pv2 = [], [t]
            else:
                blocked = (both - v2) | set(pv1)
                leg = _connecting_path(g, {t}, v2, blocked)
                if leg is None:
                    continue
                pe2, pv2 = leg
                if e in pe2:
                    continue
            return SignedCircuit(CircuitKind.BARBELL, c1, c2,
                                 tuple(pe1 + [e] + pe2), tuple(pv1 + pv2))
    return None


# -- admissibility -----------------------------------------------------------

@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    reason: str
    single_negative: int | None = None
    bridge: int | None = None

    def __bool__(self) -> bool:
        return self.admissible


def is_flow_admissible(g: SignedGraph) -> Admissibility:
    """Decide flow-admissibility with the polynomial criterion.

    Not admissible iff some component with edges is switching-equivalent to a
    signature with one negative edge, or has a bridge with a balanced side.
    """
    from sfk.core import equivalent_to_at_most_one_negative

    for verts in component_vertex_sets(g):
        sub, _, emap = subgraph(g, verts)
        if sub.m == 0:
            continue
        single = equivalent_to_at_most_one_negative(sub)
        if single is not None:
            return Admissibility(False, f"switching-equivalent to the single negative edge {emap[single]}",
                                 single_negative=emap[single])
        for b in bridges(sub):
            for side in component_vertex_sets(sub, (b,)):
                part, _, _ = subgraph(sub, side)
                if is_balanced(part):
                    return Admissibility(False, f"bridge {emap[b]} has a balanced side", bridge=emap[b])
    return Admissibility(True, "admissible")


def is_flow_admissible_by_circuits(g: SignedGraph) -> Admissibility:
    """Same verdict via signed circuits: admissible iff every edge lies in one."""
    for e in range(g.m):
        if find_signed_circuit_through(g, e) is None:
            return Admissibility(False, f"edge {e} lies in no signed circuit")
    return Admissibility(True, "admissible")


# -- 2-edge-cut reduction ----------------------------------------------------

@dataclass(frozen=True)
class ReductionResult:
    """Pieces of a 2-edge-cut reduction along ``{uv, xy}``.

    ``g1`` keeps the negative edges and gains ``ux`` (last edge, stored as
    ``(u, x)``); ``g2`` is all-positive and gains ``vy`` (last edge, stored as
    ``(v, y)``).  Vertex and edge maps send piece ids to original ids.
    """

    g1: SignedGraph
    g2: SignedGraph
    new_edge_in_g1: int
    new_edge_in_g2: int
    g1_vertices: tuple[int, ...]
    g2_vertices: tuple[int, ...]
    g1_edges: tuple[int, ...]
    g2_edges: tuple[int, ...]
    uv: int
    xy: int
    u: int
    v: int
    x: int
    y: int
    original: SignedGraph


def reduce_2cut(g: SignedGraph, cut: Sequence[int] | CutSet) -> ReductionResult:
    edges = tuple(cut.edge_ids if isinstance(cut, CutSet) else cut)
    if len(edges) != 2 or edges[0] == edges[1]:
        raise PreconditionError("a 2-edge-cut reduction needs two distinct edges")
    for e in edges:
        g._check_edge(e)
    if not is_connected(g):
        raise PreconditionError("reduce_2cut needs a connected graph")
    sides = _bond_sides(g, edges)
    if sides is None:
        raise PreconditionError(f"edges {edges} do not form a 2-edge-cut")
    e1, e2 = edges
    if g.sign(e1) == -1 and g.sign(e2) == -1:
        raise PreconditionError("both cut edges are negative; switch the cut away instead")

    side_of = {}
    for i, side in enumerate(sides):
        for w in side:
            side_of[w] = i
    neg_in = [[], []]
    for e in g.negative_edges:
        if e in edges:
            continue
        neg_in[side_of[g.edges[e].u]].append(e)
    if neg_in[0] and neg_in[1]:
        raise PreconditionError("both sides of the cut contain negative edges")
    if neg_in[0]:
        keep = 0
    elif neg_in[1]:
        keep = 1
    else:
        top = max(w for e in edges for w in g.edges[e][:2])
        keep = 1 - side_of[top]

    if g.sign(e1) == -1:
        uv, xy = e2, e1
    elif g.sign(e2) == -1:
        uv, xy = e1, e2
    else:
        uv, xy = min(edges), max(edges)

    def split(e: int) -> tuple[int, int]:
        a, b, _ = g.edges[e]
        return (a, b) if side_of[a] == keep else (b, a)

    u, v = split(uv)
    x, y = split(xy)

    def piece(side: Sequence[int], extra: Edge) -> tuple[SignedGraph, tuple[int, ...], tuple[int, ...]]:
        sub, vmap, emap = subgraph(g, side)
        new_id = {w: i for i, w in enumerate(vmap)}
        added = Edge(new_id[extra.u], new_id[extra.v], extra.sign)
        return SignedGraph(sub.n, sub.edges + (added,)), tuple(vmap), tuple(emap)

    g1, v1, m1 = piece(sides[keep], Edge(u, x, g.sign(xy)))
    g2, v2, m2 = piece(sides[1 - keep], Edge(v, y, 1))
    return ReductionResult(g1, g2, g1.m - 1, g2.m - 1, v1, v2, m1, m2, uv, xy, u, v, x, y, g)


def align_half(f: Flow, e: int, end: int, want: Dir) -> Flow:
    """Reverse-and-negate edge ``e`` if its half at stored end ``end`` is not ``want``."""
    if f.orientation[e][end] is want:
        return f
    return f.reversed_edges((e,))


def recombine_flows(r: ReductionResult, f1: Flow, f2: Flow, k: int | None = None) -> Flow:
    """Glue flows of the two pieces back into a flow on the original graph.

    Needs ``ux`` leaving ``u`` in ``f1``, ``vy`` entering ``v`` in ``f2``, and
    equal values on the two new edges.
    """
    if f1.mode is not f2.mode:
        raise PreconditionError("flows use different arithmetic modes")
    if k is None:
        k = max(f1.k, f2.k)
    if f1.mode is Mode.MOD_K and f1.k != f2.k:
        raise PreconditionError("modular flows must share the modulus")
    ux, vy = r.new_edge_in_g1, r.new_edge_in_g2
    if f1.orientation[ux][0] is not OUT:
        raise PreconditionError("ux must be directed away from u in the first flow")
    if f2.orientation[vy][0] is not IN:
        raise PreconditionError("vy must be directed toward v in the second flow")
    a, b = f1.values[ux], f2.values[vy]
    same = (a - b) % k == 0 if f1.mode is Mode.MOD_K else a == b
    if not same:
        raise PreconditionError(f"boundary values differ: {a} on ux, {b} on vy")

    g = r.original
    orient: list[tuple[Dir, Dir] | None] = [None] * g.m
    values: list[int] = [0] * g.m
    for flow, emap in ((f1, r.g1_edges), (f2, r.g2_edges)):
        for i, e in enumerate(emap):
            orient[e] = flow.orientation[i]
            values[e] = flow.values[i]

    def put(e: int, w: int, d: Dir, other: Dir, value: int) -> None:
        pair = (d, other) if g.edges[e].u == w and not g.edges[e].is_loop else (other, d)
        if g.edges[e].is_loop:
            pair = (d, other)
        orient[e] = pair
        values[e] = value

    put(r.uv, r.u, OUT, IN, a)
    put(r.xy, r.x, f1.orientation[ux][1], f2.orientation[vy][1], a)
    flow = Flow(tuple(orient), tuple(values), k, f1.mode)  # type: ignore[arg-type]
    check = verify_flow(g, flow)
    if not check:
        raise InvariantError(f"recombined flow is invalid: {check.violations[0]}")
    return flow


# -- suppression of degree-2 vertices ----------------------------------------

@dataclass(frozen=True)
class Suppression:
    """Result of replacing maximal degree-2 paths by single edges.

    ``chains[i]`` lists ``(original_edge, entry_end)`` along new edge ``i``
    starting from its stored first endpoint; ``entry_end`` is the stored end
    of the original edge at which the walk enters it.
    """

    graph: SignedGraph
    original: SignedGraph
    vertices: tuple[int, ...]
    chains: tuple[tuple[tuple[int, int], ...], ...]

    def new_edge_of(self, e: int) -> int:
        for i, chain in enumerate(self.chains):
            if any(x == e for x, _ in chain):
                return i
        raise PreconditionError(f"edge {e} is not in the suppressed graph")

    def lift_flow(self, f: Flow) -> Flow:
        """Carry a flow on the suppressed graph back to the original graph."""
        g = self.original
        orient: list[tuple[Dir, Dir] | None] = [None] * g.m
        values = [0] * g.m
        for i, chain in enumerate(self.chains):
            d_start, d_end = f.orientation[i]
            here = d_start
            for e, entry in chain:
                u, v, s = g.edges[e]
                there = here.flipped() if s == 1 else here
                orient[e] = (here, there) if entry == 0 else (there, here)
                values[e] = f.values[i]
                here = there.flipped()
            if here.flipped() is not d_end:
                raise InvariantError(f"orientation of chain {i} does not close up")
        return Flow(tuple(orient), tuple(values), f.k, f.mode)  # type: ignore[arg-type]


def suppress_degree2(g: SignedGraph) -> Suppression:
    """Replace every maximal path through degree-2 vertices by one edge.

    The new edge's sign is the product of the path's signs.  A component
    that is a bare cycle becomes a loop at its smallest vertex.
    """
    loops_at = {u for u, v, _ in g.edges if u == v}
    inner = {w for w in range(g.n) if g.degree(w) == 2 and w not in loops_at}
    used: set[int] = set()
    raw: list[tuple[int, int, int, list[tuple[int, int]]]] = []

    def walk(start: int, e: int, entry: int) -> None:
        steps = []
        sign = 1
        while True:
            used.add(e)
            steps.append((e, entry))
            sign *= g.edges[e].sign
            far = g.edges[e][1 - entry]
            if far not in inner or far == start:
                raw.append((start, far, sign, steps))
                return
            e, end = next(x for x in g.incidence[far] if x[0] != e)
            entry = end

    for w in range(g.n):
        if w in inner:
            continue
        for e, end in g.incidence[w]:
            if e not in used:
                walk(w, e, end)
    label = components(g)
    for e in range(g.m):
        if e not in used:
            base = min(w for w in range(g.n) if label[w] == label[g.edges[e].u])
            first, end = g.incidence[base][0]
            walk(base, first, end)

    raw.sort(key=lambda item: min(x for x, _ in item[3]))
    kept = sorted((set(range(g.n)) - inner) | {a for a, _, _, _ in raw})
    new_id = {w: i for i, w in enumerate(kept)}
    graph = SignedGraph(len(kept), tuple(Edge(new_id[a], new_id[b], s) for a, b, s, _ in raw))
    return Suppression(graph, g, tuple(kept), tuple(tuple(steps) for _, _, _, steps in raw))


# -- oddness and cyclic connectivity ------------------------------------------

def _require_cubic_bridgeless(g: SignedGraph) -> None:
    if g.has_loops() or not g.is_cubic():
        raise PreconditionError("graph must be cubic and loopless")
    if bridges(g):
        raise PreconditionError("graph must be bridgeless")


def oddness(g: SignedGraph) -> int:
    """Minimum number of odd circuits over all 2-factors (signs ignored)."""
    from sfk.matching import perfect_matchings

    _require_cubic_bridgeless(g)
    best: int | None = None
    for matching in perfect_matchings(g):
        label = components(g, matching)
        sizes: dict[int, int] = {}
        for c in label:
            sizes[c] = sizes.get(c, 0) + 1
        odd = sum(1 for s in sizes.values() if s % 2)
        if best is None or odd < best:
            best = odd
            if best == 0:
                break
    if best is None:
        raise InvariantError("bridgeless cubic graph without a perfect matching")
    return best


def cyclic_edge_connectivity(g: SignedGraph) -> float:
    """Smallest edge-cut leaving two sides that both contain a circuit.

    Signs are ignored.  Returns ``math.inf`` when no two disjoint circuits
    exist.  Exhaustive over vertex bipartitions.
    """
    n = g.n
    if n > 24:
        raise PreconditionError("exhaustive cyclic connectivity is limited to 24 vertices")
    best = math.inf
    masks = [(1 << u, 1 << v, u, v) for u, v, _ in g.edges]
    full = (1 << n) - 1
    for w in range(1, 1 << (n - 1)):
        cut = 0
        for bu, bv, _, _ in masks:
            if bool(w & bu) != bool(w & bv):
                cut += 1
        if cut >= best:
            continue
        if _has_cycle(g, w, masks) and _has_cycle(g, full ^ w, masks):
            best = cut
    return best


def _has_cycle(g: SignedGraph, mask: int, masks) -> bool:
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent.get(a, a) != a:
            a = parent[a]
        return a

    for bu, bv, u, v in masks:
        if mask & bu and mask & bv:
            ru, rv = find(u), find(v)
            if ru == rv:
                return True
            parent[ru] = rv
    return False
