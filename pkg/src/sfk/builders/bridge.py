"""6-flows on cubic graphs with two negative edges and at least one bridge.

Once every 2-edge-cut with an all-positive side is reduced away, the
bridges line up as a path of blocks with one negative edge in each end
block.  Each block is solved on its own: an end block loses its negative
edge and gains a vertex joined to the negative edge's ends and the bridge
end, and a Z6-flow around that vertex is converted to an integer flow;
middle blocks get an extra edge standing in for the through-traffic.  The
negative edges end up with value 1 and every bridge with value 2.
"""

from __future__ import annotations

from sfk.builders.common import glue, require_two_negative_cubic
from sfk.builders.result import BuildResult
from sfk.builders.six import six_flow_choose_value, z6_flow_prescribed_at_vertex, z6_to_integer6
from sfk.core import IN, OUT, Dir, Edge, Flow, SignedGraph, components, reverse_all, verify_flow
from sfk.errors import InvariantError, PreconditionError
from sfk.structure import ReductionResult, bridges, enumerate_cuts, reduce_2cut, subgraph


def bridge_six_flow(g: SignedGraph) -> BuildResult:
    """6-flow with value 1 on both negative edges and 2 on every bridge."""
    require_two_negative_cubic(g)
    if not bridges(g):
        raise PreconditionError("graph has no bridge")
    trace: list[tuple[str, object]] = []
    flow = _solve(g, 0, trace)
    check = verify_flow(g, flow)
    if not check:
        raise InvariantError(f"bridge construction failed: {check.violations[0]}")
    return BuildResult(flow, "bridge6", tuple(trace))


def _positive_side_cut(g: SignedGraph) -> ReductionResult | None:
    for cut in enumerate_cuts(g, 2):
        try:
            r = reduce_2cut(g, cut)
        except PreconditionError:
            continue
        if r.g2.negative_edges or r.g2.has_loops() or bridges(r.g2):
            continue
        return r
    return None


def _solve(g: SignedGraph, depth: int, trace: list) -> Flow:
    if depth > g.m:
        raise InvariantError("2-edge-cut recursion did not terminate")
    r = _positive_side_cut(g)
    if r is None:
        return _block_path(g, trace)
    trace.append(("reduce", (r.uv, r.xy)))
    f1 = _solve(r.g1, depth + 1, trace)
    f2 = six_flow_choose_value(r.g2, r.new_edge_in_g2, f1.values[r.new_edge_in_g1]).flow
    return glue(r, f1, f2, 6)


def _block_path(g: SignedGraph, trace: list) -> Flow:
    bs = bridges(g)
    label = components(g, bs)
    blocks: dict[int, list[int]] = {}
    for w, c in enumerate(label):
        blocks.setdefault(c, []).append(w)
    touching: dict[int, list[int]] = {c: [] for c in blocks}
    for e in bs:
        a, b, _ = g.edges[e]
        touching[label[a]].append(e)
        touching[label[b]].append(e)
    if len(blocks) != len(bs) + 1 or any(len(t) > 2 for t in touching.values()):
        raise InvariantError("bridges do not form a path of blocks")
    n0, nl = g.negative_edges
    start, finish = label[g.edges[n0].u], label[g.edges[nl].u]
    if start == finish or len(touching[start]) != 1 or len(touching[finish]) != 1:
        raise InvariantError("negative edges are not in distinct end blocks")

    order = [start]
    chain: list[tuple[int, int, int]] = []  # (bridge, tail vertex, head vertex)
    while order[-1] != finish:
        here = order[-1]
        e = next(x for x in touching[here] if not chain or x != chain[-1][0])
        a, b, _ = g.edges[e]
        tail, head = (a, b) if label[a] == here else (b, a)
        chain.append((e, tail, head))
        order.append(label[head])
    trace.append(("blocks", tuple(order)))

    orient: list[tuple[Dir, Dir] | None] = [None] * g.m
    values = [0] * g.m
    for e, tail, head in chain:
        orient[e] = (OUT, IN) if g.edges[e].u == tail else (IN, OUT)
        values[e] = 2
    _end_block(g, blocks[start], n0, chain[0][1], True, orient, values)
    _end_block(g, blocks[finish], nl, chain[-1][2], False, orient, values)
    for j in range(1, len(order) - 1):
        _middle_block(g, blocks[order[j]], chain[j - 1][2], chain[j][1], orient, values)
    return Flow(tuple(orient), tuple(values), 6)  # type: ignore[arg-type]


def _end_block(g: SignedGraph, part: list[int], n: int, z: int, source: bool,
               orient: list, values: list) -> None:
    """Fill one end block; ``source`` means the bridge leaves it."""
    a, b, _ = g.edges[n]
    loop_pair = (IN, IN) if source else (OUT, OUT)
    if a == b:
        if part != [a]:
            raise InvariantError(f"negative loop at {a} sits in a larger block")
        orient[n] = loop_pair
        values[n] = 1
        return
    sub, vmap, emap = subgraph(g, part)
    new_id = {w: i for i, w in enumerate(vmap)}
    drop = emap.index(n)
    kept = [i for i in range(sub.m) if i != drop]
    w = sub.n
    edges = tuple(sub.edges[i] for i in kept) + (
        Edge(w, new_id[a], 1), Edge(w, new_id[b], 1), Edge(w, new_id[z], 1))
    star = SignedGraph(sub.n + 1, edges)
    ea, eb, ez = len(kept), len(kept) + 1, len(kept) + 2
    try:
        z6 = z6_flow_prescribed_at_vertex(star, w, 1, 1, -2, inward=not source, edges=(ea, eb, ez))
    except PreconditionError as exc:
        raise InvariantError(f"end block around edge {n} is not reducible: {exc}") from exc
    flow = z6_to_integer6(star, z6, ea, eb, ez, at=w).flow
    for i, old in enumerate(kept):
        orient[emap[old]] = flow.orientation[i]
        values[emap[old]] = flow.values[i]
    if flow.values[ez] != 2 or flow.values[ea] != 1 or flow.values[eb] != 1:
        raise InvariantError("end block values around the new vertex are wrong")
    orient[n] = loop_pair
    values[n] = 1


def _middle_block(g: SignedGraph, part: list[int], p: int, q: int,
                  orient: list, values: list) -> None:
    """Fill a block entered at ``p`` and left at ``q``; an edge ``q -> p`` carries the 2 units."""
    sub, vmap, emap = subgraph(g, part)
    new_id = {w: i for i, w in enumerate(vmap)}
    aug = SignedGraph(sub.n, sub.edges + (Edge(new_id[q], new_id[p], 1),))
    ej = sub.m
    flow = six_flow_choose_value(aug, ej, 2).flow
    if flow.orientation[ej][0] is not OUT:
        flow = reverse_all(flow)
    for i, old in enumerate(emap):
        orient[old] = flow.orientation[i]
        values[old] = flow.values[i]
