"""Perfect matchings and 3-edge-colorings of cubic multigraphs.

Everything here is exhaustive backtracking; the graphs of interest have a
few dozen edges at most.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from sfk.core import Edge, SignedGraph, is_edge_cut
from sfk.errors import InvariantError, PreconditionError
from sfk.structure import bridges, suppress_degree2

Coloring = tuple[int, ...]


def bipartition(g: SignedGraph) -> tuple[list[int], list[int]] | None:
    """Two colour classes of the underlying graph, or ``None`` if it has an odd cycle."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for e, end in g.incidence[a]:
                b = g.edges[e].v if end == 0 else g.edges[e].u
                if side[b] == -1:
                    side[b] = 1 - side[a]
                    queue.append(b)
                elif side[b] == side[a]:
                    return None
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


def require_cubic(g: SignedGraph) -> None:
    if g.has_loops():
        raise PreconditionError("cubic graph expected, found a loop")
    if not g.is_cubic():
        raise PreconditionError("cubic graph expected")


def perfect_matchings(g: SignedGraph, forced: Iterable[int] = (),
                      forbidden: Iterable[int] = ()) -> Iterator[tuple[int, ...]]:
    """Yield every perfect matching (sorted edge ids) containing ``forced``.

    Branches on the uncovered vertex with the fewest usable edges, so a
    vertex with one usable edge is matched immediately.
    """
    banned = set(forbidden)
    covered = [False] * g.n
    chosen: list[int] = []
    for e in forced:
        u, v, _ = g.edges[e]
        if u == v or covered[u] or covered[v] or e in banned:
            return
        covered[u] = covered[v] = True
        chosen.append(e)

    def usable(a: int) -> list[int]:
        out = []
        for e, end in g.incidence[a]:
            if e in banned:
                continue
            u, v, _ = g.edges[e]
            if u == v:
                continue
            b = v if end == 0 else u
            if not covered[b]:
                out.append(e)
        return out

    def search() -> Iterator[tuple[int, ...]]:
        best_opts = None
        for a in range(g.n):
            if covered[a]:
                continue
            opts = usable(a)
            if best_opts is None or len(opts) < len(best_opts):
                best_opts = opts
                if not opts:
                    break
        if best_opts is None:
            yield tuple(sorted(chosen))
            return
        for e in best_opts:
            u, v, _ = g.edges[e]
            covered[u] = covered[v] = True
            chosen.append(e)
            yield from search()
            chosen.pop()
            covered[u] = covered[v] = False

    yield from search()


def three_edge_coloring(g: SignedGraph) -> Coloring | None:
    """A proper 3-edge-coloring (colors 0, 1, 2 per edge) or ``None``."""
    require_cubic(g)
    return _color(g)


def _color(g: SignedGraph) -> Coloring | None:
    colors = [-1] * g.m
    used = [0] * g.n  # bitmask of colors present at each vertex

    def available(e: int) -> int:
        u, v, _ = g.edges[e]
        return 0b111 & ~(used[u] | used[v])

    def pick() -> int:
        best, best_count = -1, 4
        for e in range(g.m):
            if colors[e] != -1:
                continue
            count = bin(available(e)).count("1")
            if count < best_count:
                best, best_count = e, count
                if count == 0:
                    break
        return best

    def search(first: bool) -> bool:
        e = pick()
        if e == -1:
            return True
        mask = available(e)
        u, v, _ = g.edges[e]
        for c in (0,) if first else (0, 1, 2):
            if not mask >> c & 1:
                continue
            colors[e] = c
            used[u] |= 1 << c
            used[v] |= 1 << c
            if search(False):
                return True
            used[u] &= ~(1 << c)
            used[v] &= ~(1 << c)
            colors[e] = -1
        return False

    if g.m == 0:
        return ()
    return tuple(colors) if search(True) else None


def is_colorable(g: SignedGraph) -> bool:
    """3-edge-colorability of a cubic graph that may contain loops (never colorable)."""
    if g.has_loops():
        return False
    require_cubic(g)
    return _color(g) is not None


def color_classes(coloring: Coloring) -> list[set[int]]:
    return [{e for e, c in enumerate(coloring) if c == k} for k in range(3)]


def one_factor_containing(g: SignedGraph, e: int) -> tuple[int, ...]:
    """A perfect matching through ``e`` of a bridgeless cubic graph."""
    require_cubic(g)
    g._check_edge(e)
    if bridges(g):
        raise PreconditionError("graph must be bridgeless")
    for matching in perfect_matchings(g, forced=(e,)):
        return matching
    raise InvariantError(f"bridgeless cubic graph has no perfect matching through edge {e}")


def one_factor_containing_two(g: SignedGraph, e: int, f: int) -> tuple[int, ...]:
    """A perfect matching through both ``e`` and ``f`` of a cubic bipartite graph.

    Built by splicing: remove ``e = uv`` and ``f = xy`` (``u``, ``x`` on the
    same side), add ``ux`` and ``vy``, take a matching through ``ux`` and
    swap back.  The matching is forced to contain ``vy`` by a counting
    argument on the bipartition; if it does not, :class:`InvariantError`.
    """
    require_cubic(g)
    g._check_edge(e)
    g._check_edge(f)
    parts = bipartition(g)
    if parts is None:
        raise PreconditionError("graph must be bipartite")
    if e == f:
        raise PreconditionError("edges must be distinct")
    ends_e, ends_f = set(g.edges[e][:2]), set(g.edges[f][:2])
    if ends_e & ends_f:
        raise PreconditionError(f"edges {e} and {f} are adjacent and share a trivial 3-edge-cut")
    for p in range(g.m):
        if p not in (e, f) and is_edge_cut(g, (e, f, p)):
            raise PreconditionError(f"edges {e} and {f} lie in a common 3-edge-cut with edge {p}")

    if is_edge_cut(g, (e, f)):
        coloring = _color(g)
        if coloring is None:
            raise InvariantError("cubic bipartite graph is not 3-edge-colorable")
        if coloring[e] != coloring[f]:
            raise InvariantError(f"2-edge-cut {{{e}, {f}}} received two colors")
        return tuple(x for x in range(g.m) if coloring[x] == coloring[e])

    left = set(parts[0])
    u, v = g.edges[e][:2] if g.edges[e].u in left else g.edges[e][1::-1]
    x, y = g.edges[f][:2] if g.edges[f].u in left else g.edges[f][1::-1]
    rest, keep = g.without_edges((e, f))
    spliced = SignedGraph(g.n, rest.edges + (Edge(u, x, 1), Edge(v, y, 1)))
    e_new, f_new = spliced.m - 2, spliced.m - 1
    if bridges(spliced):
        raise InvariantError("spliced graph has a bridge")
    factor = one_factor_containing(spliced, e_new)
    if f_new not in factor:
        raise InvariantError(
            f"perfect matching of the spliced graph through ux misses vy (edges {e}, {f})")
    return tuple(sorted([keep[i] for i in factor if i < len(keep)] + [e, f]))


def is_critical_snark(g: SignedGraph) -> bool:
    """True iff deleting any single edge leaves a 3-edge-colorable graph after suppression."""
    require_cubic(g)
    if bridges(g):
        raise PreconditionError("graph must be bridgeless")
    if _color(g) is not None:
        raise PreconditionError("graph is 3-edge-colorable, not a snark")
    return all(_colorable_after_deleting(g, e) for e in range(g.m))


def _colorable_after_deleting(g: SignedGraph, e: int) -> bool:
    rest, _ = g.without_edges((e,))
    reduced = suppress_degree2(rest).graph
    if reduced.has_loops() or not reduced.is_cubic():
        return False
    return _color(reduced) is not None
