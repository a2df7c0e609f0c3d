"""Named small graphs and generators used as fixtures."""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Sequence

from sfk.core import Edge, SignedGraph


def _graph(n: int, pairs: Iterable[Sequence[int]], negatives: Iterable[int] = ()) -> SignedGraph:
    g = SignedGraph.build(n, [(a, b, 1) for a, b in pairs])
    return g.with_negatives(negatives)


def k4(negatives: Iterable[int] = ()) -> SignedGraph:
    return _graph(4, itertools.combinations(range(4), 2), negatives)


def k33(negatives: Iterable[int] = ()) -> SignedGraph:
    """K3,3 with parts {0,1,2} and {3,4,5}; edge ``3*i + j`` joins ``i`` and ``3 + j``."""
    return _graph(6, [(i, 3 + j) for i in range(3) for j in range(3)], negatives)


def prism(negatives: Iterable[int] = ()) -> SignedGraph:
    """Triangular prism: triangles 0-1-2 and 3-4-5 joined by 0-3, 1-4, 2-5."""
    pairs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return _graph(6, pairs, negatives)


def cube(negatives: Iterable[int] = ()) -> SignedGraph:
    """The 3-cube on bit strings 0..7; edges sorted by (low, high)."""
    pairs = sorted((a, a ^ (1 << b)) for a in range(8) for b in range(3) if a < a ^ (1 << b))
    return _graph(8, pairs, negatives)


def petersen(negatives: Iterable[int] = ()) -> SignedGraph:
    """Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9."""
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _graph(10, pairs, negatives)


def theta(negatives: Iterable[int] = ()) -> SignedGraph:
    """Two vertices joined by three parallel edges."""
    return _graph(2, [(0, 1)] * 3, negatives)


def doubled_c6() -> SignedGraph:
    """Hexagon with every second edge doubled, one copy of each pair negative.

    Cubic and bipartite; its flow number is 6.
    """
    edges = []
    for i in range(6):
        a, b = i, (i + 1) % 6
        if i % 2 == 0:
            edges += [(a, b, 1), (a, b, -1)]
        else:
            edges.append((a, b, 1))
    return SignedGraph.build(6, edges)


def digon() -> SignedGraph:
    return _graph(2, [(0, 1), (0, 1)])


def cycle(n: int, negatives: Iterable[int] = ()) -> SignedGraph:
    return _graph(n, [(i, (i + 1) % n) for i in range(n)], negatives)


def snark_with_digon() -> SignedGraph:
    """Petersen with one edge replaced by a path through a digon.

    Still a bridgeless cubic snark, but not critical: deleting either digon
    edge leaves the Petersen graph after suppression.
    """
    p = petersen()
    a, b, _ = p.edges[0]
    rest = [(u, v, 1) for u, v, _ in p.edges[1:]]
    x, y = p.n, p.n + 1
    rest += [(a, x, 1), (x, y, 1), (x, y, 1), (y, b, 1)]
    return SignedGraph.build(p.n + 2, rest)


# -- bridged instances ---------------------------------------------------------

BASES = {"k4": k4, "k33": k33, "prism": prism, "theta": theta, "cube": cube}


def subdivide(g: SignedGraph, edge_ids: Sequence[int]) -> tuple[SignedGraph, list[int]]:
    """Insert a new vertex into each listed edge (repeats allowed, split in turn).

    Returns the new graph and the new vertices.  The first half keeps the
    old sign and the old edge id; the second half is positive and appended.
    """
    n = g.n
    edges = list(g.edges)
    fresh = []
    for e in edge_ids:
        u, v, s = edges[e]
        edges[e] = Edge(u, n, s)
        edges.append(Edge(n, v, 1))
        fresh.append(n)
        n += 1
    return SignedGraph(n, tuple(edges)), fresh


def join_blocks(blocks: Sequence[tuple[SignedGraph, Sequence[int]]]) -> tuple[SignedGraph, list[int]]:
    """Chain blocks by bridges: the last attach vertex of block i meets the first of block i+1.

    End blocks list one attach vertex, middle blocks two.  Returns the joined
    graph and the bridge edge ids.
    """
    edges: list[Edge] = []
    offsets = []
    n = 0
    for g, _ in blocks:
        offsets.append(n)
        edges += [Edge(u + n, v + n, s) for u, v, s in g.edges]
        n += g.n
    bridge_ids = []
    for i in range(len(blocks) - 1):
        a = blocks[i][1][-1] + offsets[i]
        b = blocks[i + 1][1][0] + offsets[i + 1]
        bridge_ids.append(len(edges))
        edges.append(Edge(a, b, 1))
    return SignedGraph(n, tuple(edges)), bridge_ids


def bridged_instances(count: int, seed: int = 0) -> list[tuple[SignedGraph, list[int]]]:
    """Cubic signed graphs with two negative edges in unbalanced end blocks joined by 1-3 bridges.

    End blocks are a base cubic graph with one edge subdivided and one
    non-bridge edge made negative; middle blocks are all-positive bases with
    two subdivisions.  Deterministic for a given seed.
    """
    rng = random.Random(seed)
    names = sorted(BASES)
    out = []
    while len(out) < count:
        length = 1 + len(out) % 3
        blocks = []
        for pos in range(length + 1):
            base = BASES[rng.choice(names)]()
            if pos in (0, length):
                g, fresh = subdivide(base, [rng.randrange(base.m)])
                g = g.with_negatives([rng.randrange(g.m)])
                blocks.append((g, fresh))
            else:
                g, fresh = subdivide(base, [rng.randrange(base.m), rng.randrange(base.m)])
                if rng.random() < 0.5:
                    fresh.reverse()
                blocks.append((g, fresh))
        out.append(join_blocks(blocks))
    return out


def two_cut_join(a: SignedGraph, b: SignedGraph, ea: int, eb: int) -> SignedGraph:
    """Delete ``ea`` from ``a`` and ``eb`` from ``b`` and reconnect their ends by two edges.

    The two new edges (last in the edge list) form a 2-edge-cut.
    """
    ua, va, _ = a.edges[ea]
    ub, vb, _ = b.edges[eb]
    edges = [e for i, e in enumerate(a.edges) if i != ea]
    edges += [Edge(u + a.n, v + a.n, s) for i, (u, v, s) in enumerate(b.edges) if i != eb]
    edges += [Edge(ua, ub + a.n, 1), Edge(va, vb + a.n, 1)]
    return SignedGraph(a.n + b.n, tuple(edges))
