"""Regenerate the bundled cubic-graph catalogs.

Connected loopless cubic multigraphs are grown from the theta graph by edge
insertion (subdivide two edges, join the new vertices) and by joining two
smaller ones with a bridge, deduplicated up to isomorphism with networkx;
the simple ones are kept.  Counts are checked against the known sequence
1, 2, 5, 19, 85, 509 for 4..14 vertices.  Every bipartite graph
found is kept; larger orders are sampled into the main catalog.

    python3 scripts/gen_catalog.py [--max-n 12] [--extra-n14 24]
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

import networkx as nx
import numpy as np

from sfk.core import Edge, SignedGraph
from sfk.formats import CatalogEntry, serialize_catalog
from sfk.graphs import doubled_c6, petersen, theta
from sfk.matching import bipartition

KNOWN = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}
DATA = Path(__file__).resolve().parent.parent / "src" / "sfk" / "data"


def _subdivide(h: nx.MultiGraph, key: tuple[int, int, int], w: int) -> None:
    a, b, k = key
    h.remove_edge(a, b, k)
    h.add_edge(a, w)
    h.add_edge(w, b)


def insertions(g: nx.MultiGraph) -> list[nx.MultiGraph]:
    """Subdivide two edges (or one edge twice) and join the new vertices."""
    n = g.number_of_nodes()
    keys = sorted(g.edges(keys=True))
    out = []
    for i, first in enumerate(keys):
        for second in keys[i:]:
            h = g.copy()
            _subdivide(h, first, n)
            if second == first:
                h.remove_edge(n, first[1])
                h.add_edge(n, n + 1)
                h.add_edge(n + 1, first[1])
            else:
                _subdivide(h, second, n + 1)
            h.add_edge(n, n + 1)
            out.append(h)
    return out


def bridgings(g1: nx.MultiGraph, g2: nx.MultiGraph) -> list[nx.MultiGraph]:
    """Subdivide one edge in each graph and join the new vertices by a bridge."""
    out = []
    for e1 in sorted(g1.edges(keys=True)):
        for e2 in sorted(g2.edges(keys=True)):
            h = nx.disjoint_union(g1, g2)
            n1 = g1.number_of_nodes()
            w = h.number_of_nodes()
            _subdivide(h, e1, w)
            _subdivide(h, (e2[0] + n1, e2[1] + n1, e2[2]), w + 1)
            h.add_edge(w, w + 1)
            out.append(h)
    return out


def weighted(h: nx.MultiGraph) -> nx.Graph:
    """Simple graph with edge multiplicities as a string attribute."""
    w = nx.Graph()
    w.add_nodes_from(h.nodes())
    for a, b in h.edges():
        mult = int(w.edges[a, b]["mult"]) + 1 if w.has_edge(a, b) else 1
        w.add_edge(a, b, mult=str(mult))
    return w


def spectrum_key(h: nx.MultiGraph) -> tuple:
    """Rounded adjacency spectrum (multiplicities as entries); regular graphs defeat WL hashing."""
    a = nx.to_numpy_array(h, nodelist=sorted(h.nodes()), multigraph_weight=sum)
    return tuple(np.round(np.linalg.eigvalsh(a), 6) + 0.0)


def dedupe(graphs: list[nx.MultiGraph]) -> list[nx.MultiGraph]:
    buckets: dict[tuple, list[tuple[nx.MultiGraph, nx.Graph]]] = {}
    same = nx.algorithms.isomorphism.categorical_edge_match("mult", "1")
    for h in graphs:
        w = weighted(h)
        key = spectrum_key(h)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(w, other, edge_match=same) for _, other in bucket):
            bucket.append((h, w))
    return [h for key in sorted(buckets) for h, _ in buckets[key]]


def is_simple(h: nx.MultiGraph) -> bool:
    return nx.Graph(h).number_of_edges() == h.number_of_edges()


def canonical_edges(h: nx.MultiGraph) -> list[tuple[int, int]]:
    """Edges relabelled in breadth-first order from the least vertex."""
    order = list(nx.bfs_tree(h, min(h.nodes())).nodes())
    pos = {v: i for i, v in enumerate(order)}
    return sorted(tuple(sorted((pos[a], pos[b]))) for a, b in h.edges())


def to_signed(h: nx.MultiGraph) -> SignedGraph:
    return SignedGraph(h.number_of_nodes(), tuple(Edge(a, b, 1) for a, b in canonical_edges(h)))


def generate(max_n: int) -> dict[int, list[nx.MultiGraph]]:
    """Simple connected cubic graphs per order, via loopless multigraph intermediates."""
    multi = {2: [nx.MultiGraph([(0, 1)] * 3)]}
    simple = {}
    for n in range(4, max_n + 1, 2):
        grown = [h for g in multi[n - 2] for h in insertions(g)]
        for n1 in range(2, n - 3, 2):
            n2 = n - 2 - n1
            if n1 <= n2:
                grown += [h for g1 in multi[n1] for g2 in multi[n2] for h in bridgings(g1, g2)]
        if n == max_n:
            grown = [h for h in grown if is_simple(h)]
        multi[n] = dedupe(grown)
        simple[n] = [h for h in multi[n] if is_simple(h)]
        if n in KNOWN and len(simple[n]) != KNOWN[n]:
            raise SystemExit(f"n={n}: generated {len(simple[n])} graphs, expected {KNOWN[n]}")
        print(f"n={n}: {len(simple[n])} simple of {len(multi[n])} graphs kept")
    return simple


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--extra-n14", type=int, default=24, help="sampled 14-vertex graphs to add")
    ap.add_argument("--seed", type=int, default=14)
    args = ap.parse_args()

    top = max(args.max_n, 14 if args.extra_n14 else args.max_n)
    levels = generate(top)
    entries: list[CatalogEntry] = []
    bip: list[CatalogEntry] = []
    for n in sorted(levels):
        pool = levels[n]
        for h in pool:
            g = to_signed(h)
            if bipartition(g) is not None:
                bip.append(CatalogEntry(f"bipartite{n}_{len(bip):02d}", g))
        if n > args.max_n:
            pool = random.Random(args.seed).sample(pool, min(args.extra_n14, len(pool)))
        for i, h in enumerate(pool):
            entries.append(CatalogEntry(f"cubic{n}_{i:03d}", to_signed(h)))
    entries.append(CatalogEntry("petersen", petersen()))
    entries.append(CatalogEntry("theta", theta()))
    entries.append(CatalogEntry("doubled_c6", doubled_c6().underlying()))
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "cubic.sg").write_text(serialize_catalog(entries), encoding="utf-8")
    (DATA / "bipartite.sg").write_text(serialize_catalog(bip), encoding="utf-8")
    print(f"wrote {len(entries)} cubic and {len(bip)} bipartite graphs to {DATA}")


if __name__ == "__main__":
    main()
