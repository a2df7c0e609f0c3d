from __future__ import annotations

import itertools

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sfk.core import IN, OUT, Edge, Flow, SignedGraph

settings.register_profile("sfk", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("sfk")


@st.composite
def signed_graphs(draw, max_n: int = 6, max_m: int = 8, loops: bool = True) -> SignedGraph:
    """Small signed multigraphs, loops and parallel edges included."""
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    edges = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if u == v and not loops:
            continue
        edges.append(Edge(u, v, draw(st.sampled_from((1, -1)))))
    return SignedGraph(n, tuple(edges))


@st.composite
def oriented(draw, g: SignedGraph):
    """Random sign-consistent orientation of ``g``."""
    out = []
    for _, _, s in g.edges:
        a = draw(st.sampled_from((IN, OUT)))
        out.append((a, a.flipped()) if s == 1 else (a, a))
    return tuple(out)


def kirchhoff_by_hand(g: SignedGraph, f: Flow) -> bool:
    """Independent restatement: at each vertex, sum over IN half-edges equals sum over OUT half-edges."""
    for w in range(g.n):
        into = 0
        out = 0
        for e, (u, v, _) in enumerate(g.edges):
            for end, x in ((0, u), (1, v)):
                if x != w:
                    continue
                if f.orientation[e][end].value == "i":
                    into += f.values[e]
                else:
                    out += f.values[e]
        diff = into - out
        if (diff % f.k if f.mode.value == "mod" else diff) != 0:
            return False
    if f.mode.value == "mod":
        return all(x % f.k for x in f.values)
    return all(x != 0 and -f.k < x < f.k for x in f.values)


def to_nx(g: SignedGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    for e, (u, v, _) in enumerate(g.edges):
        h.add_edge(u, v, key=e)
    return h


def brute_cuts(g: SignedGraph, size: int) -> list[tuple[int, ...]]:
    """Minimal edge cuts of exactly ``size`` edges, by trying every subset."""
    base = nx.number_connected_components(to_nx(g))

    def splits(subset) -> bool:
        h = to_nx(g)
        h.remove_edges_from([(g.edges[e].u, g.edges[e].v, e) for e in subset])
        return nx.number_connected_components(h) > base

    found = []
    for subset in itertools.combinations(range(g.m), size):
        if splits(subset) and not any(splits(s) for r in range(1, size) for s in itertools.combinations(subset, r)):
            found.append(subset)
    return found
