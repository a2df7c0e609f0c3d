"""Exact exhaustive search for nowhere-zero flows, plus signed-graph corpora.

Every edge carries a signed value in a fixed reference orientation (positive
edges ``u -> v``, negative edges with both halves out), so choosing an
orientation and a value in ``1..k-1`` amounts to choosing a nonzero value in
``-(k-1)..k-1``.  Edges are visited in vertex-elimination order; when an edge
is the last unassigned one at a vertex its value is forced, and partial sums
are pruned against the capacity still available at each vertex.
"""

from __future__ import annotations

import enum
import itertools
import random
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from sfk.core import (Dir, Flow, HalfPair, Mode, SignedGraph, is_edge_cut, positive_orientation,
                      verify_flow)
from sfk.errors import InvariantError, PreconditionError
from sfk.formats import CatalogEntry
from sfk.structure import is_flow_admissible


class Outcome(enum.Enum):
    YES = "yes"
    NO = "no"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class SearchBudget:
    max_k: int = 12
    node_limit: int | None = None
    time_limit: float | None = None


@dataclass(frozen=True)
class Prescription:
    """Constraint on one edge.

    ``value`` alone fixes the magnitude (either orientation).  With
    ``orientation`` the edge must be oriented exactly so, and ``value`` (if
    given) is the value in that orientation.
    """

    value: int | None = None
    orientation: HalfPair | None = None


@dataclass(frozen=True)
class SearchResult:
    outcome: Outcome
    flow: Flow | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.outcome is Outcome.YES


class _OutOfBudget(Exception):
    pass


def _normalize(prescriptions: Mapping[int, object] | None, m: int) -> dict[int, Prescription]:
    out = {}
    for e, p in (prescriptions or {}).items():
        if not 0 <= e < m:
            raise PreconditionError(f"prescription for unknown edge {e}")
        if isinstance(p, int):
            p = Prescription(value=p)
        elif isinstance(p, tuple):
            p = Prescription(*p)
        if not isinstance(p, Prescription):
            raise PreconditionError(f"malformed prescription for edge {e}: {p!r}")
        if p.value is None and p.orientation is None:
            raise PreconditionError(f"empty prescription for edge {e}")
        out[e] = p
    return out


def _allowed(g: SignedGraph, k: int, mode: Mode, pres: dict[int, Prescription], e: int) -> list[int]:
    """Admissible signed values of edge ``e`` in the reference orientation, small magnitudes first."""
    if mode is Mode.INTEGER:
        values = [x for a in range(1, k) for x in (a, -a)]
    else:
        values = list(range(1, k))
    p = pres.get(e)
    if p is None:
        return values
    ref = positive_orientation(g)[e]
    sign = 0
    if p.orientation is not None:
        pair = tuple(p.orientation)
        rev = (ref[0].flipped(), ref[1].flipped())
        if pair == ref:
            sign = 1
        elif pair == rev:
            sign = -1
        else:
            raise PreconditionError(f"prescribed orientation of edge {e} does not fit its sign")
    if mode is Mode.MOD_K:
        if p.value is None:
            return values
        if p.orientation is None:
            wanted = {p.value % k, -p.value % k}
        else:
            wanted = {sign * p.value % k}
        return [x for x in values if x in wanted]
    if p.orientation is None:
        return [x for x in values if abs(x) == abs(p.value)]
    if p.value is None:
        return [x for x in values if x * sign > 0]
    return [x for x in values if x == sign * p.value]


def _edge_order(g: SignedGraph) -> list[int]:
    """Edges grouped by a breadth-first vertex order so vertices close early."""
    seen_v = [False] * g.n
    placed = [False] * g.m
    order: list[int] = []
    for root in range(g.n):
        if seen_v[root]:
            continue
        seen_v[root] = True
        queue = [root]
        while queue:
            a = queue.pop(0)
            for e, _ in g.incidence[a]:
                if placed[e]:
                    continue
                placed[e] = True
                order.append(e)
                b = g.other_end(e, a)
                if not seen_v[b]:
                    seen_v[b] = True
                    queue.append(b)
    return order


def _search(g: SignedGraph, k: int, mode: Mode, pres: dict[int, Prescription],
            budget: SearchBudget | None, seed: int | None = None) -> SearchResult:
    if k < 2:
        raise PreconditionError("k must be at least 2")
    ref = positive_orientation(g)
    m = g.m
    order = _edge_order(g)
    choices = [_allowed(g, k, mode, pres, e) for e in range(m)]
    if any(not c for c in choices):
        return SearchResult(Outcome.NO)
    if seed is not None:
        rng = random.Random(seed)
        for c in choices:
            rng.shuffle(c)
    if not pres:
        first = next((e for e in order if g.edges[e].sign == 1 and not g.edges[e].is_loop), None)
        if first is None:
            first = next((e for e in order if not g.edges[e].is_loop), None)
        if first is not None and mode is Mode.INTEGER:
            choices[first] = [x for x in choices[first] if x > 0]

    coef = []
    for (u, v, _), (du, dv) in zip(g.edges, ref):
        coef.append((du.inflow, dv.inflow))
    remaining = [[0] * g.n for _ in range(m + 1)]
    # remaining[i][w]: sum of |coefficient| at w over edges at positions >= i
    for i in range(m - 1, -1, -1):
        remaining[i] = remaining[i + 1][:]
        e = order[i]
        u, v, _ = g.edges[e]
        if u == v:
            remaining[i][u] += abs(coef[e][0] + coef[e][1])
        else:
            remaining[i][u] += 1
            remaining[i][v] += 1
    forced: list[tuple[int, int] | None] = []
    for i, e in enumerate(order):
        u, v, _ = g.edges[e]
        hit = None
        if u != v:
            for w, c in ((u, coef[e][0]), (v, coef[e][1])):
                if remaining[i + 1][w] == 0:
                    hit = (w, c)
                    break
        forced.append(hit)

    net = [0] * g.n
    vals = [0] * m
    nodes = 0
    deadline = None if budget is None or budget.time_limit is None else time.monotonic() + budget.time_limit
    limit = None if budget is None else budget.node_limit
    cap = k - 1
    integer = mode is Mode.INTEGER

    def fits(w: int, i: int) -> bool:
        rest = remaining[i + 1][w]
        if integer:
            return abs(net[w]) <= rest * cap
        return rest > 0 or net[w] % k == 0

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        nodes += 1
        if limit is not None and nodes > limit:
            raise _OutOfBudget
        if deadline is not None and nodes & 1023 == 0 and time.monotonic() > deadline:
            raise _OutOfBudget
        e = order[i]
        u, v, _ = g.edges[e]
        cu, cv = coef[e]
        hit = forced[i]
        if hit is not None:
            w, c = hit
            if integer:
                x = -net[w] * c  # c is +-1
                cand = (x,) if x in choices[e] else ()
            else:
                x = (-net[w] * c) % k
                cand = (x,) if x in choices[e] else ()
        else:
            cand = choices[e]
        for x in cand:
            if u == v:
                net[u] += (cu + cv) * x
            else:
                net[u] += cu * x
                net[v] += cv * x
            vals[e] = x
            if fits(u, i) and fits(v, i) and rec(i + 1):
                return True
            if u == v:
                net[u] -= (cu + cv) * x
            else:
                net[u] -= cu * x
                net[v] -= cv * x
        return False

    try:
        found = rec(0)
    except _OutOfBudget:
        return SearchResult(Outcome.INDETERMINATE, nodes=nodes)
    if not found:
        return SearchResult(Outcome.NO, nodes=nodes)
    flow = _to_flow(ref, vals, k, mode)
    check = verify_flow(g, flow)
    if not check:
        raise InvariantError(f"search produced an invalid flow: {check.violations[0]}")
    return SearchResult(Outcome.YES, flow, nodes)


def _to_flow(ref, vals, k: int, mode: Mode) -> Flow:
    orient = []
    values = []
    for (du, dv), x in zip(ref, vals):
        if mode is Mode.INTEGER and x < 0:
            orient.append((du.flipped(), dv.flipped()))
            values.append(-x)
        else:
            orient.append((du, dv))
            values.append(x)
    return Flow(tuple(orient), tuple(values), k, mode)


def exists_k_flow(g: SignedGraph, k: int, prescriptions: Mapping[int, object] | None = None,
                  budget: SearchBudget | None = None) -> SearchResult:
    """Decide whether ``g`` has a nowhere-zero integer ``k``-flow (all values positive on YES)."""
    return _search(g, k, Mode.INTEGER, _normalize(prescriptions, g.m), budget)


def exists_zk_flow(g: SignedGraph, k: int, prescriptions: Mapping[int, object] | None = None,
                   budget: SearchBudget | None = None, seed: int | None = None) -> SearchResult:
    """Decide whether ``g`` has a nowhere-zero ``Z_k``-flow (residues ``1..k-1``).

    ``seed`` shuffles the value order, which changes the witness but not the answer.
    """
    return _search(g, k, Mode.MOD_K, _normalize(prescriptions, g.m), budget, seed)


def flow_number(g: SignedGraph, budget: SearchBudget | None = None) -> int | Outcome:
    """Least ``k`` with a nowhere-zero ``k``-flow, or ``Outcome.INDETERMINATE``."""
    if not is_flow_admissible(g):
        raise PreconditionError("graph is not flow-admissible")
    budget = budget or SearchBudget()
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    for k in range(2, budget.max_k + 1):
        left = None if deadline is None else max(0.0, deadline - time.monotonic())
        step = SearchBudget(budget.max_k, budget.node_limit, left)
        result = exists_k_flow(g, k, budget=step)
        if result.outcome is Outcome.YES:
            return k
        if result.outcome is Outcome.INDETERMINATE:
            return Outcome.INDETERMINATE
    return Outcome.INDETERMINATE


# -- naive reference enumerator ---------------------------------------------------

def naive_exists_flow(g: SignedGraph, k: int, mode: Mode = Mode.INTEGER,
                      prescriptions: Mapping[int, object] | None = None,
                      chunk: int = 1 << 16) -> bool:
    """Enumerate every (orientation, value) choice per edge without pruning.

    Each edge contributes one of its sign-consistent half-edge direction
    pairs times a value in ``1..k-1``; the whole product space is scanned
    in vectorized chunks.
    """
    if k < 2:
        raise PreconditionError("k must be at least 2")
    pres = _normalize(prescriptions, g.m)
    options: list[np.ndarray] = []
    for e, (u, v, s) in enumerate(g.edges):
        pairs = [(Dir.OUT, Dir.IN), (Dir.IN, Dir.OUT)] if s == 1 else [(Dir.OUT, Dir.OUT), (Dir.IN, Dir.IN)]
        rows = []
        for pair in pairs:
            for x in range(1, k):
                p = pres.get(e)
                if p is not None and not _naive_accepts(p, pair, x, k, mode):
                    continue
                contribution = np.zeros(g.n, dtype=np.int64)
                contribution[u] += pair[0].inflow * x
                contribution[v] += pair[1].inflow * x
                rows.append(contribution)
        if not rows:
            return False
        options.append(np.array(rows))
    if not options:
        return True
    sizes = [len(o) for o in options]
    total = int(np.prod(sizes, dtype=object))
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        nets = np.zeros((len(idx), g.n), dtype=np.int64)
        for opt, size in zip(options, sizes):
            nets += opt[idx % size]
            idx //= size
        if mode is Mode.MOD_K:
            nets %= k
        if np.any(~nets.any(axis=1)):
            return True
    return False


def _naive_accepts(p: Prescription, pair: HalfPair, x: int, k: int, mode: Mode) -> bool:
    if p.orientation is None:
        if mode is Mode.INTEGER:
            return x == abs(p.value)
        return x % k in (p.value % k, -p.value % k)
    if tuple(p.orientation) == pair:
        if mode is Mode.MOD_K:
            return p.value is None or (x - p.value) % k == 0
        return p.value is None or p.value == x
    flipped = (p.orientation[0].flipped(), p.orientation[1].flipped())
    if flipped == pair:
        # the same flow described in the prescribed orientation has value -x
        if mode is Mode.MOD_K:
            return p.value is None or (x + p.value) % k == 0
        return p.value is not None and p.value == -x
    return False


# -- corpora -----------------------------------------------------------------------

class Policy(enum.Enum):
    ALL = "all"
    CANONICAL = "canonical"
    ADMISSIBLE = "admissible"


@dataclass(frozen=True)
class SignedInstance:
    name: str
    graph: SignedGraph
    negatives: tuple[int, int]


def signatures(g: SignedGraph, policy: Policy) -> Iterator[tuple[int, int]]:
    """Pairs of edges to make negative on underlying graph ``g``.

    ``CANONICAL`` keeps the lexicographically least pair of each switching
    class (two pairs are equivalent iff their symmetric difference is an
    edge cut); ``ADMISSIBLE`` further drops pairs that admit no flow.
    """
    base = g.underlying()
    pairs = list(itertools.combinations(range(g.m), 2))
    kept: list[tuple[int, int]] = []
    for pair in pairs:
        if policy is not Policy.ALL:
            if any(is_edge_cut(base, set(pair) ^ set(other)) for other in kept):
                continue
            kept.append(pair)
            if policy is Policy.ADMISSIBLE and not is_flow_admissible(base.with_negatives(pair)):
                continue
        yield pair


def corpus(entries: Iterable[CatalogEntry], n_max: int, policy: Policy) -> Iterator[SignedInstance]:
    for entry in entries:
        if entry.graph.n > n_max:
            continue
        for pair in signatures(entry.graph, policy):
            name = f"{entry.name}:{pair[0]},{pair[1]}"
            yield SignedInstance(name, entry.graph.underlying().with_negatives(pair), pair)
