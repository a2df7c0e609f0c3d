"""Text formats: signed graphs (``.sg``), graph catalogs and flow certificates.

``.sg``::

    # comment
    n m
    u v s        (m lines, s is + or -)

A catalog is a sequence of ``.sg`` blocks separated by lines ``---``.  The
first comment of a block, if any, names the block.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterator

from sfk.core import Dir, Edge, Flow, Mode, SignedGraph
from sfk.errors import FormatError

CERT_MAGIC = "FLOWCERT"
CERT_VERSION = 1


def _data_lines(lines: list[tuple[int, str]]) -> Iterator[tuple[int, list[str]]]:
    for number, raw in lines:
        text = raw.strip()
        if text and not text.startswith("#"):
            yield number, text.split()


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {token!r}", line) from None


def _parse_block(lines: list[tuple[int, str]]) -> SignedGraph:
    rows = list(_data_lines(lines))
    if not rows:
        raise FormatError("missing header line 'n m'", lines[-1][0] if lines else 1)
    line, header = rows[0]
    if len(header) != 2:
        raise FormatError("header must be 'n m'", line)
    n = _parse_int(header[0], line, "vertex count")
    m = _parse_int(header[1], line, "edge count")
    if n < 0 or m < 0:
        raise FormatError("counts must be nonnegative", line)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else line)
        raise FormatError(f"header declares {m} edges, found {len(body)}", where)
    edges = []
    for line, tokens in body:
        if len(tokens) != 3:
            raise FormatError("edge line must be 'u v s'", line)
        u = _parse_int(tokens[0], line, "endpoint")
        v = _parse_int(tokens[1], line, "endpoint")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range 0..{n - 1}", line)
        if tokens[2] not in ("+", "-"):
            raise FormatError(f"sign must be + or -, got {tokens[2]!r}", line)
        edges.append(Edge(u, v, 1 if tokens[2] == "+" else -1))
    return SignedGraph(n, tuple(edges))


def parse_signed_graph(text: str) -> SignedGraph:
    return _parse_block(list(enumerate(text.splitlines(), start=1)))


def serialize_signed_graph(g: SignedGraph, comment: str | None = None) -> str:
    out = [f"# {line}" for line in comment.splitlines()] if comment else []
    out.append(f"{g.n} {g.m}")
    out += [f"{u} {v} {'+' if s == 1 else '-'}" for u, v, s in g.edges]
    return "\n".join(out) + "\n"


def read_signed_graph(path: str | Path) -> SignedGraph:
    return parse_signed_graph(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: SignedGraph


def parse_catalog(text: str) -> list[CatalogEntry]:
    blocks: list[list[tuple[int, str]]] = [[]]
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.strip() == "---":
            blocks.append([])
        else:
            blocks[-1].append((number, raw))
    entries = []
    for block in blocks:
        if not any(t.strip() and not t.strip().startswith("#") for _, t in block):
            continue
        names = [t.strip()[1:].strip() for _, t in block if t.strip().startswith("#")]
        name = names[0] if names and names[0] else f"g{len(entries)}"
        entries.append(CatalogEntry(name, _parse_block(block)))
    return entries


def serialize_catalog(entries: list[CatalogEntry]) -> str:
    return "---\n".join(serialize_signed_graph(e.graph, e.name) for e in entries)


def read_catalog(path: str | Path) -> list[CatalogEntry]:
    return parse_catalog(Path(path).read_text(encoding="utf-8"))


def bundled_catalog(name: str) -> list[CatalogEntry]:
    """Catalog shipped with the package: ``"cubic"`` or ``"bipartite"``."""
    text = resources.files("sfk").joinpath("data", f"{name}.sg").read_text(encoding="utf-8")
    return parse_catalog(text)


# -- certificates ----------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    flow: Flow
    method: str


def serialize_certificate(flow: Flow, method: str) -> str:
    lines = [
        f"{CERT_MAGIC} {CERT_VERSION}",
        f"k {flow.k}",
        f"mode {flow.mode.value}",
        f"method {method}",
        f"m {flow.m}",
    ]
    for e, ((du, dv), x) in enumerate(zip(flow.orientation, flow.values)):
        lines.append(f"{e} {du.value} {dv.value} {x}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    rows = list(_data_lines(list(enumerate(text.splitlines(), start=1))))
    header: dict[str, tuple[int, str]] = {}
    if not rows or rows[0][1][0] != CERT_MAGIC:
        raise FormatError(f"certificate must start with '{CERT_MAGIC} <version>'", rows[0][0] if rows else 1)
    line, tokens = rows[0]
    if len(tokens) != 2 or _parse_int(tokens[1], line, "version") != CERT_VERSION:
        raise FormatError(f"unsupported certificate version line {' '.join(tokens)!r}", line)
    i = 1
    while i < len(rows) and rows[i][1][0] in ("k", "mode", "method", "m"):
        line, tokens = rows[i]
        if len(tokens) != 2:
            raise FormatError(f"header line '{tokens[0]}' needs one value", line)
        header[tokens[0]] = (line, tokens[1])
        i += 1
    for key in ("k", "mode", "method", "m"):
        if key not in header:
            raise FormatError(f"certificate header lacks '{key}'", rows[min(i, len(rows) - 1)][0])
    k = _parse_int(header["k"][1], header["k"][0], "k")
    m = _parse_int(header["m"][1], header["m"][0], "m")
    try:
        mode = Mode(header["mode"][1])
    except ValueError:
        raise FormatError(f"unknown mode {header['mode'][1]!r}", header["mode"][0]) from None
    body = rows[i:]
    if len(body) != m:
        raise FormatError(f"certificate declares {m} edges, found {len(body)}",
                          body[-1][0] if body else header["m"][0])
    orientation = []
    values = []
    for expected, (line, tokens) in enumerate(body):
        if len(tokens) != 4:
            raise FormatError("edge record must be 'edge_id dir_u dir_v value'", line)
        if _parse_int(tokens[0], line, "edge id") != expected:
            raise FormatError(f"expected edge id {expected}", line)
        try:
            pair = (Dir(tokens[1]), Dir(tokens[2]))
        except ValueError:
            raise FormatError("half-edge directions must be 'i' or 'o'", line) from None
        orientation.append(pair)
        values.append(_parse_int(tokens[3], line, "value"))
    if k < 1:
        raise FormatError("k must be positive", header["k"][0])
    return Certificate(Flow(tuple(orientation), tuple(values), k, mode), header["method"][1])
