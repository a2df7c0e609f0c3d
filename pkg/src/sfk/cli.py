"""``sfk`` command line: inspect signed graphs, build and check flow certificates.

Exit codes are the machine interface:

====  ==========================================
0     success
2     usage or parse error
10    graph is not flow-admissible
11    flow number undetermined within the budget
12    construction preconditions not met
13    construction broke an internal invariant
14    certificate does not verify
====  ==========================================
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from sfk.builders import METHODS, construct
from sfk.core import SignedGraph, is_balanced, verify_flow
from sfk.errors import FormatError, InvariantError, PreconditionError, SignedFlowError
from sfk.formats import (CatalogEntry, bundled_catalog, parse_certificate, read_catalog, read_signed_graph,
                         serialize_certificate, serialize_signed_graph)
from sfk.matching import bipartition, is_critical_snark, three_edge_coloring
from sfk.oracle import Outcome, Policy, SearchBudget, corpus, flow_number
from sfk.structure import bridges, cyclic_edge_connectivity, is_flow_admissible, oddness, reduce_2cut

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INADMISSIBLE = 10
EXIT_INDETERMINATE = 11
EXIT_PRECONDITION = 12
EXIT_INVARIANT = 13
EXIT_INVALID = 14


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str) -> SignedGraph:
    try:
        return read_signed_graph(path)
    except FormatError as exc:
        raise _Fail(EXIT_USAGE, f"{path}: {exc}") from exc
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"{path}: {exc.strerror or exc}") from exc


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _guarded(fn, *args) -> str:
    try:
        value = fn(*args)
    except PreconditionError:
        return "n/a"
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return str(value)


def cmd_info(args: argparse.Namespace) -> int:
    g = _load(args.file)
    verdict = is_flow_admissible(g)
    pos = g.underlying()
    plain = g.is_cubic() and not g.has_loops()
    colorable = three_edge_coloring(pos) is not None if plain else False
    rows = [
        ("n", g.n),
        ("m", g.m),
        ("negative_edges", len(g.negative_edges)),
        ("bridges", ",".join(map(str, bridges(g))) or "-"),
        ("balanced", _yes(bool(is_balanced(g)))),
        ("admissible", _yes(bool(verdict))),
        ("admissibility_reason", verdict.reason),
        ("bipartite", _yes(bipartition(g) is not None)),
        ("cubic", _yes(g.is_cubic())),
        ("three_edge_colorable", _yes(colorable) if plain else "n/a"),
        ("critical_snark", _guarded(lambda: _yes(is_critical_snark(pos))) if plain and not colorable else "n/a"),
        ("oddness", _guarded(oddness, g) if plain else "n/a"),
        ("cyclic_edge_connectivity", _guarded(cyclic_edge_connectivity, g)),
    ]
    for key, value in rows:
        print(f"{key}\t{value}")
    return EXIT_OK


def cmd_admissible(args: argparse.Namespace) -> int:
    verdict = is_flow_admissible(_load(args.file))
    print(f"{'admissible' if verdict else 'not admissible'}: {verdict.reason}")
    return EXIT_OK if verdict else EXIT_INADMISSIBLE


def cmd_flow_number(args: argparse.Namespace) -> int:
    g = _load(args.file)
    if not is_flow_admissible(g):
        print("inadmissible")
        return EXIT_INADMISSIBLE
    result = flow_number(g, SearchBudget(max_k=args.max_k, time_limit=args.timeout))
    if result is Outcome.INDETERMINATE:
        print("INDETERMINATE")
        return EXIT_INDETERMINATE
    print(result)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    g = _load(args.file)
    try:
        result = construct(g, args.method)
    except PreconditionError as exc:
        raise _Fail(EXIT_PRECONDITION, f"preconditions not met: {exc}") from exc
    except InvariantError as exc:
        raise _Fail(EXIT_INVARIANT, f"internal invariant violated: {exc}") from exc
    text = serialize_certificate(result.flow, result.method)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        negatives = ",".join(str(result.flow.values[e]) for e in g.negative_edges) or "-"
        print(f"method {result.method}\tk {result.flow.k}\tnegative values {negatives}\t-> {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load(args.file)
    try:
        cert = parse_certificate(Path(args.cert).read_text(encoding="utf-8"))
    except FormatError as exc:
        raise _Fail(EXIT_USAGE, f"{args.cert}: {exc}") from exc
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"{args.cert}: {exc.strerror or exc}") from exc
    if cert.flow.m != g.m:
        print(f"invalid: certificate has {cert.flow.m} edges, graph has {g.m}")
        return EXIT_INVALID
    check = verify_flow(g, cert.flow)
    if not check:
        print(f"invalid: {check.violations[0]}")
        return EXIT_INVALID
    print(f"valid {cert.flow.mode.value} {cert.flow.k}-flow ({cert.method})")
    return EXIT_OK


def _parse_cut(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("cut must be two edge ids like 3,7") from None
    return a, b


def cmd_reduce(args: argparse.Namespace) -> int:
    g = _load(args.file)
    try:
        r = reduce_2cut(g, args.cut)
    except PreconditionError as exc:
        raise _Fail(EXIT_PRECONDITION, f"cannot reduce: {exc}") from exc
    prefix = args.output or str(Path(args.file).with_suffix(""))
    Path(f"{prefix}.g1.sg").write_text(serialize_signed_graph(r.g1, f"g1 of {args.file}, cut {args.cut[0]},{args.cut[1]}"), encoding="utf-8")
    Path(f"{prefix}.g2.sg").write_text(serialize_signed_graph(r.g2, f"g2 of {args.file}, cut {args.cut[0]},{args.cut[1]}"), encoding="utf-8")
    lines = ["piece\tkind\tnew_id\toriginal_id"]
    for piece, vmap, emap, new in (("g1", r.g1_vertices, r.g1_edges, "ux"), ("g2", r.g2_vertices, r.g2_edges, "vy")):
        lines += [f"{piece}\tvertex\t{i}\t{w}" for i, w in enumerate(vmap)]
        lines += [f"{piece}\tedge\t{i}\t{e}" for i, e in enumerate(emap)]
        lines.append(f"{piece}\tedge\t{len(emap)}\t{new}")
    Path(f"{prefix}.map.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"u={r.u} v={r.v} x={r.x} y={r.y}\t-> {prefix}.g1.sg {prefix}.g2.sg {prefix}.map.tsv")
    return EXIT_OK


def _catalog(source: str) -> list[CatalogEntry]:
    try:
        if source.startswith("bundled:"):
            return bundled_catalog(source.split(":", 1)[1])
        return read_catalog(source)
    except FormatError as exc:
        raise _Fail(EXIT_USAGE, f"{source}: {exc}") from exc
    except (OSError, FileNotFoundError) as exc:
        raise _Fail(EXIT_USAGE, f"{source}: {exc}") from exc


def _batch_row(job: tuple[str, SignedGraph, float | None, int]) -> str:
    name, g, timeout, max_k = job
    admissible = bool(is_flow_admissible(g))
    bound = exact = agree = "-"
    if admissible:
        try:
            bound = str(construct(g, "auto").flow.k)
        except SignedFlowError as exc:
            bound = f"error:{type(exc).__name__}"
        f = flow_number(g, SearchBudget(max_k=max_k, time_limit=timeout))
        exact = "INDETERMINATE" if f is Outcome.INDETERMINATE else str(f)
        if bound.isdigit() and exact.isdigit():
            agree = _yes(int(exact) <= int(bound))
    return f"{name}\t{g.n}\t{g.m}\t{_yes(admissible)}\t{bound}\t{exact}\t{agree}"


def worker_count() -> int:
    """Workers for ``batch``: ``SFK_THREADS`` if set, else the CPU count."""
    raw = os.environ.get("SFK_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise _Fail(EXIT_USAGE, f"SFK_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def cmd_batch(args: argparse.Namespace) -> int:
    entries = _catalog(args.catalog)
    jobs = [(inst.name, inst.graph, args.timeout, args.max_k)
            for inst in corpus(entries, args.n_max, Policy(args.policy))]
    workers = worker_count()
    if workers == 1:
        rows = [_batch_row(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_batch_row, jobs, chunksize=8))
    header = "id\tn\tm\tadmissible\tbound\texact_f\tagree"
    Path(args.report).write_text("\n".join([header] + rows) + "\n", encoding="utf-8")
    disagree = sum(1 for r in rows if r.endswith("\tno"))
    print(f"{len(rows)} instances, {disagree} disagreements -> {args.report}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sfk", description="Nowhere-zero flows on signed graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="structural summary as TSV")
    p.add_argument("file")
    p.set_defaults(run=cmd_info)

    p = sub.add_parser("admissible", help="exit 0 if the graph admits a nowhere-zero flow, 10 if not")
    p.add_argument("file")
    p.set_defaults(run=cmd_admissible)

    p = sub.add_parser("flow-number", help="exact flow number by exhaustive search")
    p.add_argument("file")
    p.add_argument("--max-k", type=int, default=12)
    p.add_argument("--timeout", type=float, default=None, help="seconds")
    p.set_defaults(run=cmd_flow_number)

    p = sub.add_parser("construct", help="build a flow and write a certificate")
    p.add_argument("file")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("-o", "--output", help="certificate path (default: stdout)")
    p.set_defaults(run=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("file")
    p.add_argument("cert")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("reduce", help="2-edge-cut reduction")
    p.add_argument("file")
    p.add_argument("--cut", type=_parse_cut, required=True, metavar="E1,E2")
    p.add_argument("-o", "--output", metavar="PREFIX")
    p.set_defaults(run=cmd_reduce)

    p = sub.add_parser("batch", help="construct and cross-check every signed instance of a catalog")
    p.add_argument("catalog", help="catalog file, or bundled:cubic / bundled:bipartite")
    p.add_argument("--policy", choices=[x.value for x in Policy], default="canonical")
    p.add_argument("--report", required=True, metavar="OUT.tsv")
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--max-k", type=int, default=8)
    p.add_argument("--timeout", type=float, default=20.0, help="seconds per exact flow number")
    p.set_defaults(run=cmd_batch)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except _Fail as exc:
        print(f"sfk: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
