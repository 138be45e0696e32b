"""Command-line interface: enumerate, verify, certify, stats, convert.

Results go to stdout (or the output file); diagnostics and progress go to
stderr.  Exit codes: ``enumerate`` returns 0 when the search closed below
the order cap and 2 when branches were truncated; ``certify`` returns 0
for a coloring, 1 for a witness, 3 for a precondition violation and 4 for
other errors; the remaining commands return 0 on success and 1 on any
failure or error.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter

from .canon import are_isomorphic, canonical_form
from .certify import IncompleteListError, NotInClassError, certify_4_colorability
from .coloring import chromatic_number
from .critical import is_k_critical_in_class, is_k_vertex_critical
from .enumeration import (
    NO_PRUNING,
    EnumerationResult,
    PruningFlags,
    SearchConfig,
    default_max_order_for,
    enumerate_5vc,
    recursively_enumerate,
    sort_graphs,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6, read_graph6_file, write_graph6_file
from .graphs import Graph, bits, induced_subgraph
from .patterns import Pattern, is_family_free, parse_pattern


def _p(msg: str) -> None:
    print(msg, file=sys.stderr)


def _parse_family(texts: list[str]) -> tuple[Pattern, ...]:
    if not texts:
        raise ValueError("at least one --forbid pattern is required")
    return tuple(parse_pattern(t) for t in texts)


def _named_h(family: tuple[Pattern, ...]) -> Pattern:
    """The named companion H when the family is exactly {P5, H}, else error."""
    if len(family) != 2:
        raise ValueError("--seed auto needs exactly two --forbid patterns: p5 and a named H")
    p5 = parse_pattern("p5").graph
    p5_members = [p for p in family if are_isomorphic(p.graph, p5)]
    others = [p for p in family if not are_isomorphic(p.graph, p5)]
    if len(p5_members) != 1 or len(others) != 1:
        raise ValueError("--seed auto needs the family {p5, H}")
    h = others[0]
    if default_max_order_for(h) is None:
        raise ValueError(
            f"--seed auto only covers H in {{k1,3+p1, k1,4+p1, co(k3+2p1)}}; got {h.name!r}"
        )
    return h


def _seed_graphs(source: str) -> list[Graph]:
    if os.path.exists(source):
        return read_graph6_file(source)
    return [parse_pattern(source).graph]


def cmd_enumerate(args) -> int:
    family = _parse_family(args.forbid)
    pruning = NO_PRUNING if args.no_prune else PruningFlags()
    jobs = max(1, args.jobs)

    def progress(order, count):
        _p(f"  expanding {count} graphs of order {order}")

    if args.seed == "auto":
        if args.k != 5:
            raise ValueError("--seed auto applies to --k 5 only")
        h = _named_h(family)
        result = enumerate_5vc(h, args.max_order, pruning=pruning, jobs=jobs,
                               progress=progress)
    else:
        if args.max_order is None:
            raise ValueError("--max-order is required unless --seed auto names a known H")
        seeds = _seed_graphs(args.seed)
        cfg = SearchConfig(k=args.k, family=family, max_order=args.max_order,
                           seeds=tuple(seeds), pruning=pruning)
        seen: set[bytes] = set()
        out: list[Graph] = []
        visited = 0
        complete = True
        for seed in seeds:
            res = recursively_enumerate(cfg, seed, seen, out, jobs=jobs, progress=progress)
            visited += res.nodes_visited
            complete = complete and res.complete
        ordered = sort_graphs(out)
        result = EnumerationResult(
            graphs=ordered,
            per_order_counts=dict(sorted(Counter(g.n for g in ordered).items())),
            nodes_visited=visited,
            complete=complete,
        )

    write_graph6_file(args.out, result.graphs)
    _p(f"wrote {len(result.graphs)} graphs to {args.out}")
    for n, c in result.per_order_counts.items():
        _p(f"  n={n}: {c}")
    _p(f"nodes visited: {result.nodes_visited}")
    _p("search complete" if result.complete else
       "search TRUNCATED at the order cap: completeness not established")
    return 0 if result.complete else 2


def cmd_verify(args) -> int:
    family = _parse_family(args.forbid)
    graphs = read_graph6_file(args.file)
    failures = 0
    histogram: Counter[int] = Counter()
    for lineno, g in enumerate(graphs, 1):
        if not is_family_free(g, family):
            _p(f"line {lineno}: graph is not family-free")
            failures += 1
            continue
        report = is_k_vertex_critical(g, args.k)
        if not report.is_vertex_critical:
            detail = (f"chi={report.chi}" if report.chi != args.k
                      else f"deleting vertex {report.failing_vertex} keeps chi >= {args.k}")
            _p(f"line {lineno}: not {args.k}-vertex-critical ({detail})")
            failures += 1
            continue
        if args.edge_critical and not is_k_critical_in_class(g, args.k, family):
            _p(f"line {lineno}: not {args.k}-critical within the class")
            failures += 1
            continue
        histogram[g.n] += 1
    for n in sorted(histogram):
        print(f"n={n}: {histogram[n]}")
    print(f"total: {sum(histogram.values())} ok, {failures} failed")
    return 1 if failures else 0


def cmd_certify(args) -> int:
    family = _parse_family(args.forbid)
    critical_list = read_graph6_file(args.list)
    inputs = read_graph6_file(args.input)
    if not inputs:
        raise ValueError(f"no graphs in {args.input}")
    g = inputs[0]
    cert = certify_4_colorability(g, critical_list, family)
    if cert.coloring is not None:
        parts = " ".join(f"v{i}={c}" for i, c in enumerate(cert.coloring.assignment))
        print(f"COLORING {parts}".rstrip())
        return 0
    witness = cert.witness
    verts = sorted(bits(witness.vertices))
    sub = induced_subgraph(g, witness.vertices)
    print(f"WITNESS {' '.join(map(str, verts))} {encode_graph6(sub)}")
    return 1


def cmd_stats(args) -> int:
    graphs = read_graph6_file(args.file)
    orders = Counter(g.n for g in graphs)
    edges = Counter(g.edge_count() for g in graphs)
    chis = Counter(chromatic_number(g) for g in graphs)
    print(f"graphs: {len(graphs)}")
    print("order histogram:")
    for n in sorted(orders):
        print(f"  {n}: {orders[n]}")
    print("edge-count histogram:")
    for m in sorted(edges):
        print(f"  {m}: {edges[m]}")
    print("chi histogram:")
    for c in sorted(chis):
        print(f"  {c}: {chis[c]}")
    return 0


def _read_edge_blocks(path: str) -> list[Graph]:
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        block: list[str] = []
        for raw in list(fh) + [""]:
            line = raw.strip()
            if line:
                block.append(line)
                continue
            if not block:
                continue
            head = block[0].split()
            if len(head) != 2 or head[0] != "n":
                raise ValueError(f"{path}: block must start with 'n <order>'")
            n = int(head[1])
            edges = []
            for entry in block[1:]:
                u, v = entry.split()
                edges.append((int(u), int(v)))
            graphs.append(Graph.from_edges(n, edges))
            block = []
    return graphs


def _write_edge_blocks(path: str, graphs: list[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for i, g in enumerate(graphs):
            if i:
                fh.write("\n")
            fh.write(f"n {g.n}\n")
            for u, v in g.edges():
                fh.write(f"{u} {v}\n")


def cmd_convert(args) -> int:
    if args.to == "edges":
        graphs = read_graph6_file(args.input)
        _write_edge_blocks(args.output, graphs)
    else:
        graphs = _read_edge_blocks(args.input)
        write_graph6_file(args.output, graphs)
    _p(f"converted {len(graphs)} graphs")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critenum",
        description="Enumerate, verify and certify k-vertex-critical family-free graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="exhaustively generate k-vertex-critical graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--forbid", action="append", default=[], metavar="DSL",
                   help="forbidden induced pattern (repeatable)")
    p.add_argument("--seed", required=True,
                   help="'auto' (built-in exhaustive seed set for {p5,H}), a graph6 file, "
                        "or a DSL string")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="re-check criticality of every graph in a list")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--forbid", action="append", default=[], metavar="DSL")
    p.add_argument("--edge-critical", action="store_true",
                   help="additionally require in-class k-criticality")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="4-coloring or 5-vertex-critical witness")
    p.add_argument("--forbid", action="append", default=[], metavar="DSL")
    p.add_argument("--list", required=True, help="graph6 file with the critical list")
    p.add_argument("--input", required=True, help="graph6 file; first graph is certified")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("stats", help="order/edge/chi histograms of a graph6 file")
    p.add_argument("file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("convert", help="convert between graph6 and edge-list text")
    p.add_argument("--to", choices=["graph6", "edges"], required=True)
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotInClassError as exc:
        _p(f"error: {exc}")
        return 3
    except IncompleteListError as exc:
        _p(f"error: {exc}")
        return 4
    except (ValueError, Graph6Error, OSError) as exc:
        _p(f"error: {exc}")
        return 4 if args.command == "certify" else 1


if __name__ == "__main__":
    sys.exit(main())
