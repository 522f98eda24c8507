"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 capacity guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from itertools import islice

from twinmis.duality import conjugate
from twinmis.embedding import embed_full, embed_minimal
from twinmis.generators import KINDS, generate
from twinmis.graph import GraphError
from twinmis.io import GraphDocument, emit_dot, emit_graph, parse_graph
from twinmis.normalization import normalize
from twinmis.orthogonality import OrthogonalPairing, find_pairing, orthogonal_pairs
from twinmis.solvers import CapacityError, enumerate_mis, solve_max, solve_min, solve_via_reduction
from twinmis.verify import THEOREMS, verify

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def _read(args) -> GraphDocument:
    if args.input in (None, "-"):
        return parse_graph(sys.stdin.read(), "<stdin>")
    with open(args.input) as fh:
        return parse_graph(fh.read(), args.input)


@contextmanager
def _output(args):
    if args.output in (None, "-"):
        yield sys.stdout
    else:
        with open(args.output, "w") as fh:
            yield fh


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _pairs_arg(values):
    if values is None:
        return None
    return [tuple(p) for p in values]


def _pairing(args, doc: GraphDocument) -> OrthogonalPairing:
    claimed = _pairs_arg(args.pair)
    if claimed is not None:
        return OrthogonalPairing.from_pairs(doc.graph.n, claimed)
    P = find_pairing(doc.graph)
    if P is None:
        raise GraphError("graph has no perfect orthogonal pairing (not twin-orthogonal)")
    return P


def cmd_normalize(args) -> int:
    nmap = normalize(_read(args).graph)
    with _output(args) as out:
        if args.format == "json":
            out.write(_json({
                "classes": [sorted(c) for c in nmap.partition.classes],
                "weights": list(nmap.quotient.weights),
                "edges": [list(e) for e in nmap.quotient.edges()],
            }))
        else:
            out.write(emit_graph(GraphDocument(nmap.quotient)))
    return EXIT_OK


def cmd_pairs(args) -> int:
    G = _read(args).graph
    pairs = orthogonal_pairs(G)
    P = find_pairing(G)
    with _output(args) as out:
        if args.format == "json":
            out.write(_json({
                "orthogonal": [list(p) for p in pairs],
                "pairing": [list(p) for p in P.pairs] if P else None,
            }))
        else:
            out.writelines(f"orthogonal {u} {v}\n" for u, v in pairs)
            if P is None:
                out.write("pairing none\n")
            else:
                out.writelines(f"pair {u} {v}\n" for u, v in P.pairs)
    return EXIT_OK


def cmd_embed(args) -> int:
    info = (embed_full if args.mode == "full" else embed_minimal)(_read(args).graph)
    with _output(args) as out:
        if args.format == "json":
            out.write(_json({
                "mode": args.mode,
                "n": info.embedded.n,
                "weights": list(info.embedded.weights),
                "edges": [list(e) for e in info.embedded.edges()],
                "added": sorted(info.added_vertices),
                "pairing": [list(p) for p in info.pairing.pairs],
            }))
        else:
            out.write(emit_graph(GraphDocument(info.embedded)))
    return EXIT_OK


def cmd_conjugate(args) -> int:
    doc = _read(args)
    result = conjugate(doc.graph, _pairing(args, doc))
    with _output(args) as out:
        if args.format == "json":
            out.write(_json({
                "n": result.conjugate.n,
                "weights": list(result.conjugate.weights),
                "edges": [list(e) for e in result.conjugate.edges()],
                "pairing": [list(p) for p in result.pairing.pairs],
            }))
        else:
            out.write(emit_graph(GraphDocument(result.conjugate, doc.labels)))
    return EXIT_OK


def cmd_solve(args) -> int:
    G = _read(args).graph
    if args.method == "reduce":
        if args.direction != "max":
            raise GraphError("the reduction pipeline solves the max direction only")
        result = solve_via_reduction(G, args.mode)
    else:
        solver = solve_max if args.direction == "max" else solve_min
        result = solver(G, args.method)
    with _output(args) as out:
        if args.format == "json":
            out.write(_json(result.to_dict(timing=args.timing)))
        else:
            out.write(f"weight {result.weight}\n")
            out.write("set" + "".join(f" {v}" for v in sorted(result.set)) + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    G = _read(args).graph
    sets = enumerate_mis(G, allow_large=args.allow_large)
    if args.limit is not None:
        sets = islice(sets, args.limit)
    with _output(args) as out:
        for U in sets:
            out.write(" ".join(str(v) for v in sorted(U)) + "\n")
            out.flush()
    return EXIT_OK


def cmd_gen(args) -> int:
    doc = generate(args.kind, args.n, args.seed, args.p, args.wmin, args.wmax)
    with _output(args) as out:
        out.write(emit_graph(doc))
    return EXIT_OK


def cmd_dot(args) -> int:
    doc = _read(args)
    highlight = args.mis or ()
    pairs = []
    if args.show_pairs:
        P = find_pairing(doc.graph)
        pairs = list(P.pairs) if P else orthogonal_pairs(doc.graph)
    with _output(args) as out:
        out.write(emit_dot(doc, highlight, pairs))
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = _read(args)
    theorems = "all" if args.theorems == "all" else args.theorems.split(",")
    report = verify(doc.graph, theorems, _pairs_arg(args.pair), doc.provenance or "graph")
    with _output(args) as out:
        out.write(_json(report.to_dict()) if args.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twinmis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help, io_input=True):
        p = sub.add_parser(name, help=help)
        if io_input:
            p.add_argument("-i", "--input", help="graph file (default stdin)")
        p.add_argument("-o", "--output", help="output file (default stdout)")
        p.set_defaults(func=func)
        return p

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    def pair_opt(p):
        p.add_argument("--pair", nargs=2, type=int, action="append", metavar=("U", "V"),
                       help="use this pair instead of searching for a pairing (repeatable)")

    fmt(command("normalize", cmd_normalize, "quotient by twin classes"))
    fmt(command("pairs", cmd_pairs, "orthogonal pairs and a perfect pairing"))
    p = command("embed", cmd_embed, "embed into a twin-orthogonal graph")
    p.add_argument("--mode", choices=("full", "minimal"), default="full")
    fmt(p)
    p = command("conjugate", cmd_conjugate, "conjugate graph of a twin-orthogonal graph")
    pair_opt(p)
    fmt(p)
    p = command("solve", cmd_solve, "maximum- or minimum-weight maximal independent set")
    p.add_argument("--direction", choices=("max", "min"), default="max")
    p.add_argument("--method", choices=("auto", "enumerate", "bnb", "reduce"), default="auto")
    p.add_argument("--mode", choices=("full", "minimal"), default="full",
                   help="embedding used by --method reduce")
    p.add_argument("--timing", action="store_true", help="include elapsed time in JSON stats")
    fmt(p)
    p = command("enumerate", cmd_enumerate, "stream every maximal independent set")
    p.add_argument("--limit", type=int)
    p.add_argument("--allow-large", action="store_true")
    p = command("gen", cmd_gen, "generate a seeded instance", io_input=False)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=10)
    p = command("dot", cmd_dot, "Graphviz DOT export")
    p.add_argument("--mis", nargs="*", type=int, help="vertices to highlight")
    p.add_argument("--show-pairs", action="store_true")
    p = command("verify", cmd_verify, "check the structural theorems on an instance")
    p.add_argument("--theorems", default="all", help=f"'all' or comma list of {','.join(THEOREMS)}")
    pair_opt(p)
    fmt(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
