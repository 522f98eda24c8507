"""Canonical text format and DOT export.

Text format, one record per line, ``#`` starts a comment::

    graph <n>
    v <id> <weight> [<label>]
    e <u> <v>

Emission is canonical: vertices in index order, edges ``u < v`` sorted,
single spaces, newline-terminated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from twinmis.graph import GraphError, WeightedGraph, build_graph


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class GraphDocument:
    graph: WeightedGraph
    labels: Mapping[int, str] | None = None
    provenance: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.labels is not None:
            names = list(self.labels.values())
            if len(set(names)) != len(names):
                raise GraphError("vertex labels must be unique")
            for v, name in self.labels.items():
                if not 0 <= v < self.graph.n:
                    raise GraphError(f"label for unknown vertex {v}")
                if not name or any(c.isspace() for c in name) or name.startswith("#"):
                    raise GraphError(f"label {name!r} must be a single token")


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"{what} {token!r} is not an integer") from None


def parse_graph(text: str, provenance: str | None = None) -> GraphDocument:
    n = None
    weights: dict[int, int] = {}
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        kind = tokens[0]
        if n is None:
            if kind != "graph" or len(tokens) != 2:
                raise ParseError(lineno, "expected header 'graph <n>'")
            n = _int(tokens[1], lineno, "vertex count")
            if n < 0:
                raise ParseError(lineno, "vertex count must be non-negative")
        elif kind == "v":
            if len(tokens) not in (3, 4):
                raise ParseError(lineno, "expected 'v <id> <weight> [<label>]'")
            v = _int(tokens[1], lineno, "vertex id")
            w = _int(tokens[2], lineno, "weight")
            if not 0 <= v < n:
                raise ParseError(lineno, f"unknown vertex id {v}")
            if v in weights:
                raise ParseError(lineno, f"vertex {v} declared twice")
            if w < 0:
                raise ParseError(lineno, f"negative weight {w}")
            weights[v] = w
            if len(tokens) == 4:
                if tokens[3] in labels.values():
                    raise ParseError(lineno, f"duplicate label {tokens[3]!r}")
                labels[v] = tokens[3]
        elif kind == "e":
            if len(tokens) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u = _int(tokens[1], lineno, "vertex id")
            v = _int(tokens[2], lineno, "vertex id")
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(lineno, f"unknown vertex id {x}")
            if u == v:
                raise ParseError(lineno, f"loop on vertex {u}")
            edges.append((u, v))
        else:
            raise ParseError(lineno, f"unknown record {kind!r}")
    if n is None:
        raise ParseError(0, "missing 'graph <n>' header")
    missing = [v for v in range(n) if v not in weights]
    if missing:
        raise ParseError(0, f"vertex {missing[0]} has no 'v' line")
    graph = build_graph(n, [weights[v] for v in range(n)], edges)
    return GraphDocument(graph, labels or None, provenance)


def emit_graph(doc: GraphDocument) -> str:
    G = doc.graph
    labels = doc.labels or {}
    lines = [f"graph {G.n}"]
    for v in range(G.n):
        label = f" {labels[v]}" if v in labels else ""
        lines.append(f"v {v} {G.weights[v]}{label}")
    lines.extend(f"e {u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def emit_dot(
    doc: GraphDocument,
    highlight: Iterable[int] = (),
    pairs: Iterable[tuple[int, int]] = (),
) -> str:
    """Undirected DOT text; ``highlight`` nodes are filled, ``pairs`` edges bold red."""
    G = doc.graph
    labels = doc.labels or {}
    highlight = set(highlight)
    paired = {(min(a, b), max(a, b)) for a, b in pairs}
    out = ["graph G {"]
    for v in range(G.n):
        attrs = f'label="{labels.get(v, v)} ({G.weights[v]})"'
        if v in highlight:
            attrs += ", style=filled, fillcolor=lightblue"
        out.append(f"  {v} [{attrs}];")
    for u, v in G.edges():
        style = " [style=bold, color=red]" if (u, v) in paired else ""
        out.append(f"  {u} -- {v}{style};")
    out.append("}")
    return "\n".join(out) + "\n"
