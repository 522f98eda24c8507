"""Seeded instance generators and named fixtures."""

from __future__ import annotations

import random

from twinmis.embedding import embed_full
from twinmis.graph import GraphError, WeightedGraph, build_graph
from twinmis.io import GraphDocument
from twinmis.normalization import expand_normal, normalize

KINDS = ("random", "moon-moser", "twin-ortho", "trivial-twin-ortho")


def _weights(rng: random.Random, count: int, wmin: int, wmax: int) -> list[int]:
    return [rng.randint(wmin, wmax) for _ in range(count)]


def random_graph(n: int, p: float, rng: random.Random, wmin: int = 1, wmax: int = 10) -> WeightedGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, _weights(rng, n, wmin, wmax), edges)


def generate(
    kind: str,
    n: int,
    seed: int = 0,
    p: float = 0.5,
    wmin: int = 1,
    wmax: int = 10,
) -> GraphDocument:
    """Build a reproducible instance.

    ``random`` is G(n, p); ``moon-moser`` is ``n / 3`` disjoint triangles.
    The twin-orthogonal kinds draw a G(n, p) base graph, normalize it and
    hang a pendant on every quotient vertex, so they have ``2 * s`` vertices
    where ``s`` is the number of twin classes of the base. ``twin-ortho``
    weights the base vertices and leaves pendants at zero;
    ``trivial-twin-ortho`` copies each base weight onto its pendant.
    """
    if kind not in KINDS:
        raise GraphError(f"unknown generator kind {kind!r}; expected one of {', '.join(KINDS)}")
    if n < 0:
        raise GraphError(f"n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} is outside [0, 1]")
    if wmin < 0 or wmax < wmin:
        raise GraphError(f"invalid weight range [{wmin}, {wmax}]")
    rng = random.Random(f"{kind}:{n}:{p}:{wmin}:{wmax}:{seed}")
    descriptor = f"gen kind={kind} n={n} p={p} w=[{wmin},{wmax}] seed={seed}"

    if kind == "random":
        return GraphDocument(random_graph(n, p, rng, wmin, wmax), provenance=descriptor)
    if kind == "moon-moser":
        if n % 3:
            raise GraphError(f"moon-moser needs n divisible by 3, got {n}")
        edges = [e for t in range(0, n, 3) for e in ((t, t + 1), (t, t + 2), (t + 1, t + 2))]
        return GraphDocument(build_graph(n, _weights(rng, n, wmin, wmax), edges), provenance=descriptor)

    base = normalize(random_graph(n, p, rng)).quotient
    embedded = embed_full(base).embedded
    s = base.n
    weights = _weights(rng, s, wmin, wmax)
    pendant = weights if kind == "trivial-twin-ortho" else [0] * s
    return GraphDocument(embedded.with_weights(weights + pendant), provenance=descriptor)


# The normal graph printed as the right half of the normalization figure:
# the path y4 - y3 - y2 - y1 - y5 with class weights 1, 2, 2, 3, 1.
FIG1_QUOTIENT_LABELS = ("y4", "y3", "y2", "y1", "y5")
FIG1_CLASS_SIZES = (1, 2, 2, 3, 1)
FIG1_SOURCE_LABELS = ("x4", "x3", "x6", "x2", "x5", "x1", "x7", "x9", "x8")


def fig1_quotient() -> GraphDocument:
    G1 = build_graph(5, FIG1_CLASS_SIZES, [(0, 1), (1, 2), (2, 3), (3, 4)])
    return GraphDocument(G1, dict(enumerate(FIG1_QUOTIENT_LABELS)), "fixture fig1-quotient")


def fig1_source() -> GraphDocument:
    """Nine unit-weight vertices whose twin classes are the figure's y-classes."""
    G = expand_normal(fig1_quotient().graph, FIG1_CLASS_SIZES)
    return GraphDocument(G, dict(enumerate(FIG1_SOURCE_LABELS)), "fixture fig1-source")
