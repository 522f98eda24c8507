"""Pendant embeddings into twin-orthogonal graphs.

Both constructions keep the original graph as the induced subgraph on
``0..n-1`` and append zero-weight pendant vertices ``n, n+1, ...``. A pendant
is orthogonal to its anchor, and attaching pendants only to vertices outside
already chosen orthogonal pairs leaves those pairs orthogonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from twinmis.graph import (
    GraphError,
    WeightedGraph,
    build_graph,
    is_mis,
    neighborhood_mask,
    to_mask,
    from_mask,
)
from twinmis.orthogonality import OrthogonalPairing, orthogonal_pairs


@dataclass(frozen=True)
class EmbeddingInfo:
    original: WeightedGraph
    embedded: WeightedGraph
    original_vertices: frozenset[int]
    added_vertices: frozenset[int]
    pairing: OrthogonalPairing
    attach: dict[int, int]


def _attach_pendants(
    G: WeightedGraph, anchors: list[int], pairs: list[tuple[int, int]]
) -> EmbeddingInfo:
    attach = {G.n + i: v for i, v in enumerate(anchors)}
    embedded = build_graph(
        G.n + len(anchors),
        list(G.weights) + [0] * len(anchors),
        G.edges() + [(v, p) for p, v in attach.items()],
    )
    pairing = OrthogonalPairing.from_pairs(embedded.n, pairs + [(v, p) for p, v in attach.items()])
    return EmbeddingInfo(
        G, embedded, frozenset(range(G.n)), frozenset(attach), pairing, attach
    )


def embed_full(G: WeightedGraph) -> EmbeddingInfo:
    """Hang one zero-weight pendant on every vertex."""
    return _attach_pendants(G, list(range(G.n)), [])


def embed_minimal(G: WeightedGraph) -> EmbeddingInfo:
    """Keep a greedy maximal set of disjoint orthogonal pairs, pendant the rest."""
    covered = [False] * G.n
    chosen = []
    for u, v in orthogonal_pairs(G):
        if not covered[u] and not covered[v]:
            covered[u] = covered[v] = True
            chosen.append((u, v))
    anchors = [v for v in range(G.n) if not covered[v]]
    return _attach_pendants(G, anchors, chosen)


def project(info: EmbeddingInfo, U_embedded: Iterable[int]) -> frozenset[int]:
    """Map a maximal independent set of the embedded graph back to the original.

    Pendants are dropped, then any original vertex left undominated is
    added, smallest index first. With zero-weight vertices the plain
    restriction can fail to be maximal; extension never lowers the weight.
    """
    U_embedded = frozenset(U_embedded)
    if not is_mis(info.embedded, U_embedded):
        raise GraphError("projection needs a maximal independent set of the embedded graph")
    G = info.original
    mask = to_mask(v for v in U_embedded if v in info.original_vertices)
    while True:
        free = G.full_mask & ~(mask | neighborhood_mask(G, mask))
        if not free:
            return from_mask(mask)
        mask |= free & -free
