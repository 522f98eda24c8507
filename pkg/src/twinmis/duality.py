"""Conjugate graphs of twin-orthogonal graphs and the min-weight dual.

The conjugate keeps every vertex and its weight but transports adjacency
through the involution that swaps each orthogonal pair. Since every maximal
independent set takes exactly one vertex per pair, its complement is the
swapped set, which is maximal independent in the conjugate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from twinmis.graph import GraphError, WeightedGraph, build_graph, is_mis
from twinmis.orthogonality import OrthogonalPairing, validate_pairing


@dataclass(frozen=True)
class ConjugateResult:
    conjugate: WeightedGraph
    pairing: OrthogonalPairing
    swap: tuple[int, ...]


def conjugate(G: WeightedGraph, P: OrthogonalPairing) -> ConjugateResult:
    validate_pairing(G, P)
    swap = P.partner
    edges = [(swap[u], swap[v]) for u, v in G.edges()]
    return ConjugateResult(build_graph(G.n, G.weights, edges), P, swap)


def complement_of_mis(G: WeightedGraph, U: Iterable[int]) -> frozenset[int]:
    U = frozenset(U)
    if not is_mis(G, U):
        raise GraphError(f"{sorted(U)} is not a maximal independent set")
    return G.vertices - U


def gap_bound(G: WeightedGraph, P: OrthogonalPairing) -> int:
    """Sum over pairs of the absolute weight difference inside the pair."""
    return sum(abs(G.weights[a] - G.weights[b]) for a, b in P.pairs)
