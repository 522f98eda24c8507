"""Orthogonal vertex pairs and perfect orthogonal pairings.

Adjacent vertices ``a`` and ``b`` are orthogonal when every other neighbor
of ``a`` sees all of ``N(b)`` and every other neighbor of ``b`` sees all of
``N(a)``. Containment is non-strict and an empty quantifier domain counts as
satisfied, so an edge with a pendant endpoint is always orthogonal. Every
maximal independent set contains exactly one endpoint of each orthogonal
pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from twinmis.graph import GraphError, WeightedGraph, iter_bits


@dataclass(frozen=True)
class OrthogonalPairing:
    """A partition of all vertices into orthogonal pairs."""

    pairs: tuple[tuple[int, int], ...]
    partner: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> OrthogonalPairing:
        """Assemble a pairing from explicit pairs; only the cover is checked here."""
        partner = [-1] * n
        normalized = []
        for a, b in pairs:
            if a == b or not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"invalid pair ({a}, {b})")
            if partner[a] != -1 or partner[b] != -1:
                raise GraphError(f"pair ({a}, {b}) overlaps another pair")
            partner[a], partner[b] = b, a
            normalized.append((min(a, b), max(a, b)))
        if -1 in partner:
            raise GraphError(f"vertex {partner.index(-1)} is not covered by the pairing")
        return cls(tuple(sorted(normalized)), tuple(partner))

    @property
    def k(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class PairStructure:
    """The three structural facts every orthogonal pair satisfies."""

    pair: tuple[int, int]
    punctured_not_orthogonal: bool
    no_common_neighbor: bool
    punctured_disjoint: bool

    @property
    def holds(self) -> bool:
        return self.punctured_not_orthogonal and self.no_common_neighbor and self.punctured_disjoint


def _subset(a: int, b: int) -> bool:
    return a & ~b == 0


def are_orthogonal(G: WeightedGraph, x1: int, x2: int) -> bool:
    if x1 == x2:
        raise GraphError(f"orthogonality needs two distinct vertices, got {x1} twice")
    if not G.has_edge(x1, x2):
        return False
    n1, n2 = G.adj[x1], G.adj[x2]
    if any(not _subset(n2, G.adj[a]) for a in iter_bits(n1 & ~(1 << x2))):
        return False
    return all(_subset(n1, G.adj[b]) for b in iter_bits(n2 & ~(1 << x1)))


def orthogonal_pairs(G: WeightedGraph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in G.edges() if are_orthogonal(G, u, v)]


def find_pairing(G: WeightedGraph) -> OrthogonalPairing | None:
    """Find a perfect matching inside the orthogonality relation, or ``None``.

    Backtracks over the smallest unmatched vertex, trying its orthogonal
    partners in increasing order, so the result is canonical.
    """
    if G.n % 2:
        return None
    options: list[list[int]] = [[] for _ in range(G.n)]
    for u, v in orthogonal_pairs(G):
        options[u].append(v)
        options[v].append(u)
    if any(not opts for opts in options):
        return None
    partner = [-1] * G.n

    def search(start: int) -> bool:
        v = start
        while v < G.n and partner[v] != -1:
            v += 1
        if v == G.n:
            return True
        for u in options[v]:
            if partner[u] == -1:
                partner[v], partner[u] = u, v
                if search(v + 1):
                    return True
                partner[v] = partner[u] = -1
        return False

    if not search(0):
        return None
    return OrthogonalPairing(
        tuple((v, u) for v, u in enumerate(partner) if v < u), tuple(partner)
    )


def validate_pairing(G: WeightedGraph, P: OrthogonalPairing) -> None:
    """Raise :class:`GraphError` unless ``P`` is a perfect orthogonal pairing of ``G``."""
    if len(P.partner) != G.n:
        raise GraphError(f"pairing covers {len(P.partner)} vertices, graph has {G.n}")
    for v, u in enumerate(P.partner):
        if not 0 <= u < G.n or u == v or P.partner[u] != v:
            raise GraphError(f"partner map is not a fixed-point-free involution at vertex {v}")
    for a, b in P.pairs:
        if P.partner[a] != b:
            raise GraphError(f"pair ({a}, {b}) disagrees with the partner map")
        if not are_orthogonal(G, a, b):
            raise GraphError(f"pair ({a}, {b}) is not orthogonal")
    if 2 * len(P.pairs) != G.n:
        raise GraphError("pair list does not cover every vertex")


def is_trivial(G: WeightedGraph, P: OrthogonalPairing) -> bool:
    """True iff both endpoints of every pair carry the same weight."""
    return all(G.weights[a] == G.weights[b] for a, b in P.pairs)


def verify_pair_structure(G: WeightedGraph, pair: tuple[int, int]) -> PairStructure:
    x1, x2 = pair
    if not are_orthogonal(G, x1, x2):
        raise GraphError(f"({x1}, {x2}) is not an orthogonal pair")
    rest1 = sorted(iter_bits(G.adj[x1] & ~(1 << x2)))
    rest2 = sorted(iter_bits(G.adj[x2] & ~(1 << x1)))
    fact_i = not any(
        are_orthogonal(G, a, b) for side in (rest1, rest2) for a, b in combinations(side, 2)
    )
    fact_ii = not any(G.has_edge(w, x1) and G.has_edge(w, x2) for w in range(G.n))
    fact_iii = not set(rest1) & set(rest2)
    return PairStructure((x1, x2), fact_i, fact_ii, fact_iii)
