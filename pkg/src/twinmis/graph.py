"""Weighted undirected graphs and the independence predicates of problem Z.

Vertices are dense indices ``0..n-1``. Adjacency is held as one integer
bitmask per vertex, so neighborhood unions and independence checks reduce
to bitwise operations. Vertex sets are plain ``frozenset[int]`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset


class GraphError(ValueError):
    """Raised when a graph or vertex set violates its construction rules."""


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class WeightedGraph:
    """An immutable loop-free simple graph with non-negative integer weights.

    Use :func:`build_graph` to construct one; the raw constructor trusts
    its arguments.
    """

    n: int
    weights: tuple[int, ...]
    adj: tuple[int, ...]

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def induced(self, vertices: Iterable[int]) -> WeightedGraph:
        """Subgraph induced on ``vertices``, relabelled in increasing order."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return build_graph(len(order), [self.weights[v] for v in order], edges)

    def with_weights(self, weights: Sequence[int]) -> WeightedGraph:
        return build_graph(self.n, weights, self.edges())


def build_graph(n: int, weights: Sequence[int], edges: Iterable[tuple[int, int]]) -> WeightedGraph:
    """Build a graph, symmetrizing and deduplicating ``edges``.

    Raises
    ------
    GraphError
        On a negative count or weight, a weights/count mismatch, a loop, or
        an endpoint outside ``0..n-1``.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    weights = tuple(int(w) for w in weights)
    if len(weights) != n:
        raise GraphError(f"expected {n} weights, got {len(weights)}")
    for i, w in enumerate(weights):
        if w < 0:
            raise GraphError(f"negative weight {w} on vertex {i}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop on vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return WeightedGraph(n, weights, tuple(adj))


def _check(G: WeightedGraph, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for v in S:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} is not in a graph with {G.n} vertices")
    return S


def neighborhood_mask(G: WeightedGraph, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= G.adj[v]
    return out


def neighborhood(G: WeightedGraph, S: Iterable[int]) -> frozenset[int]:
    """Union of the open neighborhoods of the members of ``S``."""
    return from_mask(neighborhood_mask(G, to_mask(_check(G, S))))


def weight_of(G: WeightedGraph, A: Iterable[int]) -> int:
    return sum(G.weights[v] for v in _check(G, A))


def is_independent(G: WeightedGraph, U: Iterable[int]) -> bool:
    mask = to_mask(_check(G, U))
    return not (mask & neighborhood_mask(G, mask))


def is_mis_mask(G: WeightedGraph, mask: int) -> bool:
    gamma = neighborhood_mask(G, mask)
    return not (mask & gamma) and (mask | gamma) == G.full_mask


def is_mis(G: WeightedGraph, U: Iterable[int]) -> bool:
    """True iff ``U`` is independent and dominates every vertex outside it."""
    return is_mis_mask(G, to_mask(_check(G, U)))
