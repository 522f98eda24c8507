"""Twin classes and the normal quotient graph.

Two vertices are twins when their open neighborhoods coincide. Twins are
never adjacent, every maximal independent set is a union of twin classes,
and every neighborhood is a union of twin classes, so collapsing each class
to a single vertex carrying the class weight preserves the optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from twinmis.graph import GraphError, WeightedGraph, build_graph, iter_bits


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[frozenset[int], ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class NormalizationMap:
    """The quotient map from ``source`` to its normal graph ``quotient``.

    Quotient vertex ``j`` stands for ``partition.classes[j]``; the
    ``class_vertex`` table is kept explicit so callers never rely on that.
    """

    source: WeightedGraph
    quotient: WeightedGraph
    partition: TwinPartition
    class_vertex: tuple[int, ...]


def twin_classes(G: WeightedGraph) -> TwinPartition:
    """Group vertices by equal open neighborhood, classes ordered by smallest member."""
    by_neighborhood: dict[int, int] = {}
    members: list[list[int]] = []
    class_of = []
    for v in range(G.n):
        j = by_neighborhood.setdefault(G.adj[v], len(members))
        if j == len(members):
            members.append([])
        members[j].append(v)
        class_of.append(j)
    return TwinPartition(tuple(frozenset(m) for m in members), tuple(class_of))


def is_normal(G: WeightedGraph) -> bool:
    return len(set(G.adj)) == G.n


def normalize(G: WeightedGraph) -> NormalizationMap:
    partition = twin_classes(G)
    reps = [min(c) for c in partition.classes]
    edges = []
    for j, r in enumerate(reps):
        for v in iter_bits(G.adj[r]):
            k = partition.class_of[v]
            if j < k:
                edges.append((j, k))
    weights = [sum(G.weights[v] for v in c) for c in partition.classes]
    quotient = build_graph(len(reps), weights, edges)
    return NormalizationMap(G, quotient, partition, tuple(range(len(reps))))


def lift_set(nmap: NormalizationMap, U1: Iterable[int]) -> frozenset[int]:
    """Union of the twin classes picked by the quotient vertex set ``U1``.

    A maximal independent set of the quotient lifts to a maximal
    independent set of the source with the same weight.
    """
    vertex_class = {q: j for j, q in enumerate(nmap.class_vertex)}
    out: set[int] = set()
    for q in U1:
        if q not in vertex_class:
            raise GraphError(f"vertex {q} is not in the quotient graph")
        out |= nmap.partition.classes[vertex_class[q]]
    return frozenset(out)


def expand_normal(G1: WeightedGraph, sizes: Sequence[int]) -> WeightedGraph:
    """Blow vertex ``j`` of ``G1`` up into ``sizes[j]`` pairwise twin vertices.

    New vertices are numbered block by block in the order of ``G1``. The
    weight of ``j`` is split as evenly as possible, remainder going to the
    lowest indices of the block.
    """
    if len(sizes) != G1.n:
        raise GraphError(f"expected {G1.n} class sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise GraphError("every class size must be at least 1")
    blocks = []
    weights: list[int] = []
    start = 0
    for j, size in enumerate(sizes):
        blocks.append(range(start, start + size))
        q, r = divmod(G1.weights[j], size)
        weights.extend(q + 1 if i < r else q for i in range(size))
        start += size
    edges = [(a, b) for u, v in G1.edges() for a in blocks[u] for b in blocks[v]]
    return build_graph(start, weights, edges)
