"""Exact maximal-independent-set enumeration and weighted optimisation.

Enumeration is Bron-Kerbosch on the complement graph: a maximal independent
set is a maximal clique of the complement. With a pivot ``u`` every maximal
extension contains ``u`` or one of its neighbors, so only candidates in the
closed neighborhood of the pivot are branched on. The same search tree,
pruned by weight bounds, drives the max- and min-weight solvers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Literal

from twinmis.embedding import embed_full, embed_minimal, project
from twinmis.graph import WeightedGraph, from_mask, iter_bits, weight_of
from twinmis.normalization import lift_set, normalize

Direction = Literal["max", "min"]

DEFAULT_CAPACITY = 24
ENUMERATE_BELOW = 12

# gamma(s) for n = 3r + s
_GAMMA = (3, 4, 6)


class CapacityError(RuntimeError):
    """Raised when an exponential enumeration is refused for graph size."""


@dataclass(frozen=True)
class SolveResult:
    set: frozenset[int]
    weight: int
    direction: Direction
    stats: dict = field(default_factory=dict, compare=False)

    def to_dict(self, timing: bool = False) -> dict:
        stats = {k: v for k, v in sorted(self.stats.items()) if timing or k != "elapsed"}
        return {
            "direction": self.direction,
            "set": sorted(self.set),
            "weight": self.weight,
            "stats": stats,
        }


def mis_count_bound(n: int) -> int:
    """Largest possible number of maximal independent sets on ``n`` vertices."""
    if n <= 0:
        raise ValueError(f"bound is defined for n >= 1, got {n}")
    if n == 1:
        return 1
    r, s = divmod(n, 3)
    # n = 2 gives r = 0, where gamma(2) / 3 = 2 is still exact
    return _GAMMA[s] * 3**r // 3


def _search(
    G: WeightedGraph,
    prune: Callable[[int, int], bool] | None = None,
    counter: list[int] | None = None,
) -> Iterator[int]:
    """Yield maximal independent sets as bitmasks; ``prune(R, P)`` cuts subtrees."""
    closed = [a | 1 << v for v, a in enumerate(G.adj)]
    counter = counter if counter is not None else [0]

    def rec(R: int, P: int, X: int) -> Iterator[int]:
        counter[0] += 1
        if not P:
            if not X:
                yield R
            return
        if prune is not None and prune(R, P):
            return
        # an excluded vertex with no candidate neighbor can never be dominated
        for x in iter_bits(X):
            if not G.adj[x] & P:
                return
        pivot, best = -1, None
        for u in iter_bits(P | X):
            size = (P & closed[u]).bit_count()
            if best is None or size < best:
                pivot, best = u, size
        for v in iter_bits(P & closed[pivot]):
            keep = ~closed[v]
            yield from rec(R | 1 << v, P & keep, X & keep)
            P &= ~(1 << v)
            X |= 1 << v

    yield from rec(0, G.full_mask, 0)


def enumerate_mis(
    G: WeightedGraph, *, allow_large: bool = False, capacity: int = DEFAULT_CAPACITY
) -> Iterator[frozenset[int]]:
    """Yield every maximal independent set of ``G`` exactly once.

    The order is deterministic. Graphs above ``capacity`` vertices are
    refused with :class:`CapacityError` unless ``allow_large`` is set.
    """
    if G.n > capacity and not allow_large:
        raise CapacityError(
            f"refusing to enumerate maximal independent sets of a {G.n}-vertex graph "
            f"(capacity {capacity}); pass allow_large to override"
        )
    return (from_mask(m) for m in _search(G))


def _key(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def _solve(G: WeightedGraph, direction: Direction, method: str) -> SolveResult:
    if method not in ("auto", "enumerate", "bnb"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        method = "enumerate" if G.n < ENUMERATE_BELOW else "bnb"
    sign = 1 if direction == "max" else -1
    w = G.weights

    def mask_weight(mask: int) -> int:
        return sum(w[v] for v in iter_bits(mask))

    best: list = [None, None]  # signed weight, mask
    seen = [0]

    def visit(mask: int) -> None:
        seen[0] += 1
        score = sign * mask_weight(mask)
        if best[0] is None or score > best[0] or (score == best[0] and _key(mask) < _key(best[1])):
            best[0], best[1] = score, mask

    start = time.perf_counter()
    counter = [0]
    def prune_max(R: int, P: int) -> bool:
        return best[0] is not None and mask_weight(R) + mask_weight(P) < best[0]

    # weights are non-negative, so the partial set weight bounds any completion
    def prune_min(R: int, P: int) -> bool:
        return best[0] is not None and mask_weight(R) > -best[0]

    prune = None
    if method == "bnb":
        prune = prune_max if direction == "max" else prune_min
    for mask in _search(G, prune, counter):
        visit(mask)
    elapsed = time.perf_counter() - start
    mask = best[1]
    return SolveResult(
        from_mask(mask),
        sign * best[0],
        direction,
        {"method": method, "nodes": counter[0], "mis_visited": seen[0], "elapsed": elapsed},
    )


def solve_max(G: WeightedGraph, method: str = "auto") -> SolveResult:
    """Maximum-weight maximal independent set, lexicographically smallest among ties.

    ``method="auto"`` enumerates below 12 vertices and uses branch and bound
    (remaining-weight upper bound) otherwise.
    """
    return _solve(G, "max", method)


def solve_min(G: WeightedGraph, method: str = "auto") -> SolveResult:
    """Minimum-weight maximal independent set; ties broken as in :func:`solve_max`."""
    return _solve(G, "min", method)


def solve_via_reduction(G: WeightedGraph, mode: str = "full") -> SolveResult:
    """Normalize, embed into a twin-orthogonal graph, solve there and map back."""
    embedders = {"full": embed_full, "minimal": embed_minimal}
    if mode not in embedders:
        raise ValueError(f"unknown embedding mode {mode!r}")
    start = time.perf_counter()
    nmap = normalize(G)
    info = embedders[mode](nmap.quotient)
    inner = solve_max(info.embedded)
    U = lift_set(nmap, project(info, inner.set))
    stats = {
        "method": "reduce",
        "mode": mode,
        "source_n": G.n,
        "quotient_n": nmap.quotient.n,
        "embedded_n": info.embedded.n,
        "pendants": len(info.added_vertices),
        "embedded_weight": inner.weight,
        "nodes": inner.stats["nodes"],
        "elapsed": time.perf_counter() - start,
    }
    return SolveResult(U, weight_of(G, U), "max", stats)
