"""Executable checks of the structural theorems on a single instance.

Each check enumerates maximal independent sets where needed and reports
pass, fail (with the smallest counterexample found) or not-applicable when
the instance lacks the structure the statement assumes, for example an
orthogonal pairing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from twinmis.duality import conjugate
from twinmis.embedding import embed_full, embed_minimal, project
from twinmis.graph import GraphError, WeightedGraph, is_mis, weight_of
from twinmis.normalization import twin_classes
from twinmis.orthogonality import (
    OrthogonalPairing,
    are_orthogonal,
    find_pairing,
    is_trivial,
    orthogonal_pairs,
    validate_pairing,
    verify_pair_structure,
)
from twinmis.solvers import DEFAULT_CAPACITY, CapacityError, enumerate_mis, solve_max, solve_min

THEOREMS = ("2.1", "2.2", "3.1", "3.2", "3.3", "4.1", "4.2", "4.3", "5.1", "5.2", "duality", "gap")

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass
class TheoremCheck:
    theorem: str
    instance: str
    status: str
    detail: str = ""
    counterexample: list[int] | None = None

    def to_dict(self) -> dict:
        out = {"theorem": self.theorem, "instance": self.instance, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerificationReport:
    entries: list[TheoremCheck] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, NA: 0}
        for e in self.entries:
            counts[e.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return not any(e.status == FAIL for e in self.entries)

    def to_dict(self) -> dict:
        return {"entries": [e.to_dict() for e in self.entries], "summary": self.summary}

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            line = f"{e.theorem:8} {e.status:4} {e.instance}"
            if e.detail:
                line += f"  {e.detail}"
            if e.counterexample is not None:
                line += f"  counterexample={e.counterexample}"
            lines.append(line)
        s = self.summary
        lines.append(f"summary pass={s[PASS]} fail={s[FAIL]} n/a={s[NA]}")
        return "\n".join(lines) + "\n"


def _smallest(sets: Iterable[Sequence[int]]) -> list[int] | None:
    keyed = [sorted(s) for s in sets]
    return min(keyed, key=lambda s: (len(s), s)) if keyed else None


class _Checker:
    def __init__(self, G: WeightedGraph, instance: str, claimed: list[tuple[int, int]] | None):
        self.G = G
        self.instance = instance
        self.mis = list(enumerate_mis(G))
        self.claimed = claimed
        self.pairing: OrthogonalPairing | None = None
        self.pairing_problem = ""
        if claimed is None:
            self.pairing = find_pairing(G)
            if self.pairing is None:
                self.pairing_problem = "graph has no perfect orthogonal pairing"
        else:
            try:
                P = OrthogonalPairing.from_pairs(G.n, claimed)
                validate_pairing(G, P)
                self.pairing = P
            except GraphError as exc:
                self.pairing_problem = f"supplied pairing rejected: {exc}"

    def entry(self, theorem, status, detail="", counterexample=None) -> TheoremCheck:
        return TheoremCheck(theorem, self.instance, status, detail, counterexample)

    def pair_list(self) -> list[tuple[int, int]] | None:
        if self.claimed is not None:
            return [(min(a, b), max(a, b)) for a, b in self.claimed]
        return list(self.pairing.pairs) if self.pairing else None

    def t2_1(self):
        classes = twin_classes(self.G).classes
        bad = [sorted(U) for U in self.mis for K in classes if U & K and not K <= U]
        return self.entry("2.1", FAIL if bad else PASS, counterexample=_smallest(bad) if bad else None)

    def t2_2(self):
        G = self.G
        classes = twin_classes(G).classes
        bad = []
        for x in range(G.n):
            gx = G.neighbors(x)
            bad.extend([x, *sorted(K)] for K in classes if gx & K and not K <= gx)
        for K in classes:
            gK = frozenset().union(*(G.neighbors(x) for x in K))
            bad.extend(sorted(K) + sorted(K2) for K2 in classes if gK & K2 and not K2 <= gK)
        return self.entry("2.2", FAIL if bad else PASS, counterexample=_smallest(bad) if bad else None)

    def t3_1(self):
        G = self.G
        pendant_edges = [(u, v) for u, v in G.edges() if G.degree(u) == 1 or G.degree(v) == 1]
        if not pendant_edges:
            return self.entry("3.1", NA, "no edge with a degree-1 endpoint")
        bad = [[u, v] for u, v in pendant_edges if not are_orthogonal(G, u, v)]
        return self.entry("3.1", FAIL if bad else PASS, counterexample=_smallest(bad) if bad else None)

    def t3_2(self):
        pairs = self.claimed if self.claimed is not None else orthogonal_pairs(self.G)
        if not pairs:
            return self.entry("3.2", NA, "no orthogonal pair")
        bad = [sorted(U) for U in self.mis for a, b in pairs if (a in U) == (b in U)]
        detail = "pairs supplied by caller" if self.claimed is not None else ""
        return self.entry("3.2", FAIL if bad else PASS, detail, _smallest(bad) if bad else None)

    def t3_3(self):
        G = self.G
        best = max(weight_of(G, U) for U in self.mis)
        problems = []
        for name, embed in (("full", embed_full), ("minimal", embed_minimal)):
            info = embed(G)
            inner = solve_max(info.embedded)
            projected = project(info, inner.set)
            if inner.weight != best or weight_of(G, projected) != best or not is_mis(G, projected):
                problems.append((name, sorted(projected)))
            for U in self.mis:
                lifted = U | {p for p, v in info.attach.items() if v not in U}
                if not is_mis(info.embedded, lifted):
                    problems.append((name, sorted(U)))
        if problems:
            name, cx = problems[0]
            return self.entry("3.3", FAIL, f"embedding {name}", cx)
        return self.entry("3.3", PASS, f"optimum {best}")

    def t4_1(self):
        pairs = self.pair_list()
        if pairs is None:
            return self.entry("4.1", NA, self.pairing_problem)
        if 2 * len(pairs) != self.G.n:
            return self.entry("4.1", NA, "pairs do not cover every vertex")
        bad = [sorted(U) for U in self.mis if 2 * len(U) != self.G.n]
        return self.entry("4.1", FAIL if bad else PASS, counterexample=_smallest(bad) if bad else None)

    def t4_2(self):
        if self.pairing is None:
            return self.entry("4.2", NA, self.pairing_problem)
        if not is_trivial(self.G, self.pairing):
            return self.entry("4.2", NA, "pairing is not trivial")
        weights = {weight_of(self.G, U) for U in self.mis}
        if len(weights) > 1:
            lo = min(self.mis, key=lambda U: weight_of(self.G, U))
            return self.entry("4.2", FAIL, f"weights {sorted(weights)}", sorted(lo))
        return self.entry("4.2", PASS)

    def t4_3(self):
        pairs = orthogonal_pairs(self.G)
        if not pairs:
            return self.entry("4.3", NA, "no orthogonal pair")
        bad = [list(p) for p in pairs if not verify_pair_structure(self.G, p).holds]
        return self.entry("4.3", FAIL if bad else PASS, counterexample=_smallest(bad) if bad else None)

    def _dual(self, theorem):
        if self.pairing is None:
            return None, self.entry(theorem, NA, self.pairing_problem)
        return conjugate(self.G, self.pairing).conjugate, None

    def t5_1(self):
        Gs, skip = self._dual("5.1")
        if skip:
            return skip
        bad = [sorted(U) for U in self.mis if not is_mis(Gs, self.G.vertices - U)]
        return self.entry("5.1", FAIL if bad else PASS, counterexample=_smallest(bad) if bad else None)

    def t5_2(self):
        if self.pairing is None:
            return self.entry("5.2", NA, self.pairing_problem)
        G = self.G
        total = G.total_weight
        rows = sorted((weight_of(G, U), weight_of(G, G.vertices - U), sorted(U)) for U in self.mis)
        bad = [U for w, cw, U in rows if w + cw != total]
        # ordering by weight must reverse the ordering by complement weight, ties included
        for (w1, c1, U1), (w2, c2, _) in zip(rows, rows[1:]):
            if (w1 == w2) != (c1 == c2) or c2 > c1:
                bad.append(U1)
        return self.entry("5.2", FAIL if bad else PASS, counterexample=_smallest(bad) if bad else None)

    def duality(self):
        Gs, skip = self._dual("duality")
        if skip:
            return skip
        G = self.G
        hi = max(weight_of(G, U) for U in self.mis)
        lo_star = min(weight_of(Gs, W) for W in enumerate_mis(Gs))
        bad = [
            sorted(U)
            for U in self.mis
            if (weight_of(G, U) == hi) != (weight_of(Gs, G.vertices - U) == lo_star)
        ]
        best, dual = solve_max(G), solve_min(Gs)
        comp = G.vertices - best.set
        if not is_mis(Gs, comp) or weight_of(Gs, comp) != dual.weight:
            bad.append(sorted(best.set))
        if not is_mis(G, G.vertices - dual.set) or weight_of(G, G.vertices - dual.set) != best.weight:
            bad.append(sorted(G.vertices - dual.set))
        return self.entry("duality", FAIL if bad else PASS, counterexample=_smallest(bad) if bad else None)

    def gap(self):
        if self.pairing is None:
            return self.entry("gap", NA, self.pairing_problem)
        G = self.G
        hi, lo = solve_max(G), solve_min(G)
        bound = sum(abs(G.weights[a] - G.weights[b]) for a, b in self.pairing.pairs)
        diff = hi.weight - lo.weight
        detail = f"difference {diff}, bound {bound}"
        if not 0 <= diff <= bound:
            return self.entry("gap", FAIL, detail, sorted(lo.set))
        return self.entry("gap", PASS, detail)


def verify(
    G: WeightedGraph,
    theorems: Iterable[str] | str = "all",
    pairs: Iterable[tuple[int, int]] | None = None,
    instance: str = "graph",
    capacity: int = DEFAULT_CAPACITY,
) -> VerificationReport:
    """Run the selected theorem checks on ``G``.

    ``pairs`` overrides the pairing search; it is taken at face value for
    the pair-hitting and cardinality checks, so a wrong pairing surfaces as
    a counterexample there.
    """
    if G.n > capacity:
        raise CapacityError(f"verification enumerates all maximal independent sets; {G.n} > {capacity}")
    selected = list(THEOREMS) if theorems == "all" else list(theorems)
    for t in selected:
        if t not in THEOREMS:
            raise GraphError(f"unknown theorem id {t!r}; known: {', '.join(THEOREMS)}")
    checker = _Checker(G, instance, None if pairs is None else list(pairs))
    methods = {t: getattr(checker, "t" + t.replace(".", "_") if t[0].isdigit() else t) for t in THEOREMS}
    report = VerificationReport([methods[t]() for t in selected])
    return report
