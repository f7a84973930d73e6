"""Fat/thin classification of shadow edges and the counting report built on it.

A shadow edge is fat when enough hyperedges contain it: at least 2 for
3-uniform input, at least ``k`` for larger uniformity. The fat graph keeps
the fat shadow edges; a hyperedge is fat when all of its pairs are fat.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations

from .berge import SearchBudget, has_berge_path
from .cliques import count_cliques
from .graphalg import has_disjoint_long_cycles
from .hypergraph import Graph, Hypergraph, VertexPair, connected_components, is_connected

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_VIOLATED = "hypothesis violated"
NOT_APPLICABLE = "not applicable"


@dataclass(frozen=True)
class FatnessParameters:
    r: int
    k: int

    def __post_init__(self):
        if self.r < 3:
            raise ValueError(f"fatness is defined for r >= 3, got r={self.r}")
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got k={self.k}")

    @property
    def threshold(self) -> int:
        return 2 if self.r == 3 else self.k


def edge_multiplicity(h: Hypergraph, p: VertexPair | tuple[int, int]) -> int:
    return h.multiplicity(*p)


def classify_edges(
    h: Hypergraph, params: FatnessParameters
) -> tuple[frozenset[VertexPair], frozenset[VertexPair]]:
    """Split the shadow edges into ``(fat, thin)``."""
    if params.r != h.r:
        raise ValueError(f"parameters are for r={params.r}, hypergraph has r={h.r}")
    t = params.threshold
    fat = frozenset(p for p, c in h.pair_count.items() if c >= t)
    thin = frozenset(p for p, c in h.pair_count.items() if c < t)
    return fat, thin


def fat_graph(h: Hypergraph, params: FatnessParameters) -> Graph:
    fat, _ = classify_edges(h, params)
    return Graph.from_edges(h.n, fat)


def _is_fat_hyperedge(h: Hypergraph, edge: tuple[int, ...], threshold: int) -> bool:
    return all(h.pair_count[VertexPair(a, b)] >= threshold for a, b in combinations(edge, 2))


def fat_hypergraph(h: Hypergraph, params: FatnessParameters) -> Hypergraph:
    """Sub-hypergraph of the hyperedges containing no thin pair."""
    if params.r != h.r:
        raise ValueError(f"parameters are for r={params.r}, hypergraph has r={h.r}")
    t = params.threshold
    return h.with_edges(e for e in h.edges if _is_fat_hyperedge(h, e, t))


def long_cycle_length(k: int) -> int:
    """Smallest integer cycle length meeting "at least k/2 + 1"."""
    return k // 2 + 1


@dataclass
class DecompositionReport:
    n: int
    r: int
    k: int
    threshold: int
    shadow_edge_count: int
    fat_edge_count: int
    thin_edge_count: int
    fat_hyperedge_count: int
    nonfat_hyperedge_count: int
    clique_count_F: int
    component_clique_counts: list[int] = field(default_factory=list)
    berge_path_free: bool = True
    connected: bool = False
    nonfat_bound: Fraction = Fraction(0)
    nonfat_verdict: str = PASS
    fat_clique_verdict: str = PASS
    component_sum_verdict: str = PASS
    disjoint_cycles_verdict: str = NOT_APPLICABLE

    @property
    def violations(self) -> list[str]:
        checks = {
            "nonfat": self.nonfat_verdict,
            "fat_clique": self.fat_clique_verdict,
            "component_sum": self.component_sum_verdict,
            "disjoint_cycles": self.disjoint_cycles_verdict,
        }
        return [name for name, verdict in checks.items() if verdict == FAIL]

    def to_json(self) -> dict:
        d = asdict(self)
        d["nonfat_bound"] = str(self.nonfat_bound)
        return d


def nonfat_cap(n: int, k: int, r: int) -> Fraction:
    """Cap on hyperedges that contain a thin pair, for Berge-P_k-free input."""
    if r == 3:
        return Fraction((k - 1) * n, 2)
    return Fraction((k - 1) ** 2 * n, 2)


def decomposition_report(
    h: Hypergraph, k: int, budget: SearchBudget | None = None
) -> DecompositionReport:
    params = FatnessParameters(h.r, k)
    fat, thin = classify_edges(h, params)
    f_graph = Graph.from_edges(h.n, fat)
    fat_h = fat_hypergraph(h, params)
    n_fat_h = fat_h.num_edges
    n_nonfat = h.num_edges - n_fat_h

    clique_total = count_cliques(f_graph, h.r)
    per_component = [
        count_cliques(f_graph.induced(c), h.r) for c in connected_components(f_graph)
    ]
    free = not has_berge_path(h, k, budget)
    connected = is_connected(h)
    bound = nonfat_cap(h.n, k, h.r)

    if not free:
        nonfat_verdict = HYPOTHESIS_VIOLATED
    else:
        nonfat_verdict = PASS if n_nonfat <= bound else FAIL
    if free and connected:
        found = has_disjoint_long_cycles(f_graph, long_cycle_length(k))
        cycles_verdict = FAIL if found else PASS
    else:
        cycles_verdict = NOT_APPLICABLE

    return DecompositionReport(
        n=h.n,
        r=h.r,
        k=k,
        threshold=params.threshold,
        shadow_edge_count=len(h.pair_count),
        fat_edge_count=len(fat),
        thin_edge_count=len(thin),
        fat_hyperedge_count=n_fat_h,
        nonfat_hyperedge_count=n_nonfat,
        clique_count_F=clique_total,
        component_clique_counts=per_component,
        berge_path_free=free,
        connected=connected,
        nonfat_bound=bound,
        nonfat_verdict=nonfat_verdict,
        fat_clique_verdict=PASS if n_fat_h <= clique_total else FAIL,
        component_sum_verdict=PASS if sum(per_component) == clique_total else FAIL,
        disjoint_cycles_verdict=cycles_verdict,
    )
