"""Deterministic generators for the extremal shapes.

All layouts put the small "core" classes on the lowest vertex ids so the
serialized output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .hypergraph import Graph, Hypergraph

FAMILIES = ("H_nka", "main_AB", "disjoint_blocks")


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    n: int
    k: int
    r: int = 2
    a: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "H_nka" and self.a is None:
            raise ValueError("H_nka needs the parameter a")

    def build(self) -> Hypergraph:
        if self.family == "H_nka":
            return Hypergraph.from_graph(construct_H_nka(self.n, self.k, self.a))
        if self.family == "main_AB":
            return construct_main(self.n, self.k, self.r)
        return construct_disjoint_blocks(self.n, self.k, self.r)


def construct_H_nka(n: int, k: int, a: int) -> Graph:
    """Clique on ``A u C`` plus all ``A x B`` edges.

    ``A = 0..a-1``, ``C = a..k-a-1``, ``B = k-a..n-1``; ``B`` is independent
    and there are no ``B x C`` edges.
    """
    if not 1 <= a <= (k - 1) // 2:
        raise ValueError(f"need 1 <= a <= floor((k-1)/2), got a={a}, k={k}")
    if n < k - a:
        raise ValueError(f"need n >= k - a, got n={n}, k={k}, a={a}")
    core = range(k - a)
    edges = list(combinations(core, 2))
    edges.extend((x, y) for x in range(a) for y in range(k - a, n))
    return Graph.from_edges(n, edges)


def construct_main(n: int, k: int, r: int) -> Hypergraph:
    """Every ``(r-1)``-subset of ``A`` joined with every vertex of ``B``.

    ``|A| = floor((k-1)/2)`` on ids ``0..a-1`` and ``B`` is the rest. A Berge
    path alternates between ``A`` and ``B`` at best, so it has at most
    ``2|A| + 1 < k + 1`` basic vertices.
    """
    a = (k - 1) // 2
    if r < 2:
        raise ValueError(f"r must be at least 2, got r={r}")
    if a < r - 1:
        raise ValueError(f"need floor((k-1)/2) >= r-1, got k={k}, r={r}")
    if n <= a:
        raise ValueError(f"need n > floor((k-1)/2) = {a}, got n={n}")
    edges = [(*x, y) for x in combinations(range(a), r - 1) for y in range(a, n)]
    return Hypergraph(n, r, edges)


def construct_disjoint_blocks(n: int, k: int, r: int) -> Hypergraph:
    """Complete r-uniform blocks on consecutive k-vertex windows.

    A leftover window of ``n mod k`` vertices is filled completely when it
    has at least ``r`` vertices and otherwise left isolated.
    """
    if r < 2:
        raise ValueError(f"r must be at least 2, got r={r}")
    if k < r:
        raise ValueError(f"need k >= r, got k={k}, r={r}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got n={n}")
    edges = []
    for start in range(0, n, k):
        block = range(start, min(start + k, n))
        edges.extend(combinations(block, r))
    return Hypergraph(n, r, edges)
