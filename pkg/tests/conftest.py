"""Shared brute-force oracles and hypothesis strategies.

The oracles here deliberately avoid the package's search code: they walk
every vertex sequence and every hyperedge assignment with itertools.
"""

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from bergepath.hypergraph import Graph, Hypergraph

ACCEPTANCE_LINES: list[str] = []


def brute_longest_berge_path(h: Hypergraph) -> int:
    """Max m such that some distinct v_1..v_{m+1} and distinct h_1..h_m fit."""
    edges = [set(e) for e in h.edges]
    best = 0
    for m in range(1, min(h.n - 1, len(edges)) + 1):
        found = False
        for verts in permutations(range(h.n), m + 1):
            options = [
                [i for i, e in enumerate(edges) if verts[j] in e and verts[j + 1] in e]
                for j in range(m)
            ]
            if any(not o for o in options):
                continue
            if _has_injective_choice(options):
                found = True
                break
        if not found:
            break
        best = m
    return best


def _has_injective_choice(options, used=frozenset()) -> bool:
    if not options:
        return True
    return any(
        _has_injective_choice(options[1:], used | {c}) for c in options[0] if c not in used
    )


def independent_witness_check(h: Hypergraph, vertices, hyperedge_indices) -> bool:
    """Witness validation written from the definition, separate from the library's."""
    if len(vertices) != len(hyperedge_indices) + 1:
        return False
    if len(set(vertices)) != len(vertices) or len(set(hyperedge_indices)) != len(hyperedge_indices):
        return False
    edges = [set(e) for e in h.edges]
    return all(
        {vertices[i], vertices[i + 1]} <= edges[j] for i, j in enumerate(hyperedge_indices)
    )


def brute_graph_longest_path(g: Graph) -> int:
    best = 0
    for size in range(2, g.n + 1):
        hit = any(
            all(g.has_edge(p[i], p[i + 1]) for i in range(size - 1))
            for p in permutations(range(g.n), size)
        )
        if not hit:
            break
        best = size - 1
    return best


def brute_count_cliques(g: Graph, s: int) -> int:
    return sum(
        1 for c in combinations(range(g.n), s) if all(g.has_edge(a, b) for a, b in combinations(c, 2))
    )


@st.composite
def hypergraphs(draw, max_n=7, r_values=(2, 3, 4), max_edges=None):
    r = draw(st.sampled_from(r_values))
    n = draw(st.integers(min_value=r, max_value=max(r, max_n)))
    pool = list(combinations(range(n), r))
    limit = len(pool) if max_edges is None else min(max_edges, len(pool))
    chosen = draw(st.lists(st.sampled_from(pool), unique=True, max_size=limit))
    return Hypergraph(n, r, chosen)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pool = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pool), unique=True)) if pool else []
    return Graph.from_edges(n, chosen)


@pytest.fixture
def k4_3():
    return Hypergraph.complete(4, 3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
