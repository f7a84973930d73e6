import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from bergepath.berge import expand_fat_path, has_berge_path
from bergepath.cliques import count_cliques
from bergepath.fat import (
    FAIL,
    HYPOTHESIS_VIOLATED,
    NOT_APPLICABLE,
    PASS,
    FatnessParameters,
    classify_edges,
    decomposition_report,
    edge_multiplicity,
    fat_graph,
    fat_hypergraph,
    long_cycle_length,
)
from bergepath.graphalg import (
    circumference,
    cycle_vertex_sets,
    find_path,
    has_disjoint_long_cycles,
)
from bergepath.hypergraph import Graph, Hypergraph, VertexPair, connected_components, is_connected, shadow_graph

from conftest import graphs, hypergraphs, independent_witness_check


def test_threshold_rule():
    assert FatnessParameters(3, 9).threshold == 2
    assert FatnessParameters(4, 9).threshold == 9
    assert FatnessParameters(5, 3).threshold == 3
    with pytest.raises(ValueError):
        FatnessParameters(2, 5)
    with pytest.raises(ValueError):
        FatnessParameters(3, 1)


def test_edge_multiplicity_examples():
    h = Hypergraph(5, 3, [(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    assert edge_multiplicity(h, VertexPair(0, 1)) == 3
    assert edge_multiplicity(h, VertexPair(0, 2)) == 1
    assert edge_multiplicity(h, VertexPair(3, 4)) == 0


def test_classify_r3():
    fat, thin = classify_edges(Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)]), FatnessParameters(3, 5))
    assert fat == {(0, 1)}
    assert thin == {(0, 2), (1, 2), (0, 3), (1, 3)}


def test_classify_r4_threshold_k():
    h = Hypergraph(8, 4, [(0, 1, 2, 3), (0, 1, 4, 5), (0, 1, 6, 7)])
    fat, thin = classify_edges(h, FatnessParameters(4, 3))
    assert fat == {(0, 1)}
    assert len(thin) == len(h.pair_count) - 1
    fat, _ = classify_edges(h, FatnessParameters(4, 4))
    assert not fat


def test_k4_3_all_fat(k4_3):
    # each of the 6 pairs lies in exactly 2 triples
    assert all(
        sum(1 for e in k4_3.edges if a in e and b in e) == 2 for a, b in combinations(range(4), 2)
    )
    params = FatnessParameters(3, 5)
    fat, thin = classify_edges(k4_3, params)
    assert len(fat) == 6 and not thin
    assert fat_graph(k4_3, params) == Graph.complete(4)
    assert fat_hypergraph(k4_3, params) == k4_3


def test_fat_graph_and_hypergraph_small():
    h = Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)])
    params = FatnessParameters(3, 3)
    assert fat_graph(h, params).edges() == [(0, 1)]
    assert fat_hypergraph(h, params).num_edges == 0
    sparse = Hypergraph(6, 3, [(0, 1, 2), (3, 4, 5)])
    assert fat_graph(sparse, params).num_edges == 0
    assert fat_hypergraph(Hypergraph(5, 3), params).num_edges == 0


def test_mismatched_r_rejected(k4_3):
    with pytest.raises(ValueError):
        classify_edges(k4_3, FatnessParameters(4, 3))
    with pytest.raises(ValueError):
        decomposition_report(Hypergraph(4, 2, [(0, 1)]), 3)


def test_report_k4_3(k4_3):
    rep = decomposition_report(k4_3, 5)
    assert rep.berge_path_free
    assert rep.nonfat_hyperedge_count == 0 and rep.nonfat_bound == Fraction(8)
    assert rep.fat_hyperedge_count == 4 and rep.clique_count_F == 4
    assert rep.component_clique_counts == [4]
    assert (rep.nonfat_verdict, rep.fat_clique_verdict, rep.component_sum_verdict) == (PASS, PASS, PASS)
    assert rep.fat_edge_count + rep.thin_edge_count == rep.shadow_edge_count == 6


def test_report_two_triples():
    rep = decomposition_report(Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)]), 3)
    assert rep.berge_path_free
    assert rep.nonfat_hyperedge_count == 2 and rep.nonfat_bound == 4
    assert rep.fat_hyperedge_count == 0 and rep.clique_count_F == 0
    assert rep.nonfat_verdict == PASS and rep.fat_clique_verdict == PASS


def test_report_empty():
    rep = decomposition_report(Hypergraph(5, 3), 4)
    assert rep.shadow_edge_count == rep.fat_edge_count == rep.clique_count_F == 0
    assert rep.violations == []
    assert rep.disjoint_cycles_verdict == NOT_APPLICABLE  # isolated vertices: not connected


def test_report_marks_violated_hypothesis(k4_3):
    rep = decomposition_report(k4_3, 3)
    assert not rep.berge_path_free
    assert rep.nonfat_verdict == HYPOTHESIS_VIOLATED
    assert rep.disjoint_cycles_verdict == NOT_APPLICABLE


def test_report_json(k4_3):
    data = decomposition_report(k4_3, 5).to_json()
    assert data["nonfat_bound"] == "8"
    assert data["clique_count_F"] == 4


def test_long_cycle_length():
    assert [long_cycle_length(k) for k in (4, 5, 6, 7)] == [3, 3, 4, 4]


# graph cycle helpers used by the disjoint-cycle check


def _brute_cycle_sets(g: Graph, min_length: int) -> set[int]:
    from itertools import permutations

    out = set()
    for size in range(max(3, min_length), g.n + 1):
        for combo in combinations(range(g.n), size):
            first, rest = combo[0], combo[1:]
            for perm in permutations(rest):
                cyc = (first, *perm)
                if all(g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    out.add(sum(1 << v for v in combo))
                    break
    return out


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_cycle_sets_match_brute_force(g):
    assert cycle_vertex_sets(g, 3) == _brute_cycle_sets(g, 3)
    assert cycle_vertex_sets(g, 4) == _brute_cycle_sets(g, 4)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_disjoint_cycles_match_pairwise(g):
    for length in (3, 4):
        sets = _brute_cycle_sets(g, length)
        expected = any(not a & b for a, b in combinations(sets, 2))
        found = has_disjoint_long_cycles(g, length)
        assert (found is not None) == expected
        if found:
            assert not found[0] & found[1]


def test_disjoint_cycles_examples():
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert has_disjoint_long_cycles(two_triangles, 3) == (0b000111, 0b111000)
    assert has_disjoint_long_cycles(two_triangles, 4) is None
    assert circumference(two_triangles) == 3
    assert has_disjoint_long_cycles(Graph.complete(5), 3) is None
    assert has_disjoint_long_cycles(Graph.complete(6), 3) is not None


# properties over random hypergraphs


@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_n=9, r_values=(3, 4)))
def test_partition_and_clique_cover(h):
    for k in (2, 3, 4, 5):
        params = FatnessParameters(h.r, k)
        fat, thin = classify_edges(h, params)
        assert not fat & thin
        assert fat | thin == set(shadow_graph(h).edges())
        f = Graph.from_edges(h.n, fat)
        fat_h = fat_hypergraph(h, params)
        assert fat_h.num_edges <= count_cliques(f, h.r)
        # every fat hyperedge is an r-clique of the fat graph
        for e in fat_h.edges:
            assert all(f.has_edge(a, b) for a, b in combinations(e, 2))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_component_additivity(g):
    parts = connected_components(g)
    for s in (2, 3, 4):
        assert count_cliques(g, s) == sum(count_cliques(g.induced(c), s) for c in parts)


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_n=9, r_values=(3, 4), max_edges=25))
def test_fat_path_lifts(h):
    for k in (3, 4, 5):
        f = fat_graph(h, FatnessParameters(h.r, k))
        path = find_path(f, k)
        if not path:
            continue
        assert has_berge_path(h, k)
        w = expand_fat_path(h, list(zip(path, path[1:])), k)
        assert w.length == k
        assert independent_witness_check(h, w.vertices, w.hyperedges)


@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_n=9, r_values=(3, 4), max_edges=14))
def test_report_checks_hold_when_path_free(h):
    for k in (3, 4, 5):
        rep = decomposition_report(h, k)
        assert rep.fat_clique_verdict == PASS
        assert rep.component_sum_verdict == PASS
        if rep.berge_path_free:
            assert rep.nonfat_verdict == PASS
            if is_connected(h):
                assert rep.disjoint_cycles_verdict == PASS
        assert FAIL not in (rep.nonfat_verdict, rep.disjoint_cycles_verdict)


def test_report_on_random_dense_instances():
    rng = random.Random(3)
    pool = list(combinations(range(8), 3))
    for _ in range(40):
        h = Hypergraph(8, 3, rng.sample(pool, rng.randint(10, 40)))
        rep = decomposition_report(h, 4)
        assert rep.fat_hyperedge_count + rep.nonfat_hyperedge_count == h.num_edges
        assert rep.fat_hyperedge_count <= rep.clique_count_F
