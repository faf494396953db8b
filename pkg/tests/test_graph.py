from __future__ import annotations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from babylon.graph import (
    BabylonGraph,
    ComponentSummary,
    ResourceGuardError,
    UnionFind,
    build,
    components,
    degree_histogram,
    diameter,
    find_scaling_path,
    isolated_vertices,
    leaves,
    main_component,
)
from babylon.triples import is_edge, neighbors_unbounded

from oracles import brute_components, brute_edges


def _component_sets(g: BabylonGraph) -> list[set[int]]:
    return [set(g.component_vertices(c.representative).tolist()) for c in components(g)]


def test_build_5():
    g = build(5)
    assert (g.n, g.num_edges) == (5, 1)
    assert sorted(map(sorted, _component_sets(g))) == [[1], [2], [3, 4], [5]]


def test_build_1000_counts(b1000):
    assert b1000.num_edges == 1034
    assert b1000.num_components == 439


def test_build_guards():
    with pytest.raises(ValueError):
        build(0)
    with pytest.raises(ResourceGuardError) as exc:
        build(101, ceiling=100)
    assert exc.value.guard == "build-ceiling"


@pytest.mark.parametrize("n", [30, 240, 777])
def test_components_match_brute_force(n):
    g = build(n)
    expected = sorted(map(sorted, brute_components(n, brute_edges(n))))
    assert sorted(map(sorted, _component_sets(g))) == expected


def test_component_labels_are_minimal_vertices(b2000):
    for rep in b2000.component_sizes:
        verts = b2000.component_vertices(rep)
        assert verts.min() == rep
        assert np.all(b2000.component_id[verts] == rep)


def test_adjacency_symmetric_sorted_loop_free(b2000):
    for v in range(1, b2000.n + 1):
        nb = b2000.neighbors(v).tolist()
        assert nb == sorted(set(nb))
        assert v not in nb
        assert all(v in b2000.neighbors(w).tolist() for w in nb)


@given(st.integers(min_value=1, max_value=3000))
def test_handshake_and_forest(n):
    g = build(n)
    assert int(g.degrees().sum()) == 2 * g.num_edges
    assert g.num_components + g.forest_edges == n


@given(st.integers(min_value=1, max_value=2000))
def test_monotone_edges(n):
    small = set(build(n).edges())
    assert small <= set(build(n + 1).edges())


@given(st.integers(min_value=4, max_value=5000))
def test_three_four_is_a_component(n):
    g = build(n)
    assert g.component_id[3] == g.component_id[4] == 3
    assert g.component_sizes[3] == 2


def test_adjacency_equals_unbounded_neighbourhood():
    n = 1500
    g = build(n)
    for x in range(1, n + 1):
        assert g.neighbors(x).tolist() == [y for y in neighbors_unbounded(x) if y <= n]


def test_main_component(b1000):
    summary, verts = main_component(b1000)
    assert (summary.size, summary.edge_count, summary.has_triangle) == (480, 952, True)
    assert len(verts) == 480
    assert main_component(build(5))[1] == [3, 4]
    summary, verts = main_component(build(2))
    assert verts == [1] and summary.representative == 1


def test_components_summary_consistency(b1000):
    comps = components(b1000)
    assert [c.representative for c in comps] == sorted(c.representative for c in comps)
    assert sum(c.size for c in comps) == 1000
    assert sum(c.edge_count for c in comps) == 1034
    assert all(c.size == 1 for c in comps if c.edge_count == 0)
    assert sum(c.has_triangle for c in comps) == 1


def test_diameter_small_cases():
    g = build(5)
    pair = next(c for c in components(g) if c.representative == 3)
    assert diameter(g, pair) == 1
    single = next(c for c in components(g) if c.representative == 1)
    assert diameter(g, single) == 0


@pytest.mark.parametrize("n", [300, 1000, 2500])
def test_diameter_matches_networkx(n):
    g = build(n)
    summary, verts = main_component(g)
    G = nx.Graph(g.edges()).subgraph(verts)
    assert diameter(g, summary) == nx.diameter(G)


def test_diameter_threads_do_not_change_result():
    g = build(3000)
    summary, _ = main_component(g)
    assert diameter(g, summary, workers=1, chunk=100) == diameter(g, summary, workers=4, chunk=37)


def test_diameter_guard(b1000):
    summary, _ = main_component(b1000)
    with pytest.raises(ResourceGuardError):
        diameter(b1000, summary, ceiling=100)


def test_isolated_vertices_small():
    assert isolated_vertices(build(2)) == [1, 2]
    expected = [v for v in range(1, 101) if not any(v in e for e in brute_edges(100))]
    got = isolated_vertices(build(100))
    assert got == expected
    # the finite graph cuts off neighbours above n, e.g. 17 - 144
    assert got[:3] == [1, 2, 17]
    assert neighbors_unbounded(17) == [144]


def test_only_one_and_two_isolated_in_unbounded_graph():
    g = build(50_000)
    assert [v for v in isolated_vertices(g) if not neighbors_unbounded(v)] == [1, 2]


def test_leaves():
    assert 3 in leaves(build(30))
    assert 5 in leaves(build(13))
    assert 7 in leaves(build(30))
    assert build(30).neighbors(7).tolist() == [24]


def test_degree_histogram(b1000):
    assert degree_histogram(build(5)) == {0: 3, 1: 2}
    assert degree_histogram(build(2)) == {0: 2}
    assert sum(d * c for d, c in degree_histogram(b1000).items()) == 2 * 1034


def test_scaling_paths():
    assert find_scaling_path(5, bound=100, multiple=6) == [5, 12, 16, 30]
    path = find_scaling_path(30, bound=500, multiple=6)
    assert path[0] == 30 and path[-1] == 180 and len(path) == 4
    assert all(is_edge(a, b) for a, b in zip(path, path[1:]))
    assert find_scaling_path(1) is None
    # without a fixed multiple the shortest path may reach another multiple first
    free = find_scaling_path(5, bound=100)
    assert free[-1] % 5 == 0 and free[-1] != 5 and len(free) <= 4


def test_published_scaling_paths_are_edge_paths():
    for path in ((5, 12, 16, 30), (30, 40, 96, 180)):
        assert all(is_edge(a, b) for a, b in zip(path, path[1:]))


def test_scaling_paths_concatenate():
    base = find_scaling_path(5, bound=100, multiple=6)
    walk = list(base)
    m = base[-1] // base[0]
    for _ in range(2):
        scale = walk[-1] // base[0]
        walk.extend(scale * x for x in base[1:])
    assert walk[-1] == 5 * m**3
    assert all(is_edge(a, b) for a, b in zip(walk, walk[1:]))


def test_union_find_min_root():
    uf = UnionFind(10)
    uf.union(7, 3)
    uf.union(9, 7)
    uf.union(5, 6)
    assert uf.find(9) == 3
    assert uf.labels()[6] == 5


def test_from_edges_validation():
    with pytest.raises(ValueError):
        BabylonGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        BabylonGraph.from_edges(3, [(1, 4)])
    g = BabylonGraph.from_edges(4, [(2, 1), (1, 2), (3, 4)])
    assert g.edges() == [(1, 2), (3, 4)]


def test_digest_is_stable():
    assert build(777).digest() == build(777).digest()
    assert build(777).digest() != build(778).digest()


def test_component_summary_type(b1000):
    assert isinstance(main_component(b1000)[0], ComponentSummary)
