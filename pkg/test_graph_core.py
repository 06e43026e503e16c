#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
graph 模組測試 - 建圖、圖族、誘導子圖、標準生成森林與樹上路徑
"""

import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# 添加項目根目錄到 Python 路徑
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

from src.graph import (
    DuplicateEdgeError,
    EdgeListParseError,
    FamilyError,
    ForestPathError,
    LoopEdgeError,
    VertexRangeError,
    all_labeled_graphs,
    all_labeled_trees,
    canonical_spanning_forest,
    family,
    forest_path,
    format_edge_list,
    induced_subgraph,
    make_graph,
    parse_edge_list,
)

C4 = make_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@st.composite
def graph_and_subset(draw, max_v=6):
    v = draw(st.integers(min_value=1, max_value=max_v))
    pairs = [(u, w) for u in range(1, v + 1) for w in range(u + 1, v + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    subset = draw(st.sets(st.integers(min_value=1, max_value=v)))
    return make_graph(v, edges), subset


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def test_make_graph_normalizes_edges():
    graph = make_graph(3, [(2, 1), (3, 2)])
    assert graph.edges == frozenset({(1, 2), (2, 3)})
    assert graph.e == 2
    assert make_graph(3, []).e == 0


def test_make_graph_rejects_invalid_edges():
    with pytest.raises(LoopEdgeError, match="loop"):
        make_graph(3, [(1, 1)])
    with pytest.raises(DuplicateEdgeError):
        make_graph(3, [(1, 2), (2, 1)])
    with pytest.raises(VertexRangeError):
        make_graph(3, [(1, 4)])
    with pytest.raises(VertexRangeError):
        make_graph(0, [])


def test_families():
    assert family("path", 3).edges == frozenset({(1, 2), (2, 3)})
    assert family("complete", 3).e == 3
    assert family("cycle", 4) == C4
    assert family("random", 5, seed=1, p=0).e == 0
    assert family("random", 5, seed=1, p=1) == family("complete", 5)
    assert family("random", 6, seed=42, p=0.5) == family("random", 6, seed=42, p=0.5)
    assert family("path", 1).e == 0
    assert family("complete", 1).e == 0


def test_random_family_draws_are_pinned():
    # default_rng(11) 前十個 random() 抽值決定的邊
    assert family("random", 4, seed=11, p=0.5).edges == frozenset({(1, 2), (1, 3), (2, 3), (2, 4)})
    assert family("random", 5, seed=11, p=0.5).edges == frozenset(
        {(1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 4)}
    )


def test_family_errors():
    with pytest.raises(FamilyError):
        family("cycle", 2)
    with pytest.raises(FamilyError):
        family("random", 4, seed=1, p=1.5)
    with pytest.raises(FamilyError):
        family("random", 4)
    with pytest.raises(FamilyError):
        family("star", 4)


def test_induced_subgraph():
    k3 = family("complete", 3)
    assert induced_subgraph(k3, {1, 2}).edges == frozenset({(1, 2)})
    assert induced_subgraph(k3, set()).edges == frozenset()
    assert induced_subgraph(C4, {1, 2, 3}).edges == frozenset({(1, 2), (2, 3)})
    with pytest.raises(VertexRangeError):
        induced_subgraph(k3, {4})


def test_canonical_forest_of_c4():
    forest = canonical_spanning_forest(C4, {1, 2, 3, 4})
    assert forest.tree_edges == frozenset({(1, 2), (2, 3), (3, 4)})
    assert forest.parent == {1: None, 2: 1, 3: 2, 4: 3}
    assert forest.component_count == 1


def test_forest_maps_are_read_only():
    forest = canonical_spanning_forest(C4, {1, 2, 3, 4})
    assert forest.depth == {1: 0, 2: 1, 3: 2, 4: 3}
    with pytest.raises(TypeError):
        forest.parent[4] = 1
    with pytest.raises(TypeError):
        forest.component_id[1] = 5


def test_canonical_forest_trivial_cases():
    empty = canonical_spanning_forest(C4, set())
    assert empty.tree_edges == frozenset()
    assert empty.component_count == 0

    forest = canonical_spanning_forest(make_graph(3, []), {1, 2, 3})
    assert forest.tree_edges == frozenset()
    assert forest.component_id == {1: 0, 2: 1, 3: 2}


def test_components_discovered_by_smallest_vertex():
    graph = make_graph(5, [(2, 5), (1, 3)])
    forest = canonical_spanning_forest(graph, {1, 2, 3, 4, 5})
    assert forest.components() == [frozenset({1, 3}), frozenset({2, 5}), frozenset({4})]
    assert forest.component(1).edges == frozenset({(2, 5)})


def test_forest_path():
    forest = canonical_spanning_forest(C4, {1, 2, 3, 4})
    assert forest_path(forest, 1, 2) == [1, 2]
    assert forest_path(forest, 1, 4) == [1, 2, 3, 4]
    assert forest_path(forest, 4, 2) == [4, 3, 2]
    assert forest_path(forest, 3, 3) == [3]

    split = canonical_spanning_forest(make_graph(2, []), {1, 2})
    with pytest.raises(ForestPathError, match="different components"):
        forest_path(split, 1, 2)
    with pytest.raises(ForestPathError):
        forest_path(canonical_spanning_forest(C4, {1, 2}), 1, 3)


def test_forest_path_branching_tree():
    # 星形加尾巴：1 連 2、3、4，4 連 5
    graph = make_graph(5, [(1, 2), (1, 3), (1, 4), (4, 5)])
    forest = canonical_spanning_forest(graph, range(1, 6))
    assert forest_path(forest, 2, 5) == [2, 1, 4, 5]
    assert forest_path(forest, 3, 2) == [3, 1, 2]


@pytest.mark.parametrize("v", [1, 2, 3, 4, 5])
def test_forest_structure_exhaustive(v):
    for graph in all_labeled_graphs(v):
        for mask in range(1 << v):
            subset = {x for x in range(1, v + 1) if mask >> (x - 1) & 1}
            forest = canonical_spanning_forest(graph, subset)
            induced = induced_subgraph(graph, subset)
            assert forest.tree_edges <= induced.edges

            # 以 union-find 檢查無環
            parent = {x: x for x in subset}
            for u, w in forest.tree_edges:
                ru, rw = _find(parent, u), _find(parent, w)
                assert ru != rw
                parent[ru] = rw

            for component in forest.components():
                edges = [h for h in forest.tree_edges if h[0] in component]
                assert len(edges) == len(component) - 1

            # 同分量 ⇔ 在 G_X 中連通
            connected = {x: x for x in subset}
            for u, w in induced.edges:
                connected[_find(connected, u)] = _find(connected, w)
            for a in subset:
                for b in subset:
                    same = _find(connected, a) == _find(connected, b)
                    assert same == (forest.component_id[a] == forest.component_id[b])


@settings(max_examples=100, deadline=None)
@given(graph_and_subset())
def test_forest_is_deterministic(case):
    graph, subset = case
    first = canonical_spanning_forest(graph, subset)
    second = canonical_spanning_forest(graph, sorted(subset, reverse=True))
    assert first == second


@settings(max_examples=100, deadline=None)
@given(graph_and_subset(), st.data())
def test_forest_path_reversal(case, data):
    graph, subset = case
    if not subset:
        return
    forest = canonical_spanning_forest(graph, subset)
    u = data.draw(st.sampled_from(sorted(subset)))
    component = forest.components()[forest.component_id[u]]
    w = data.draw(st.sampled_from(sorted(component)))

    path = forest_path(forest, u, w)
    assert path[0] == u and path[-1] == w
    assert forest_path(forest, w, u) == list(reversed(path))
    assert all((min(a, b), max(a, b)) in forest.tree_edges for a, b in zip(path, path[1:]))


def test_all_labeled_graphs_and_trees_counts():
    assert sum(1 for _ in all_labeled_graphs(4)) == 64
    assert [sum(1 for _ in all_labeled_trees(n)) for n in range(1, 6)] == [1, 1, 3, 16, 125]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_labeled_trees_are_distinct_spanning_trees(n):
    trees = list(all_labeled_trees(n))
    assert len({tree.edges for tree in trees}) == len(trees)
    for tree in trees:
        assert tree.vertices == frozenset(range(1, n + 1))
        assert all(u < w for u, w in tree.edges)
        graph = make_graph(n, tree.edges)
        assert canonical_spanning_forest(graph, tree.vertices).tree_edges == tree.edges


def test_parse_edge_list():
    graph = parse_edge_list("# C4\n4 4\n1 2\n2 3\n\n3 4\n1 4\n")
    assert graph == C4
    assert parse_edge_list(format_edge_list(C4)) == C4
    assert parse_edge_list("3 0\n").e == 0


@pytest.mark.parametrize("text, line_no", [
    ("3 2\n1 2\n1 2\n", 3),
    ("3 1\n1 1\n", 2),
    ("3 1\n1 4\n", 2),
    ("3 1\n2 1\n", 2),
    ("3 1\n1 x\n", 2),
    ("3 1\n1 2 3\n", 2),
])
def test_parse_edge_list_errors_name_line(text, line_no):
    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list(text)
    assert info.value.line_no == line_no


def test_parse_edge_list_count_mismatch():
    with pytest.raises(EdgeListParseError, match="2") as info:
        parse_edge_list("3 2\n1 2\n")
    assert info.value.line_no == 1

    # 標頭前的註解與空行也算行號
    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list("# K2\n\n2 2\n1 2\n", source="k2.txt")
    assert info.value.line_no == 3
    assert str(info.value).startswith("k2.txt:3:")
    with pytest.raises(EdgeListParseError):
        parse_edge_list("# only a comment\n")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
