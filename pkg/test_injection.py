#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
injection 模組測試 - 正向映射、重新著色、反向重建、像重數與窮舉驗證
"""

import itertools
import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# 添加項目根目錄到 Python 路徑
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

from src.graph import ForestComponent, all_labeled_trees, family, make_graph
from src.coloring import BudgetExceededError, enumerate_colorings, is_proper
from src.injection import (
    DomainElem,
    ImageElem,
    InjectionDomainError,
    InjectionVerifier,
    apply_injection,
    degenerate_note,
    image_multiplicity,
    invert_injection,
    monochromatic_path_endpoints,
    recolor_component,
    verify_theorem,
)

K2 = family("complete", 2)
K3 = family("complete", 3)
P3 = family("path", 3)
C4 = family("cycle", 4)


@st.composite
def small_graphs(draw, min_v=2, max_v=6):
    v = draw(st.integers(min_value=min_v, max_value=max_v))
    pairs = list(itertools.combinations(range(1, v + 1), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1))
    return make_graph(v, edges)


def test_apply_injection_examples():
    assert apply_injection(K2, (1, 2), (0, 1), 2) == ImageElem(c=1, g=(0, 0))
    assert apply_injection(P3, (1, 2), (0, 1, 0), 2) == ImageElem(c=1, g=(0, 0, 1))
    assert apply_injection(C4, (2, 3), (0, 1, 0, 1), 2) == ImageElem(c=0, g=(0, 1, 1, 0))


def test_apply_injection_orients_edge():
    assert apply_injection(K2, (2, 1), (0, 1), 2) == apply_injection(K2, (1, 2), (0, 1), 2)


def test_apply_injection_errors():
    with pytest.raises(InjectionDomainError):
        apply_injection(K2, (1, 2), (0, 0), 2)
    with pytest.raises(InjectionDomainError):
        apply_injection(P3, (1, 3), (0, 1, 0), 2)
    with pytest.raises(InjectionDomainError):
        apply_injection(K2, (1, 2), (0, 0), 1)


def test_recolor_component_examples():
    edge = ForestComponent(vertices=frozenset({1, 2}), edges=frozenset({(1, 2)}))
    assert recolor_component(edge, [1, 2], c=1, d=0) == {1: 0, 2: 0}

    path = ForestComponent(vertices=frozenset({1, 2, 3}), edges=frozenset({(1, 2), (2, 3)}))
    assert recolor_component(path, [1, 2], c=1, d=0) == {1: 0, 2: 0, 3: 1}

    with pytest.raises(InjectionDomainError, match="P not inside K"):
        recolor_component(path, [1, 3], c=1, d=0)
    with pytest.raises(InjectionDomainError, match="P not inside K"):
        recolor_component(path, [3, 4], c=1, d=0)
    with pytest.raises(InjectionDomainError):
        recolor_component(path, [1, 2], c=0, d=0)


def _tree_paths(tree):
    """樹中每對頂點 (含 u = w) 的唯一路徑"""
    adjacency = tree.adjacency
    for u in sorted(tree.vertices):
        parent = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adjacency[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        for w in sorted(tree.vertices):
            if w < u:
                continue
            path = [w]
            while path[-1] != u:
                path.append(parent[path[-1]])
            yield path[::-1]


def test_recolor_component_uniqueness_bruteforce():
    c, d = 1, 0
    for n in range(1, 6):
        for tree in all_labeled_trees(n):
            for path in _tree_paths(tree):
                path_edges = {tuple(sorted(pair)) for pair in zip(path, path[1:])}
                order = sorted(tree.vertices)
                satisfying = []
                for values in itertools.product((c, d), repeat=n):
                    coloring = dict(zip(order, values))
                    if any(coloring[x] != d for x in path):
                        continue
                    if all(coloring[a] != coloring[b] for a, b in tree.edges - path_edges):
                        satisfying.append(coloring)
                assert len(satisfying) == 1
                assert satisfying[0] == recolor_component(tree, path, c, d)


def test_invert_injection_examples():
    assert invert_injection(K2, 1, (0, 0), 2) == DomainElem(h=(1, 2), f=(0, 1))
    assert invert_injection(C4, 0, (0, 1, 1, 0), 2) == DomainElem(h=(2, 3), f=(0, 1, 0, 1))
    assert invert_injection(K2, 0, (0, 0), 2) is None


def test_invert_injection_rejects_proper_coloring():
    with pytest.raises(InjectionDomainError):
        invert_injection(K2, 0, (0, 1), 2)


def test_image_multiplicity_examples():
    assert image_multiplicity(K2, (0, 0), 2) == 1
    assert image_multiplicity(K3, (0, 0, 0), 2) == 0
    assert image_multiplicity(C4, (0, 1, 1, 0), 2) == 1
    with pytest.raises(InjectionDomainError):
        image_multiplicity(K2, (0, 1), 2)


def test_monochromatic_path_endpoints():
    assert monochromatic_path_endpoints([(2, 3)]) == (2, 3)
    assert monochromatic_path_endpoints([(1, 2), (2, 3), (3, 4)]) == (1, 4)
    assert monochromatic_path_endpoints([]) is None
    # 星形不是路徑
    assert monochromatic_path_endpoints([(1, 2), (1, 3), (1, 4)]) is None
    # 兩條不相連的邊
    assert monochromatic_path_endpoints([(1, 2), (3, 4)]) is None


@pytest.mark.parametrize("graph, lam, lhs, rhs", [
    (K2, 2, 2, 2),
    (K3, 3, 18, 42),
    (P3, 2, 4, 6),
    (C4, 2, 8, 14),
])
def test_verify_theorem_examples(graph, lam, lhs, rhs):
    report = verify_theorem(graph, lam)
    assert report.passed, report.counterexamples
    assert report.injective and report.round_trip
    assert report.inequality_lhs == lhs
    assert report.inequality_rhs == rhs
    assert report.domain_size == graph.e * report.proper_count
    assert report.image_size == report.domain_size
    assert report.max_image_multiplicity <= lam - 1
    assert report.bound_holds


def test_verify_theorem_tight_instance():
    report = verify_theorem(K2, 2)
    assert report.tight
    assert report.max_image_multiplicity == 1
    assert report.summary() == "injective, multiplicity <= 1, 2 <= 2 (tight)"


def test_verify_theorem_preconditions():
    with pytest.raises(InjectionDomainError):
        verify_theorem(make_graph(3, []), 2)
    with pytest.raises(InjectionDomainError):
        verify_theorem(K2, 1)
    with pytest.raises(BudgetExceededError):
        verify_theorem(family("path", 6), 3, budget=100)


def test_degenerate_notes():
    assert degenerate_note(make_graph(3, []), 2).startswith("e=0")
    assert degenerate_note(K3, 1).startswith("lambda=1")
    assert degenerate_note(K3, 2) is None


def test_verifier_class_uses_budget():
    verifier = InjectionVerifier(budget=10)
    with pytest.raises(BudgetExceededError):
        verifier.verify(P3, 3)
    assert InjectionVerifier().verify(P3, 2).passed


@settings(max_examples=25, deadline=None)
@given(small_graphs(min_v=5, max_v=6), st.sampled_from([2, 3]))
def test_round_trip_on_sampled_graphs(graph, lam):
    images = set()
    for f in enumerate_colorings(graph.v, lam):
        if not is_proper(graph, f):
            continue
        for h in graph.sorted_edges:
            y = apply_injection(graph, h, f, lam)
            assert not is_proper(graph, y.g)
            assert y not in images
            images.add(y)
            assert invert_injection(graph, y.c, y.g, lam) == DomainElem(h=h, f=f)


@settings(max_examples=40, deadline=None)
@given(small_graphs(min_v=2, max_v=5), st.sampled_from([2, 3]))
def test_inverse_then_apply_is_identity(graph, lam):
    for g in enumerate_colorings(graph.v, lam):
        if is_proper(graph, g):
            continue
        for c in range(lam):
            x = invert_injection(graph, c, g, lam)
            if x is not None:
                assert apply_injection(graph, x.h, x.f, lam) == ImageElem(c=c, g=g)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
