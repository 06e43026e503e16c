import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

import networkx as nx

from ..coloring import Coloring, bad_colors, check_coloring, is_proper
from ..graph import (
    Edge,
    ForestComponent,
    Graph,
    canonical_spanning_forest,
    forest_path,
    normalize_edge,
)

logger = logging.getLogger(__name__)


class InjectionDomainError(ValueError):
    """單射 I 的前置條件不成立"""


@dataclass(frozen=True)
class DomainElem:
    """定義域元素 (h, f)：h 是 G 的邊，f 是正常著色"""

    h: Edge
    f: Coloring


@dataclass(frozen=True)
class ImageElem:
    """值域元素 (c, g)：c 是顏色，g 是非正常著色"""

    c: int
    g: Coloring


def _require_colors(lam: int):
    if lam < 2:
        raise InjectionDomainError(f"單射只在 λ >= 2 時有定義，收到 λ={lam}")


def recolor_component(tree: ForestComponent, path: Sequence[int], c: int, d: int) -> Dict[int, int]:
    """
    以 c、d 重新著色樹 K

    P 上的頂點全部得到 d，K 中不在 P 上的樹邊皆為雙色；
    從 P 向外做廣度優先交替，距離 P 為奇數的頂點得到 c，偶數得到 d。

    Args:
        tree: 樹 K
        path: K 中的路徑 P（頂點序列）
        c: 顏色 c
        d: 顏色 d（!= c）

    Returns:
        K 上每個頂點的新顏色
    """
    if c == d:
        raise InjectionDomainError(f"c 與 d 必須不同: {c}")
    if not path:
        raise InjectionDomainError("路徑 P 不可為空")
    outside = [x for x in path if x not in tree.vertices]
    if outside:
        raise InjectionDomainError(f"P not inside K: 頂點 {outside} 不在 K 中")
    for x, y in zip(path, path[1:]):
        if normalize_edge(x, y) not in tree.edges:
            raise InjectionDomainError(f"P not inside K: ({x}, {y}) 不是 K 的樹邊")

    coloring = {}
    for distance, layer in enumerate(nx.bfs_layers(tree.nx_tree, path)):
        for x in layer:
            coloring[x] = d if distance % 2 == 0 else c

    if len(coloring) != len(tree.vertices):
        raise InjectionDomainError("K 不連通，不是一棵樹")
    return coloring


def apply_injection(graph: Graph, h: Sequence[int], f: Sequence[int], lam: int) -> ImageElem:
    """
    計算 I((h, f)) = (c, g)

    Args:
        graph: 圖 G（e >= 1）
        h: 邊 {u, w}
        f: 正常著色
        lam: 顏色數（>= 2）

    Returns:
        ImageElem，其中 c = f(w) 是 P 上失去的顏色
    """
    _require_colors(lam)
    f = check_coloring(graph, f, lam)
    u, w = normalize_edge(*h)
    if not graph.has_edge(u, w):
        raise InjectionDomainError(f"h = {(u, w)} 不是 G 的邊")
    if not is_proper(graph, f):
        raise InjectionDomainError(f"f = {f} 不是正常著色")

    d, c = f[u - 1], f[w - 1]
    y_set = [x for x in graph.vertices if f[x - 1] in (c, d)]
    forest = canonical_spanning_forest(graph, y_set)
    tree = forest.component_containing(u)
    path = forest_path(forest, u, w)

    g = list(f)
    for x, color in recolor_component(tree, path, c, d).items():
        g[x - 1] = color
    return ImageElem(c=c, g=tuple(g))


def monochromatic_path_endpoints(edges: Iterable[Edge]) -> Optional[Tuple[int, int]]:
    """
    若邊集合構成一條路徑，回傳其兩端點 (u, w)，u < w；否則回傳 None

    判準：連通、恰有兩個度數 1 的頂點、其餘度數 2。
    """
    path_graph = nx.Graph(list(edges))
    if path_graph.number_of_edges() == 0:
        return None
    if not nx.is_tree(path_graph) or max(k for _, k in path_graph.degree) > 2:
        return None

    ends = sorted(x for x, k in path_graph.degree if k == 1)
    return ends[0], ends[1]


def invert_injection(graph: Graph, c: int, g: Sequence[int], lam: int) -> Optional[DomainElem]:
    """
    由 (c, g) 重建 (h, f)

    Args:
        graph: 圖 G
        c: 顏色
        g: 非正常著色
        lam: 顏色數（>= 2）

    Returns:
        DomainElem；(c, g) 不在 I 的像中時回傳 None
    """
    _require_colors(lam)
    g = check_coloring(graph, g, lam)
    if not 0 <= c < lam:
        raise InjectionDomainError(f"顏色 c={c} 超出 0..{lam - 1}")
    bad = bad_colors(graph, g)
    if not bad:
        raise InjectionDomainError(f"g = {g} 是正常著色，不在值域中")

    pair = bad | {c}
    if len(pair) != 2:
        return None

    y_set = [x for x in graph.vertices if g[x - 1] in pair]
    forest = canonical_spanning_forest(graph, y_set)
    mono_tree = [(u, w) for u, w in forest.tree_edges if g[u - 1] == g[w - 1]]

    tree_bad = {g[u - 1] for u, _ in mono_tree}
    if len(tree_bad) != 1:
        return None
    (d,) = tree_bad
    if d == c:
        return None

    ends = monochromatic_path_endpoints(mono_tree)
    if ends is None:
        return None
    u, w = ends
    if not graph.has_edge(u, w):
        return None

    # 在 K 上改成以 c、d 正常著色，且 u 保留顏色 d
    f = list(g)
    for x, color in recolor_component(forest.component_containing(u), [u], c, d).items():
        f[x - 1] = color
    f = tuple(f)

    if not is_proper(graph, f):
        return None
    candidate = DomainElem(h=(u, w), f=f)
    if apply_injection(graph, candidate.h, candidate.f, lam) != ImageElem(c=c, g=g):
        return None
    return candidate


def image_multiplicity(graph: Graph, g: Sequence[int], lam: int) -> int:
    """固定非正常著色 g 時，使 (c, g) 落在 I 像中的顏色 c 個數（不超過 λ-1）"""
    _require_colors(lam)
    g = check_coloring(graph, g, lam)
    if is_proper(graph, g):
        raise InjectionDomainError(f"g = {g} 是正常著色")
    return sum(1 for c in range(lam) if invert_injection(graph, c, g, lam) is not None)
