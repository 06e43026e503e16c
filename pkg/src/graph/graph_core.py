import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

FAMILY_NAMES = ("path", "cycle", "complete", "random")

# 直接以頂點 1..n 建圖，不需要再重新標號
_FAMILY_BUILDERS = {
    "path": nx.path_graph,
    "cycle": nx.cycle_graph,
    "complete": nx.complete_graph,
}


class GraphError(ValueError):
    """圖結構錯誤的基底類別"""


class LoopEdgeError(GraphError):
    """邊的兩端為同一頂點（loop）"""


class DuplicateEdgeError(GraphError):
    """重複的邊"""


class VertexRangeError(GraphError):
    """頂點標號超出 1..v"""


class ForestPathError(GraphError):
    """森林路徑查詢失敗"""


class FamilyError(GraphError):
    """圖族參數不合法"""


def normalize_edge(u: int, w: int) -> Edge:
    return (u, w) if u < w else (w, u)


def _ordered_graph(vertices: Iterable[int], edges: Iterable[Edge]) -> nx.Graph:
    """頂點與邊都依標號遞增插入的 nx.Graph，鄰居的迭代順序因此也是遞增的"""
    g = nx.Graph()
    g.add_nodes_from(sorted(vertices))
    g.add_edges_from(sorted(edges))
    return g


@dataclass(frozen=True)
class Graph:
    """頂點為 1..v 的簡單標號圖"""

    v: int
    edges: FrozenSet[Edge]

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.v + 1)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def nx_graph(self) -> nx.Graph:
        return _ordered_graph(self.vertices, self.edges)

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        """每個頂點的鄰居，依標號遞增排列"""
        return {x: tuple(sorted(self.nx_graph.neighbors(x))) for x in self.vertices}

    def has_edge(self, u: int, w: int) -> bool:
        return normalize_edge(u, w) in self.edges


@dataclass(frozen=True)
class InducedSubgraph:
    """G 在頂點子集 X 上的誘導子圖，保留原始標號"""

    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]


@dataclass(frozen=True)
class ForestComponent:
    """森林中的一棵樹 K：頂點集合與樹邊"""

    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]

    @cached_property
    def nx_tree(self) -> nx.Graph:
        stray = sorted({x for edge in self.edges for x in edge} - self.vertices)
        if stray:
            raise GraphError(f"樹邊的端點 {stray} 不在頂點集合內")
        return _ordered_graph(self.vertices, self.edges)

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        return {x: tuple(sorted(self.nx_tree.neighbors(x))) for x in sorted(self.vertices)}


@dataclass(frozen=True)
class Forest:
    """
    誘導子圖 G_X 的標準生成森林 F_X

    parent 中的根以 None 標記；component_id 依各分量最小頂點的遞增順序編號。
    三個對照表都是唯讀的 MappingProxyType。
    """

    vertex_set: FrozenSet[int]
    tree_edges: FrozenSet[Edge]
    component_id: Mapping[int, int]
    parent: Mapping[int, Optional[int]]
    depth: Mapping[int, int]

    @cached_property
    def nx_forest(self) -> nx.Graph:
        return _ordered_graph(self.vertex_set, self.tree_edges)

    @property
    def component_count(self) -> int:
        return len(set(self.component_id.values()))

    def components(self) -> List[FrozenSet[int]]:
        groups: Dict[int, List[int]] = {}
        for x, idx in self.component_id.items():
            groups.setdefault(idx, []).append(x)
        return [frozenset(groups[idx]) for idx in sorted(groups)]

    def component(self, index: int) -> ForestComponent:
        """取出編號為 index 的樹 K"""
        vertices = frozenset(x for x, idx in self.component_id.items() if idx == index)
        if not vertices:
            raise ForestPathError(f"森林中沒有編號 {index} 的分量")
        edges = frozenset(h for h in self.tree_edges if h[0] in vertices)
        return ForestComponent(vertices=vertices, edges=edges)

    def component_containing(self, x: int) -> ForestComponent:
        if x not in self.component_id:
            raise ForestPathError(f"頂點 {x} 不在森林中")
        return self.component(self.component_id[x])


def make_graph(v: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    建立並正規化簡單圖

    Args:
        v: 頂點數（>= 1）
        edges: 邊的列表，每條邊為兩個頂點標號

    Returns:
        每條邊以 u < w 儲存的 Graph
    """
    if not isinstance(v, int) or v < 1:
        raise VertexRangeError(f"頂點數必須是正整數: {v!r}")

    normalized = set()
    for pair in edges:
        u, w = (int(x) for x in pair)
        if u == w:
            raise LoopEdgeError(f"loop: 邊 ({u}, {w}) 的兩端相同")
        if not (1 <= u <= v and 1 <= w <= v):
            raise VertexRangeError(f"邊 ({u}, {w}) 的頂點超出範圍 1..{v}")
        edge = normalize_edge(u, w)
        if edge in normalized:
            raise DuplicateEdgeError(f"重複的邊: {edge}")
        normalized.add(edge)

    return Graph(v=v, edges=frozenset(normalized))


def family(name: str, n: int, seed: Optional[int] = None, p: Optional[float] = None) -> Graph:
    """
    產生實驗用的圖族

    Args:
        name: path、cycle、complete 或 random
        n: 頂點數
        seed: random 使用的 64 位元種子
        p: random 每對頂點連邊的機率

    Returns:
        由 (name, n, seed, p) 唯一決定的圖

    random 以 numpy.random.default_rng(seed)（PCG64）依字典序對每對頂點抽一次
    random()，抽值 < p 時連邊。
    """
    if name not in FAMILY_NAMES:
        raise FamilyError(f"未知的圖族: {name}，可用: {', '.join(FAMILY_NAMES)}")
    if not isinstance(n, int) or n < 1:
        raise FamilyError(f"圖族大小必須 >= 1: {n!r}")

    if name == "cycle" and n < 3:
        raise FamilyError(f"cycle 需要 n >= 3，收到 {n}")
    if name in _FAMILY_BUILDERS:
        return make_graph(n, _FAMILY_BUILDERS[name](range(1, n + 1)).edges)

    if seed is None or p is None:
        raise FamilyError("random 圖族需要 seed 與 p")
    if not 0 <= p <= 1:
        raise FamilyError(f"機率 p 必須位於 [0, 1]: {p}")
    if not 0 <= seed < 2**64:
        raise FamilyError(f"seed 必須是 64 位元非負整數: {seed}")

    rng = np.random.default_rng(seed)
    edges = [pair for pair in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
    logger.debug(f"random 圖 n={n}, p={p}, seed={seed}: {len(edges)} 條邊")
    return make_graph(n, edges)


def _check_subset(graph: Graph, subset: Iterable[int]) -> FrozenSet[int]:
    subset = frozenset(subset)
    outside = sorted(x for x in subset if not 1 <= x <= graph.v)
    if outside:
        raise VertexRangeError(f"頂點 {outside} 不在 1..{graph.v} 內")
    return subset


def induced_subgraph(graph: Graph, subset: Iterable[int]) -> InducedSubgraph:
    """G 在 X 上的誘導子圖（X 可以是整個頂點集合）"""
    subset = _check_subset(graph, subset)
    edges = frozenset(normalize_edge(u, w) for u, w in graph.nx_graph.subgraph(subset).edges)
    return InducedSubgraph(vertices=subset, edges=edges)


def canonical_spanning_forest(graph: Graph, subset: Iterable[int]) -> Forest:
    """
    建立 G_X 的標準生成森林

    每個分量從最小標號頂點開始做深度優先搜尋，鄰居依標號遞增拜訪；
    分量依最小頂點遞增的順序發現。相同輸入必得相同森林。

    Args:
        graph: 原圖 G
        subset: 頂點子集 X

    Returns:
        Forest
    """
    subset = _check_subset(graph, subset)
    induced = _ordered_graph(subset, induced_subgraph(graph, subset).edges)

    components = sorted(nx.connected_components(induced), key=min)
    component_id = {x: index for index, members in enumerate(components) for x in members}
    parent: Dict[int, Optional[int]] = {x: None for x in induced}
    depth = {x: 0 for x in induced}
    tree_edges = set()

    # 不指定起點時 dfs_edges 依頂點順序取根，每個分量的根即其最小頂點
    for x, y in nx.dfs_edges(induced):
        parent[y] = x
        depth[y] = depth[x] + 1
        tree_edges.add(normalize_edge(x, y))

    return Forest(
        vertex_set=subset,
        tree_edges=frozenset(tree_edges),
        component_id=MappingProxyType(component_id),
        parent=MappingProxyType(parent),
        depth=MappingProxyType(depth),
    )


def forest_path(forest: Forest, u: int, w: int) -> List[int]:
    """
    沿樹邊從 u 走到 w 的唯一簡單路徑

    Returns:
        以 u 開頭、w 結尾的頂點序列
    """
    for x in (u, w):
        if x not in forest.component_id:
            raise ForestPathError(f"頂點 {x} 不在森林中")
    if forest.component_id[u] != forest.component_id[w]:
        raise ForestPathError(f"different components: {u} 與 {w} 不在同一分量")

    # 樹上兩點間只有一條簡單路徑，最短路徑就是它
    return nx.shortest_path(forest.nx_forest, u, w)


def all_labeled_graphs(v: int) -> Iterator[Graph]:
    """依邊位元遮罩列舉 v 個頂點上全部 2^C(v,2) 個標號圖"""
    pairs = list(itertools.combinations(range(1, v + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(v=v, edges=frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def all_labeled_trees(n: int) -> Iterator[ForestComponent]:
    """以 Prüfer 序列列舉頂點集合 1..n 上的全部 n^(n-2) 棵標號樹"""
    vertices = frozenset(range(1, n + 1))
    if n == 1:
        yield ForestComponent(vertices=vertices, edges=frozenset())
        return

    for sequence in itertools.product(range(n), repeat=n - 2):
        tree = nx.from_prufer_sequence(list(sequence))
        yield ForestComponent(
            vertices=vertices,
            edges=frozenset(normalize_edge(u + 1, w + 1) for u, w in tree.edges),
        )


def random_graph_corpus(count: int, v_min: int, v_max: int, p: float = 0.5, seed: int = 0) -> List[Graph]:
    """可重現的隨機圖語料，頂點數在 v_min..v_max 之間循環"""
    sizes = list(range(v_min, v_max + 1))
    return [family("random", sizes[i % len(sizes)], seed=seed + i, p=p) for i in range(count)]
