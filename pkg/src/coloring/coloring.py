import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from ..graph import Edge, Graph

logger = logging.getLogger(__name__)

# 第 i 個位置是頂點 i+1 的顏色；顏色內部以 0..λ-1 表示
Coloring = Tuple[int, ...]

DEFAULT_ENUMERATION_BUDGET = 10**7


class ColoringError(ValueError):
    """著色或顏色數不合法"""


class BudgetExceededError(RuntimeError):
    """列舉或多項式計算超出設定的預算"""


@dataclass(frozen=True)
class ColorSet:
    """顏色集合 L = {0, ..., λ-1}"""

    lam: int

    def __post_init__(self):
        if not isinstance(self.lam, int) or self.lam < 1:
            raise ColoringError(f"顏色數必須 >= 1: {self.lam!r}")

    @property
    def colors(self) -> range:
        return range(self.lam)


def check_coloring(graph: Graph, f: Sequence[int], lam: int = None) -> Coloring:
    """確認 f 定義在每個頂點上（且顏色 < λ），回傳 tuple 形式"""
    f = tuple(f)
    if len(f) != graph.v:
        raise ColoringError(f"著色長度 {len(f)} 與頂點數 {graph.v} 不符")
    if lam is not None and any(not 0 <= x < lam for x in f):
        raise ColoringError(f"著色 {f} 含有超出 0..{lam - 1} 的顏色")
    return f


def is_proper(graph: Graph, f: Sequence[int]) -> bool:
    return all(f[u - 1] != f[w - 1] for u, w in graph.edges)


def monochromatic_edges(graph: Graph, g: Sequence[int]) -> List[Edge]:
    """兩端同色的邊，依字典序排列"""
    return [(u, w) for u, w in graph.sorted_edges if g[u - 1] == g[w - 1]]


def bad_colors(graph: Graph, g: Sequence[int]) -> FrozenSet[int]:
    """出現在某條單色邊上的顏色集合 B；g 為正常著色時為空集合"""
    return frozenset(g[u - 1] for u, _ in monochromatic_edges(graph, g))


def enumerate_colorings(v: int, lam: int, prefix: Tuple[int, ...] = ()) -> Iterator[Coloring]:
    """
    依 (g(1), ..., g(v)) 的字典序列舉著色

    Args:
        v: 頂點數
        lam: 顏色數
        prefix: 固定前幾個頂點的顏色，只列舉此區塊

    Returns:
        著色的迭代器；prefix 為空時恰好 λ^v 個
    """
    ColorSet(lam)
    if v < 1:
        raise ColoringError(f"頂點數必須 >= 1: {v}")
    if len(prefix) > v or any(not 0 <= x < lam for x in prefix):
        raise ColoringError(f"前綴 {prefix} 不合法")

    for rest in itertools.product(range(lam), repeat=v - len(prefix)):
        yield tuple(prefix) + rest


def _check_budget(graph: Graph, lam: int, budget: int):
    if lam**graph.v > budget:
        raise BudgetExceededError(
            f"λ^v = {lam}^{graph.v} 超出列舉預算 {budget}，請改用色多項式"
        )


def count_proper_block(graph: Graph, lam: int, prefix: Tuple[int, ...]) -> int:
    """字典序區塊 prefix 內的正常著色數"""
    return sum(1 for f in enumerate_colorings(graph.v, lam, prefix) if is_proper(graph, f))


def count_proper_brute(graph: Graph, lam: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """
    暴力列舉計算正常 λ-著色數 |C^p|

    以頂點 1 的顏色把列舉切成 λ 個互不相交的區塊後加總。

    Args:
        graph: 圖 G
        lam: 顏色數（λ = 0 時結果為 0）
        budget: λ^v 的上限

    Returns:
        精確的正常著色數
    """
    if lam < 0:
        raise ColoringError(f"顏色數不可為負: {lam}")
    if lam == 0:
        return 0
    _check_budget(graph, lam, budget)

    count = sum(count_proper_block(graph, lam, (first,)) for first in range(lam))
    logger.debug(f"暴力計數 v={graph.v}, e={graph.e}, λ={lam}: {count}")
    return count
