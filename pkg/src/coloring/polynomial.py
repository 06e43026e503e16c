import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Optional, Tuple

from ..graph import Edge, Graph
from .coloring import (
    DEFAULT_ENUMERATION_BUDGET,
    BudgetExceededError,
    ColoringError,
    count_proper_brute,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_POLYNOMIAL_VERTICES = 12

COUNT_METHODS = ("brute", "poly", "both")

# 刪除收縮的 minor 快取上限（LRU）
MINOR_CACHE_SIZE = 1 << 16

# 原方法超出預算時依序嘗試的替代方法
_FALLBACKS = {
    "brute": ("poly",),
    "poly": ("brute",),
    "both": ("poly", "brute"),
}

_METHOD_NAMES = {"brute": "暴力列舉", "poly": "色多項式"}


@dataclass(frozen=True)
class ChromaticPolynomial:
    """色多項式，coefficients[k] 為 λ^k 的係數"""

    coefficients: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coefficients[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                power = "λ" if k == 1 else f"λ^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _subtract(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    size = max(len(a), len(b))
    a = a + (0,) * (size - len(a))
    b = b + (0,) * (size - len(b))
    result = [x - y for x, y in zip(a, b)]
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return tuple(result)


def _normalize_minor(vertices: FrozenSet[int], edges: FrozenSet[Edge]) -> Tuple[int, Tuple[Edge, ...]]:
    """把 minor 重新標號為 0..k-1（保持順序），作為快取鍵"""
    relabel = {x: i for i, x in enumerate(sorted(vertices))}
    return len(vertices), tuple(sorted((relabel[u], relabel[w]) for u, w in edges))


@lru_cache(maxsize=MINOR_CACHE_SIZE)
def _chromatic_coefficients(k: int, edges: Tuple[Edge, ...]) -> Tuple[int, ...]:
    if not edges:
        return (0,) * k + (1,)

    # 在字典序最小的邊 h = (a, b) 上做刪除與收縮
    a, b = edges[0]
    rest = frozenset(edges[1:])
    vertices = frozenset(range(k))

    deleted = _normalize_minor(vertices, rest)

    contracted_edges = set()
    for u, w in rest:
        u = a if u == b else u
        w = a if w == b else w
        contracted_edges.add((u, w) if u < w else (w, u))
    contracted = _normalize_minor(vertices - {b}, frozenset(contracted_edges))

    return _subtract(_chromatic_coefficients(*deleted), _chromatic_coefficients(*contracted))


def chromatic_polynomial(graph: Graph, max_vertices: int = DEFAULT_MAX_POLYNOMIAL_VERTICES) -> ChromaticPolynomial:
    """
    以刪除收縮 P(G) = P(G-h) - P(G/h) 計算色多項式

    Args:
        graph: 圖 G
        max_vertices: 可接受的最大頂點數

    Returns:
        ChromaticPolynomial（次數為 v，首項係數為 1）
    """
    if graph.v > max_vertices:
        raise BudgetExceededError(f"v = {graph.v} 超過色多項式的頂點上限 {max_vertices}")
    key = _normalize_minor(frozenset(graph.vertices), graph.edges)
    return ChromaticPolynomial(coefficients=_chromatic_coefficients(*key))


def evaluate_polynomial(polynomial: ChromaticPolynomial, lam: int) -> int:
    """Horner 法精確求值"""
    if lam < 0:
        raise ColoringError(f"λ 不可為負: {lam}")
    value = 0
    for a in reversed(polynomial.coefficients):
        value = value * lam + a
    return value


@dataclass(frozen=True)
class CountResult:
    count: int
    method: str
    methods_agree: Optional[bool] = None
    brute_count: Optional[int] = None
    poly_count: Optional[int] = None


@dataclass
class ProperColoringCounter:
    """
    正常著色計數器

    brute 與 poly 兩個互為對照的計數方法；both 會同時計算並檢查一致性。
    """

    budget: int = DEFAULT_ENUMERATION_BUDGET
    max_polynomial_vertices: int = DEFAULT_MAX_POLYNOMIAL_VERTICES
    _polynomials: Dict[Graph, ChromaticPolynomial] = field(default_factory=dict, repr=False)

    def polynomial(self, graph: Graph) -> ChromaticPolynomial:
        if graph not in self._polynomials:
            self._polynomials[graph] = chromatic_polynomial(graph, self.max_polynomial_vertices)
        return self._polynomials[graph]

    def count(self, graph: Graph, lam: int, method: str = "both") -> CountResult:
        """
        計算正常 λ-著色數

        Args:
            graph: 圖 G
            lam: 顏色數
            method: brute、poly 或 both

        Returns:
            CountResult；both 時 count 取色多項式的值，methods_agree 表示兩者是否一致
        """
        if method not in COUNT_METHODS:
            raise ColoringError(f"未知的計數方法: {method}")

        if method == "brute":
            return CountResult(count=count_proper_brute(graph, lam, self.budget), method="brute")
        if method == "poly":
            return CountResult(count=evaluate_polynomial(self.polynomial(graph), lam), method="poly")

        brute = count_proper_brute(graph, lam, self.budget)
        poly = evaluate_polynomial(self.polynomial(graph), lam)
        agree = brute == poly
        if not agree:
            logger.error(f"計數不一致: v={graph.v}, e={graph.e}, λ={lam}, 暴力={brute}, 多項式={poly}")
        return CountResult(count=poly, method="both", methods_agree=agree, brute_count=brute, poly_count=poly)

    def count_or_none(self, graph: Graph, lam: int, method: str = "both") -> Optional[CountResult]:
        """
        計數；原方法超出預算時改用仍在預算內的另一個方法

        Args:
            graph: 圖 G
            lam: 顏色數
            method: brute、poly 或 both

        Returns:
            CountResult（method 為實際使用的方法）；兩個方法都超出預算時回傳 None
        """
        try:
            return self.count(graph, lam, method)
        except BudgetExceededError as e:
            reason = e

        for fallback in _FALLBACKS.get(method, ()):
            try:
                result = self.count(graph, lam, fallback)
            except BudgetExceededError as e:
                logger.debug(f"{_METHOD_NAMES[fallback]}同樣超出預算: {e}")
                continue
            logger.warning(f"{reason}，改用{_METHOD_NAMES[fallback]}")
            return result

        logger.warning(f"無法計數: {reason}")
        return None
