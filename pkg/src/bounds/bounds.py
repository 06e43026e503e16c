import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple

from ..graph import Graph

logger = logging.getLogger(__name__)


class BoundsError(ValueError):
    """上界參數不合法"""


def _check_params(v: int, e: int, lam: int):
    if v < 1:
        raise BoundsError(f"頂點數必須 >= 1: {v}")
    if e < 0:
        raise BoundsError(f"邊數不可為負: {e}")
    if lam < 1:
        raise BoundsError(f"顏色數必須 >= 1: {lam}")


def liu_murty_bound(v: int, e: int, lam: int) -> Optional[Fraction]:
    """
    Liu–Murty 上界 λ^v·(λ-1)/e

    e = 0 且 λ = 1 時依 0/0 = 1 的約定得到 1；e = 0 且 λ >= 2 時不適用，回傳 None。
    """
    _check_params(v, e, lam)
    if e == 0:
        return Fraction(1) if lam == 1 else None
    return Fraction(lam**v * (lam - 1), e)


def klazar_factor(e: int, lam: int) -> Fraction:
    """(λ-1)/(e+λ-1)，λ = 1 且 e = 0 時為 1"""
    if e + lam - 1 == 0:
        return Fraction(1)
    return Fraction(lam - 1, e + lam - 1)


def klazar_bound(v: int, e: int, lam: int) -> Fraction:
    """
    上界 λ^v·(λ-1)/(e+λ-1)

    Args:
        v: 頂點數
        e: 邊數
        lam: 顏色數

    Returns:
        精確有理數；e = 0 時為 λ^v
    """
    _check_params(v, e, lam)
    return lam**v * klazar_factor(e, lam)


def lazebnik_exponent(e: int) -> int:
    """滿足 m(m+1)/2 >= e 的最小非負整數 m，等於 ⌈√(2e+1/4) - 1/2⌉"""
    if e < 0:
        raise BoundsError(f"邊數不可為負: {e}")
    m = (isqrt(8 * e + 1) - 1) // 2
    if m * (m + 1) < 2 * e:
        m += 1
    return m


@dataclass(frozen=True)
class LazebnikBound:
    terms: Tuple[Fraction, Fraction, Fraction]
    A: Fraction
    bound: Fraction


def lazebnik_bound(v: int, e: int, lam: int) -> LazebnikBound:
    """
    Lazebnik 的三項最小值 A 與上界 λ^v·A

    Args:
        v: 頂點數
        e: 邊數
        lam: 顏色數（λ = 1 時第一、二項照字面計算）

    Returns:
        LazebnikBound
    """
    _check_params(v, e, lam)
    m = lazebnik_exponent(e)
    term1 = Fraction(lam - 1, lam) ** m
    term2 = 1 - Fraction(e, lam) + Fraction(e * (e - 1) // 2, lam**2)
    term3 = klazar_factor(e, lam)
    A = min(term1, term2, term3)
    return LazebnikBound(terms=(term1, term2, term3), A=A, bound=lam**v * A)


@dataclass(frozen=True)
class BoundReport:
    """三個上界的比較結果；liu_murty 為 None 表示不適用"""

    v: int
    e: int
    lam: int
    liu_murty: Optional[Fraction]
    klazar: Fraction
    lazebnik_terms: Tuple[Fraction, Fraction, Fraction]
    lazebnik_A: Fraction
    lazebnik: Fraction
    proper_count: Optional[int] = None
    all_bounds_hold: Optional[bool] = None


def compare_bounds(graph: Graph, lam: int, count: Optional[int] = None) -> BoundReport:
    """
    計算三個上界，若提供正常著色數則檢查是否都成立

    Args:
        graph: 圖 G
        lam: 顏色數
        count: 由 coloring 模組算出的正常著色數（可選）

    Returns:
        BoundReport
    """
    liu = liu_murty_bound(graph.v, graph.e, lam)
    klazar = klazar_bound(graph.v, graph.e, lam)
    lazebnik = lazebnik_bound(graph.v, graph.e, lam)

    holds = None
    if count is not None:
        holds = count <= klazar and count <= lazebnik.bound and (liu is None or count <= liu)
        if not holds:
            logger.error(f"上界不成立: v={graph.v}, e={graph.e}, λ={lam}, count={count}")

    return BoundReport(
        v=graph.v,
        e=graph.e,
        lam=lam,
        liu_murty=liu,
        klazar=klazar,
        lazebnik_terms=lazebnik.terms,
        lazebnik_A=lazebnik.A,
        lazebnik=lazebnik.bound,
        proper_count=count,
        all_bounds_hold=holds,
    )


def bound_ratio(count: Optional[int], bound: Optional[Fraction]) -> Optional[Fraction]:
    """count/bound；任一缺少或上界為 0 時回傳 None"""
    if count is None or bound is None or bound == 0:
        return None
    return Fraction(count) / bound
