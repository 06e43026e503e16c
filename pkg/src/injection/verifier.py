import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set

from tqdm import tqdm

from ..coloring import (
    DEFAULT_ENUMERATION_BUDGET,
    BudgetExceededError,
    bad_colors,
    enumerate_colorings,
    is_proper,
)
from ..graph import Graph, canonical_spanning_forest, forest_path
from .injection import (
    DomainElem,
    ImageElem,
    InjectionDomainError,
    apply_injection,
    invert_injection,
)

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 20


@dataclass(frozen=True)
class Counterexample:
    """違反某個性質的見證"""

    prop: str
    witness: str
    message: str

    def __str__(self) -> str:
        return f"[{self.prop}] {self.witness}: {self.message}"


@dataclass
class VerificationReport:
    """單射驗證報告；inequality_lhs = e·|C^p|，inequality_rhs = (λ-1)(λ^v - |C^p|)"""

    v: int
    e: int
    lam: int
    proper_count: int
    domain_size: int
    image_size: int
    injective: bool
    round_trip: bool
    max_image_multiplicity: int
    inequality_lhs: int
    inequality_rhs: int
    bound_holds: bool
    counterexamples: List[Counterexample] = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    @property
    def tight(self) -> bool:
        return self.inequality_lhs == self.inequality_rhs

    def summary(self) -> str:
        if not self.passed:
            return f"{self.failure_count} failure(s); first: {self.counterexamples[0]}"
        relation = "<=" if self.bound_holds else ">"
        text = (
            f"{'injective' if self.injective else 'not injective'}, "
            f"multiplicity <= {self.max_image_multiplicity}, "
            f"{self.inequality_lhs} {relation} {self.inequality_rhs}"
        )
        return text + " (tight)" if self.tight else text


def degenerate_note(graph: Graph, lam: int) -> Optional[str]:
    """e = 0 或 λ = 1 時單射無定義，回傳說明；否則回傳 None"""
    if graph.e == 0 and lam == 1:
        return "e=0 and lambda=1: bound reads 0/0, interpreted as 1; inequality holds"
    if graph.e == 0:
        return "e=0: every coloring is proper and the bound equals lambda^v; inequality holds"
    if lam < 2:
        return "lambda=1: no proper coloring exists when e>=1; inequality holds"
    return None


class _Recorder:
    def __init__(self, limit: int):
        self.limit = limit
        self.items: List[Counterexample] = []
        self.total = 0

    def add(self, prop: str, witness, message: str):
        self.total += 1
        if len(self.items) < self.limit:
            item = Counterexample(prop=prop, witness=str(witness), message=message)
            self.items.append(item)
            logger.error(f"反例: {item}")


def verify_theorem(
    graph: Graph,
    lam: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    show_progress: bool = False,
    max_counterexamples: int = MAX_COUNTEREXAMPLES,
) -> VerificationReport:
    """
    窮舉整個定義域 E × C^p 驗證單射 I 與計數不等式

    檢查項目：
    1. 每個 I(x) 落在 L × (C \\ C^p)，且壞顏色結構符合構造
    2. 單射性
    3. invert(I(x)) = x；能被還原的 (c, g) 恰好構成 I 的像
    4. 每個非正常 g 的像重數 <= λ-1，|B| = 2 時 <= 1
    5. e·|C^p| <= (λ-1)(λ^v - |C^p|)

    Args:
        graph: 圖 G（e >= 1）
        lam: 顏色數（>= 2）
        budget: λ^v 的上限
        show_progress: 是否顯示 tqdm 進度條
        max_counterexamples: 報告中最多保留的反例數

    Returns:
        VerificationReport
    """
    if lam < 2 or graph.e < 1:
        raise InjectionDomainError(f"驗證需要 λ >= 2 且 e >= 1，收到 λ={lam}, e={graph.e}")
    if lam**graph.v > budget:
        raise BudgetExceededError(f"λ^v = {lam}^{graph.v} 超出列舉預算 {budget}")

    proper, improper = [], []
    for f in enumerate_colorings(graph.v, lam):
        (proper if is_proper(graph, f) else improper).append(f)
    improper_set = set(improper)

    recorder = _Recorder(max_counterexamples)
    images: Dict[ImageElem, DomainElem] = {}
    injective = True
    round_trip = True

    with tqdm(total=graph.e * len(proper), desc="verify", disable=not show_progress) as bar:
        for h in graph.sorted_edges:
            for f in proper:
                bar.update(1)
                x = DomainElem(h=h, f=f)
                try:
                    y = apply_injection(graph, h, f, lam)
                except InjectionDomainError as err:
                    recorder.add("totality", x, str(err))
                    continue

                if not 0 <= y.c < lam or y.g not in improper_set:
                    recorder.add("codomain", (x, y), "I(x) 不在 L × (C \\ C^p) 中")
                _check_image_structure(graph, x, y, recorder)

                if y in images:
                    injective = False
                    recorder.add("injectivity", (images[y], x, y), "兩個定義域元素有相同的像")
                else:
                    images[y] = x

                back = invert_injection(graph, y.c, y.g, lam)
                if back != x:
                    round_trip = False
                    recorder.add("round-trip", (x, y), f"invert(I(x)) = {back}")

    reconstructible: Set[ImageElem] = set()
    max_multiplicity = 0
    for g in improper:
        multiplicity = 0
        for c in range(lam):
            if invert_injection(graph, c, g, lam) is not None:
                multiplicity += 1
                reconstructible.add(ImageElem(c=c, g=g))
        max_multiplicity = max(max_multiplicity, multiplicity)
        if multiplicity > lam - 1:
            recorder.add("multiplicity", g, f"像重數 {multiplicity} > λ-1 = {lam - 1}")
        if len(bad_colors(graph, g)) == 2 and multiplicity > 1:
            recorder.add("multiplicity-two-bad", g, f"|B| = 2 但像重數為 {multiplicity}")

    if reconstructible != set(images):
        round_trip = False
        extra = sorted(reconstructible - set(images), key=lambda y: (y.g, y.c))
        missing = sorted(set(images) - reconstructible, key=lambda y: (y.g, y.c))
        witness = extra[0] if extra else missing[0]
        recorder.add("reverse-round-trip", witness, "可還原的 (c, g) 與 I 的像不一致")

    proper_count = len(proper)
    lhs = graph.e * proper_count
    rhs = (lam - 1) * (lam**graph.v - proper_count)
    if lhs > rhs:
        recorder.add("inequality", (graph.e, proper_count), f"{lhs} > {rhs}")

    report = VerificationReport(
        v=graph.v,
        e=graph.e,
        lam=lam,
        proper_count=proper_count,
        domain_size=lhs,
        image_size=len(images),
        injective=injective,
        round_trip=round_trip,
        max_image_multiplicity=max_multiplicity,
        inequality_lhs=lhs,
        inequality_rhs=rhs,
        bound_holds=lhs <= rhs,
        counterexamples=recorder.items,
        failure_count=recorder.total,
    )
    logger.info(f"驗證完成 v={graph.v}, e={graph.e}, λ={lam}: {report.summary()}")
    return report


def _check_image_structure(graph: Graph, x: DomainElem, y: ImageElem, recorder: _Recorder):
    """像的壞顏色結構：|B| ∈ {1, 2}、d ∈ B、c 單色邊不在 E(F_Y) 中、P 上不再有 c"""
    u, w = x.h
    d = x.f[u - 1]
    bad = bad_colors(graph, y.g)
    if len(bad) not in (1, 2) or d not in bad:
        recorder.add("bad-colors", (x, y), f"B = {sorted(bad)}, d = {d}")

    y_set = [z for z in graph.vertices if x.f[z - 1] in (y.c, d)]
    forest = canonical_spanning_forest(graph, y_set)
    if any(y.g[a - 1] == y.g[b - 1] == y.c for a, b in forest.tree_edges):
        recorder.add("tree-edges", (x, y), "c 單色邊出現在 E(F_Y) 中")
    if any(y.g[z - 1] == y.c for z in forest_path(forest, u, w)):
        recorder.add("lost-color", (x, y), "P 上仍有顏色 c")


class InjectionVerifier:
    """單射驗證器，保存預算與進度條設定"""

    def __init__(self, budget: int = DEFAULT_ENUMERATION_BUDGET, show_progress: bool = False):
        self.budget = budget
        self.show_progress = show_progress

    def verify(self, graph: Graph, lam: int) -> VerificationReport:
        logger.info(f"開始驗證單射: v={graph.v}, e={graph.e}, λ={lam}")
        return verify_theorem(graph, lam, budget=self.budget, show_progress=self.show_progress)
