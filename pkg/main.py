#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
正常著色上界驗證系統
主程式入口
"""

import os
import sys
import json
import argparse
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

# 添加項目根目錄到 Python 路徑
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

from src.graph import Graph, GraphError, family, load_edge_list, FAMILY_NAMES
from src.coloring import BudgetExceededError, ProperColoringCounter, COUNT_METHODS
from src.injection import InjectionVerifier, degenerate_note
from src.bounds import BoundsError, bound_ratio, compare_bounds
from src.report import ReportTable, OUTPUT_FORMATS, format_decimal

logger = logging.getLogger(__name__)

COMMANDS = ("count", "bounds", "verify", "sweep")

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3

COUNT_COLUMNS = ["graph", "v", "e", "lambda", "count", "method", "methods_agree", "polynomial"]

BOUNDS_COLUMNS = [
    "graph", "v", "e", "lambda", "count", "count_method",
    "liu_murty", "liu_murty_decimal", "klazar", "klazar_decimal",
    "lazebnik_term1", "lazebnik_term2", "lazebnik_term3", "lazebnik_A",
    "lazebnik_bound", "lazebnik_bound_decimal", "all_bounds_hold",
]

SWEEP_COLUMNS = BOUNDS_COLUMNS + ["ratio_liu_murty", "ratio_klazar", "ratio_lazebnik", "verify"]

VERIFY_COLUMNS = [
    "graph", "v", "e", "lambda", "proper_count", "domain_size", "image_size",
    "injective", "round_trip", "max_image_multiplicity",
    "inequality_lhs", "inequality_rhs", "bound_holds", "tight", "status", "note",
]


class RunConfigError(ValueError):
    """命令列參數不合法"""


@dataclass(frozen=True)
class RunConfig:
    """單次執行的設定"""

    command: str
    graph_file: Optional[str]
    family_spec: Optional[str]
    lambda_range: Tuple[int, int]
    seed: int
    output_format: str
    budget: int
    method: str = "both"
    out: Optional[str] = None


def parse_range(text: str, what: str) -> Tuple[int, int]:
    """解析 `A` 或 `A..B`"""
    parts = text.split("..")
    try:
        values = [int(x) for x in parts]
    except ValueError:
        raise RunConfigError(f"{what} 不是整數或整數範圍: {text}")
    if len(values) == 1:
        values = values * 2
    if len(values) != 2 or values[0] > values[1]:
        raise RunConfigError(f"{what} 範圍不合法: {text}")
    return values[0], values[1]


def parse_lambda_range(text: str) -> Tuple[int, int]:
    lo, hi = parse_range(text, "--lambda")
    if lo < 1:
        raise RunConfigError(f"--lambda 的最小值必須 >= 1: {text}")
    return lo, hi


def parse_family_spec(spec: str, default_seed: int) -> List[Tuple[str, Graph]]:
    """
    解析圖族規格 `name:n[:p][:seed]`，n 可以是範圍 `A..B`

    Args:
        spec: 圖族規格字串
        default_seed: 規格未帶種子時使用的種子

    Returns:
        (標籤, 圖) 的列表，依 n 遞增
    """
    parts = spec.split(":")
    name = parts[0]
    if name not in FAMILY_NAMES:
        raise RunConfigError(f"未知的圖族: {name}")
    if len(parts) < 2:
        raise RunConfigError(f"圖族規格缺少大小: {spec}")
    lo, hi = parse_range(parts[1], "圖族大小")

    if name != "random":
        if len(parts) > 2:
            raise RunConfigError(f"{name} 不接受 p 或 seed: {spec}")
        return [(f"{name}:{n}", family(name, n)) for n in range(lo, hi + 1)]

    if len(parts) not in (3, 4):
        raise RunConfigError(f"random 規格應為 random:n:p[:seed]: {spec}")
    try:
        p = float(parts[2])
        seed = int(parts[3]) if len(parts) == 4 else default_seed
    except ValueError:
        raise RunConfigError(f"random 規格中的 p 或 seed 不合法: {spec}")
    return [(f"random:{n}:{parts[2]}:{seed}", family("random", n, seed=seed, p=p)) for n in range(lo, hi + 1)]


def setup_logging(config: Dict):
    """依設定初始化日誌；日誌一律寫到 stderr，stdout 只留給報表"""
    log_config = config.get("logging", {})
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_config.get("file"):
        handlers.append(logging.FileHandler(log_config["file"], encoding="utf-8"))
    logging.basicConfig(
        level=getattr(logging, str(log_config.get("level", "INFO")).upper(), logging.INFO),
        format=log_config.get("format", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"),
        handlers=handlers,
        force=True,
    )


class ColoringBoundApp:
    """正常著色上界驗證應用程式主類"""

    def __init__(self, config_path: str = None):
        """
        初始化應用程式

        Args:
            config_path: 配置文件路徑
        """
        self.config = self.load_config(config_path)
        self.counter = None
        self.verifier = None

    def load_config(self, config_path: str = None) -> Dict:
        """載入配置"""
        default_config = {
            "enumeration": {
                "budget": 10_000_000,
                "max_polynomial_vertices": 12
            },
            "cli": {
                "format": "csv",
                "method": "both",
                "decimal_places": 6,
                "show_progress": False
            },
            "random": {
                "seed": 0
            },
            "logging": {
                "level": "INFO",
                "file": None,
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
            }
        }

        if config_path and os.path.exists(config_path):
            try:
                with open(config_path, 'r', encoding='utf-8') as f:
                    custom_config = json.load(f)
                # 合併配置
                for key, value in custom_config.items():
                    if isinstance(value, dict) and key in default_config:
                        default_config[key].update(value)
                    else:
                        default_config[key] = value
            except Exception as e:
                logger.warning(f"載入配置檔案失敗: {e}，使用預設配置")
        elif config_path:
            logger.warning(f"找不到配置檔案: {config_path}，使用預設配置")

        return default_config

    def initialize_components(self, budget: int = None):
        """初始化計數器與驗證器"""
        budget = budget or self.config["enumeration"]["budget"]
        self.counter = ProperColoringCounter(
            budget=budget,
            max_polynomial_vertices=self.config["enumeration"]["max_polynomial_vertices"]
        )
        self.verifier = InjectionVerifier(
            budget=budget,
            show_progress=self.config["cli"]["show_progress"]
        )
        logger.info(f"系統組件初始化完成，列舉預算 {budget}")

    def resolve_graphs(self, run: RunConfig) -> List[Tuple[str, Graph]]:
        """依 --graph 或 --family 取得要處理的圖"""
        if run.graph_file:
            label = os.path.splitext(os.path.basename(run.graph_file))[0]
            return [(label, load_edge_list(run.graph_file))]
        if run.family_spec:
            return parse_family_spec(run.family_spec, run.seed)
        raise RunConfigError("需要 --graph 或 --family")

    def _instances(self, run: RunConfig, graphs: List[Tuple[str, Graph]]):
        lo, hi = run.lambda_range
        return [(label, graph, lam) for label, graph in graphs for lam in range(lo, hi + 1)]

    def _bounds_row(self, label: str, graph: Graph, lam: int, method: str) -> Tuple[Dict, bool]:
        places = self.config["cli"]["decimal_places"]
        result = self.counter.count_or_none(graph, lam, method)
        count = result.count if result else None
        report = compare_bounds(graph, lam, count)

        row = {
            "graph": label,
            "v": graph.v,
            "e": graph.e,
            "lambda": lam,
            "count": count,
            "count_method": result.method if result else None,
            "liu_murty": report.liu_murty,
            "liu_murty_decimal": format_decimal(report.liu_murty, places) if report.liu_murty is not None else None,
            "klazar": report.klazar,
            "klazar_decimal": format_decimal(report.klazar, places),
            "lazebnik_term1": report.lazebnik_terms[0],
            "lazebnik_term2": report.lazebnik_terms[1],
            "lazebnik_term3": report.lazebnik_terms[2],
            "lazebnik_A": report.lazebnik_A,
            "lazebnik_bound": report.lazebnik,
            "lazebnik_bound_decimal": format_decimal(report.lazebnik, places),
            "all_bounds_hold": report.all_bounds_hold,
        }
        failed = report.all_bounds_hold is False or (result is not None and result.methods_agree is False)
        return row, failed

    def cmd_count(self, run: RunConfig) -> Tuple[ReportTable, int]:
        """每個 λ 的精確正常著色數"""
        table = ReportTable(COUNT_COLUMNS)
        status = EXIT_OK
        for label, graph, lam in self._instances(run, self.resolve_graphs(run)):
            if run.method == "both":
                # both 只要有一個方法在預算內就能給出精確值
                result = self.counter.count_or_none(graph, lam, "both")
                if result is None:
                    raise BudgetExceededError(f"{label}, λ={lam}: 暴力列舉與色多項式都超出預算")
            else:
                result = self.counter.count(graph, lam, run.method)
            polynomial = str(self.counter.polynomial(graph)) if result.method != "brute" else None
            table.add({
                "graph": label,
                "v": graph.v,
                "e": graph.e,
                "lambda": lam,
                "count": result.count,
                "method": result.method,
                "methods_agree": result.methods_agree,
                "polynomial": polynomial,
            })
            if result.methods_agree is False:
                status = EXIT_PROPERTY_FAILED
        return table, status

    def cmd_bounds(self, run: RunConfig) -> Tuple[ReportTable, int]:
        """三個上界的比較表"""
        table = ReportTable(BOUNDS_COLUMNS)
        status = EXIT_OK
        for label, graph, lam in self._instances(run, self.resolve_graphs(run)):
            row, failed = self._bounds_row(label, graph, lam, run.method)
            table.add(row)
            if failed:
                status = EXIT_PROPERTY_FAILED
        return table, status

    def cmd_verify(self, run: RunConfig) -> Tuple[ReportTable, int]:
        """完整的單射驗證"""
        table = ReportTable(VERIFY_COLUMNS)
        status = EXIT_OK
        for label, graph, lam in self._instances(run, self.resolve_graphs(run)):
            base = {"graph": label, "v": graph.v, "e": graph.e, "lambda": lam}
            note = degenerate_note(graph, lam)
            if note:
                logger.info(f"{label}, λ={lam}: {note}")
                table.add({**base, "status": "degenerate", "note": note})
                continue

            report = self.verifier.verify(graph, lam)
            table.add({
                **base,
                "proper_count": report.proper_count,
                "domain_size": report.domain_size,
                "image_size": report.image_size,
                "injective": report.injective,
                "round_trip": report.round_trip,
                "max_image_multiplicity": report.max_image_multiplicity,
                "inequality_lhs": report.inequality_lhs,
                "inequality_rhs": report.inequality_rhs,
                "bound_holds": report.bound_holds,
                "tight": report.tight,
                "status": "pass" if report.passed else "fail",
                "note": report.summary(),
            })
            if not report.passed:
                status = EXIT_PROPERTY_FAILED
                for counterexample in report.counterexamples:
                    print(f"{label}, λ={lam}: {counterexample}", file=sys.stderr)
        return table, status

    def cmd_sweep(self, run: RunConfig) -> Tuple[ReportTable, int]:
        """圖族 × 大小 × λ 的交叉表"""
        if not run.family_spec:
            raise RunConfigError("sweep 需要 --family")
        table = ReportTable(SWEEP_COLUMNS)
        status = EXIT_OK
        instances = self._instances(run, self.resolve_graphs(run))

        for label, graph, lam in tqdm(instances, desc="sweep", disable=not self.config["cli"]["show_progress"]):
            row, failed = self._bounds_row(label, graph, lam, run.method)
            count = row["count"]
            row["ratio_liu_murty"] = bound_ratio(count, row["liu_murty"])
            row["ratio_klazar"] = bound_ratio(count, row["klazar"])
            row["ratio_lazebnik"] = bound_ratio(count, row["lazebnik_bound"])

            verdict = None
            if degenerate_note(graph, lam) is None:
                try:
                    verdict = "pass" if self.verifier.verify(graph, lam).passed else "fail"
                except BudgetExceededError as e:
                    logger.warning(f"{label}, λ={lam} 略過驗證: {e}")
            row["verify"] = verdict

            table.add(row)
            if failed or verdict == "fail":
                status = EXIT_PROPERTY_FAILED
        return table, status

    def run(self, run: RunConfig, stream=None) -> int:
        """
        執行命令並輸出報表

        Args:
            run: 執行設定
            stream: 輸出串流（預設為標準輸出）

        Returns:
            結束狀態碼
        """
        handlers = {
            "count": self.cmd_count,
            "bounds": self.cmd_bounds,
            "verify": self.cmd_verify,
            "sweep": self.cmd_sweep,
        }
        if self.counter is None:
            self.initialize_components(run.budget)

        try:
            table, status = handlers[run.command](run)
        except BudgetExceededError as e:
            logger.error(f"超出預算: {e}")
            print(f"超出預算: {e}", file=sys.stderr)
            return EXIT_BUDGET_EXCEEDED
        except (GraphError, BoundsError, RunConfigError, OSError) as e:
            logger.error(f"輸入錯誤: {e}")
            print(f"輸入錯誤: {e}", file=sys.stderr)
            return EXIT_INPUT_ERROR

        table.write(run.output_format, path=run.out, stream=stream or sys.stdout)
        return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="正常著色上界驗證系統")
    parser.add_argument("command", choices=COMMANDS, help="執行的命令")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", type=str, help="邊列表檔案路徑")
    source.add_argument("--family", type=str, help="圖族規格 name:n[:p][:seed]，n 可為 A..B")
    parser.add_argument("--lambda", dest="lam", type=str, default="2", help="顏色數 A 或範圍 A..B")
    parser.add_argument("--method", choices=COUNT_METHODS, help="計數方法")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, help="輸出格式")
    parser.add_argument("--budget", type=int, help="列舉預算 λ^v 上限")
    parser.add_argument("--seed", type=int, help="random 圖族的種子")
    parser.add_argument("--out", type=str, help="輸出檔案（預設為標準輸出）")
    parser.add_argument("--config", type=str, help="配置檔案路徑")
    return parser


def main(argv: List[str] = None) -> int:
    """主程式入口"""
    args = build_parser().parse_args(argv)

    app = ColoringBoundApp(args.config)
    setup_logging(app.config)

    try:
        budget = args.budget if args.budget is not None else app.config["enumeration"]["budget"]
        if budget < 1:
            raise RunConfigError(f"--budget 必須 >= 1: {budget}")
        run = RunConfig(
            command=args.command,
            graph_file=args.graph,
            family_spec=args.family,
            lambda_range=parse_lambda_range(args.lam),
            seed=args.seed if args.seed is not None else app.config["random"]["seed"],
            output_format=args.format or app.config["cli"]["format"],
            budget=budget,
            method=args.method or app.config["cli"]["method"],
            out=args.out,
        )
    except RunConfigError as e:
        print(f"參數錯誤: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        return app.run(run)
    except KeyboardInterrupt:
        print("\n程式被用戶中斷", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
