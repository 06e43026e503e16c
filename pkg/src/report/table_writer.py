import io
import json
import logging
from fractions import Fraction
from typing import Any, Dict, List, Sequence

import pandas as pd

logger = logging.getLogger(__name__)

MISSING = "n/a"
OUTPUT_FORMATS = ("csv", "json")


def format_rational(value: Fraction) -> str:
    """有理數一律以 p/q 表示（整數也帶分母）"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, places: int = 6) -> str:
    """四捨五入到固定小數位數，只用整數運算"""
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    value = abs(value)
    scale = 10**places
    scaled = (value.numerator * scale * 2 + value.denominator) // (2 * value.denominator)
    whole, frac = divmod(scaled, scale)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def render_cell(value: Any) -> str:
    if value is None:
        return MISSING
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def json_cell(value: Any) -> Any:
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    return value


class ReportTable:
    """
    報表表格

    每一列是欄名到值的字典；值可以是 int、Fraction、bool、str 或 None。
    輸出時依建立時給定的欄位順序排列。
    """

    def __init__(self, columns: Sequence[str]):
        self.columns = list(columns)
        self.rows: List[Dict[str, Any]] = []

    def add(self, row: Dict[str, Any]):
        unknown = set(row) - set(self.columns)
        if unknown:
            raise KeyError(f"未知的欄位: {sorted(unknown)}")
        self.rows.append({col: row.get(col) for col in self.columns})

    def __len__(self) -> int:
        return len(self.rows)

    def to_csv(self) -> str:
        frame = pd.DataFrame(
            [[render_cell(row[col]) for col in self.columns] for row in self.rows],
            columns=self.columns,
            dtype=str,
        )
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue()

    def to_json(self) -> str:
        records = [{col: json_cell(row[col]) for col in self.columns} for row in self.rows]
        return json.dumps(records, ensure_ascii=False, indent=2) + "\n"

    def render(self, output_format: str) -> str:
        if output_format == "csv":
            return self.to_csv()
        if output_format == "json":
            return self.to_json()
        raise ValueError(f"未知的輸出格式: {output_format}")

    def write(self, output_format: str, path: str = None, stream=None):
        """寫到檔案或串流（預設標準輸出由呼叫端傳入）"""
        text = self.render(output_format)
        if path:
            with open(path, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            logger.info(f"報表已寫入: {path}（{len(self.rows)} 列）")
        elif stream is not None:
            stream.write(text)
        return text
