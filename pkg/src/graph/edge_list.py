import logging
import os
from typing import List, Optional

from .graph_core import Edge, Graph, GraphError, make_graph

logger = logging.getLogger(__name__)


class EdgeListParseError(GraphError):
    """邊列表檔案格式錯誤，附帶出錯的行號"""

    def __init__(self, line_no: Optional[int], message: str, source: str = "<text>"):
        self.line_no = line_no
        self.source = source
        where = f"{source}:{line_no}" if line_no is not None else source
        super().__init__(f"{where}: {message}")


def _parse_ints(fields: List[str], line_no: int, source: str) -> List[int]:
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise EdgeListParseError(line_no, f"無法解析為整數: {' '.join(fields)}", source)


def parse_edge_list(text: str, source: str = "<text>") -> Graph:
    """
    解析邊列表文字

    第一行為 `v e`，其後 e 行 `u w`（1 <= u < w <= v），以空白分隔；
    以 `#` 開頭的行為註解，空行略過。

    Args:
        text: 檔案內容
        source: 錯誤訊息中顯示的來源名稱

    Returns:
        Graph
    """
    header = None
    header_line = None
    edges: List[Edge] = []
    seen = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListParseError(line_no, f"每行需要 2 個欄位，收到 {len(fields)} 個", source)
        a, b = _parse_ints(fields, line_no, source)

        if header is None:
            if a < 1 or b < 0:
                raise EdgeListParseError(line_no, f"標頭 `v e` 不合法: {a} {b}", source)
            header = (a, b)
            header_line = line_no
            continue

        v = header[0]
        if a == b:
            raise EdgeListParseError(line_no, f"loop: ({a}, {b})", source)
        if not (1 <= a <= v and 1 <= b <= v):
            raise EdgeListParseError(line_no, f"頂點超出範圍 1..{v}: ({a}, {b})", source)
        if a > b:
            raise EdgeListParseError(line_no, f"邊必須寫成 u < w: ({a}, {b})", source)
        if (a, b) in seen:
            raise EdgeListParseError(line_no, f"重複的邊: ({a}, {b})", source)
        seen.add((a, b))
        edges.append((a, b))

    if header is None:
        raise EdgeListParseError(None, "缺少標頭 `v e`", source)
    if len(edges) != header[1]:
        raise EdgeListParseError(header_line, f"標頭宣告 {header[1]} 條邊，實際讀到 {len(edges)} 條", source)

    return make_graph(header[0], edges)


def load_edge_list(path: str) -> Graph:
    """從檔案載入圖"""
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    graph = parse_edge_list(text, source=os.path.basename(path))
    logger.info(f"載入圖 {path}: v={graph.v}, e={graph.e}")
    return graph


def format_edge_list(graph: Graph) -> str:
    lines = [f"{graph.v} {graph.e}"]
    lines.extend(f"{u} {w}" for u, w in graph.sorted_edges)
    return "\n".join(lines) + "\n"
