# Report Module
from .table_writer import (
    ReportTable,
    MISSING,
    OUTPUT_FORMATS,
    format_rational,
    format_decimal,
    render_cell,
)

__all__ = ['ReportTable', 'MISSING', 'OUTPUT_FORMATS', 'format_rational', 'format_decimal', 'render_cell']
