"""
Report files: envelopes, JSON/CSV/SVG writers and schema-checked loading.
"""

from convlab.reports.schema import REPORT_COLUMNS, ReportEnvelope, load_report, merge_reports
from convlab.reports.svg import chart_for, line_chart
from convlab.reports.writer import (
    build_envelope,
    config_hash,
    write_csv,
    write_json,
    write_report,
    write_svg,
)

__all__ = [
    "REPORT_COLUMNS",
    "ReportEnvelope",
    "load_report",
    "merge_reports",
    "chart_for",
    "line_chart",
    "build_envelope",
    "config_hash",
    "write_csv",
    "write_json",
    "write_report",
    "write_svg",
]
