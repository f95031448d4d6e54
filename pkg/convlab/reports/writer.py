"""
Report envelopes and their JSON, CSV and SVG files.
"""

import csv
import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

from convlab import __version__
from convlab.reports.schema import REPORT_COLUMNS
from convlab.reports.svg import chart_for
from convlab.serialization import dumps

logger = logging.getLogger(__name__)


def config_hash(config: Dict[str, Any]) -> str:
    """SHA-256 over the canonical JSON of a run configuration."""
    canonical = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def build_envelope(
    kind: str,
    rows: List[Dict[str, Any]],
    config: Dict[str, Any],
    master_seed: Optional[int] = None,
    prng: Optional[str] = None,
    summary: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    return {
        "kind": kind,
        "tool_version": __version__,
        "prng": prng,
        "master_seed": master_seed,
        "config_hash": config_hash(config),
        "summary": summary or {},
        "rows": rows,
    }


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(item) for item in value)
    return str(value)


def write_json(path: Path, data: Dict[str, Any]) -> Path:
    path.write_text(dumps(data), encoding="utf-8")
    return path


def write_csv(path: Path, rows: Iterable[Dict[str, Any]], columns: Sequence[str]) -> Path:
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(column)) for column in columns])
    return path


def write_svg(path: Path, kind: str, rows: List[Dict[str, Any]]) -> Optional[Path]:
    chart = chart_for(kind, rows)
    if chart is None:
        logger.info(f"No chart for '{kind}' reports; skipping SVG")
        return None
    path.write_text(chart, encoding="utf-8")
    return path


def write_report(
    envelope: Dict[str, Any],
    out_dir: Path,
    stem: str,
    formats: Sequence[str],
) -> List[Path]:
    """
    Write the envelope in each requested format as out_dir/stem.<format>.

    Returns:
        Paths written, in format order
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    kind = envelope["kind"]
    written: List[Path] = []
    for fmt in formats:
        path = out_dir / f"{stem}.{fmt}"
        if fmt == "json":
            written.append(write_json(path, envelope))
        elif fmt == "csv":
            written.append(write_csv(path, envelope["rows"], REPORT_COLUMNS[kind]))
        elif fmt == "svg":
            svg_path = write_svg(path, kind, envelope["rows"])
            if svg_path is not None:
                written.append(svg_path)
    logger.info(f"Wrote {', '.join(str(path) for path in written)}")
    return written
