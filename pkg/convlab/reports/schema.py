"""
Schema of the JSON report files this tool writes, and their loading.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from convlab.errors import ReportSchemaError

logger = logging.getLogger(__name__)

ReportKind = Literal["check", "achieve", "consistency", "progressiveness", "bayes", "theorem"]

# Row columns per report kind, in CSV order
REPORT_COLUMNS: Dict[str, Tuple[str, ...]] = {
    "check": ("method", "problem", "mode", "verdict", "witness", "witness_times", "modulus"),
    "achieve": ("problem", "mode", "status", "witness_method", "certificate"),
    "consistency": ("p", "n", "replicates", "coverage", "coverage_decimal"),
    "progressiveness": ("test", "p", "n", "replicates", "chance", "chance_decimal"),
    "bayes": ("world", "truth", "length", "mass_numerator", "mass_denominator", "mass"),
    "theorem": ("trials", "seed", "max_states", "antecedent_true", "counterexamples", "holds"),
}


class ReportEnvelope(BaseModel):
    """Common envelope of every report."""
    model_config = ConfigDict(extra="forbid")

    kind: ReportKind
    tool_version: str = Field(..., min_length=1)
    prng: Optional[str] = None
    master_seed: Optional[int] = None
    config_hash: str = Field(..., pattern=r"^[0-9a-f]{64}$", description="SHA-256 of the run configuration")
    summary: Dict[str, Any] = Field(default_factory=dict)
    rows: List[Dict[str, Any]]

    @model_validator(mode="after")
    def rows_match_kind(self):
        expected = set(REPORT_COLUMNS[self.kind])
        for index, row in enumerate(self.rows):
            if set(row) != expected:
                raise ValueError(
                    f"row {index} of a '{self.kind}' report has columns {sorted(row)}, "
                    f"expected {sorted(expected)}"
                )
        return self


def load_report(path: Union[str, Path]) -> ReportEnvelope:
    """
    Read and validate one report file.

    Raises:
        ReportSchemaError: If the file is not JSON or does not match the schema
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ReportSchemaError(f"{path}: not a readable JSON report ({exc})") from exc
    try:
        return ReportEnvelope.model_validate(data)
    except ValidationError as exc:
        raise ReportSchemaError(f"{path}: report schema mismatch\n{exc}") from exc


def merge_reports(paths: Sequence[Union[str, Path]]) -> Tuple[str, List[Dict[str, Any]]]:
    """
    Concatenate the rows of same-kind reports, tagging each with its source file.

    Raises:
        ReportSchemaError: On an invalid file or a mix of report kinds
    """
    if not paths:
        raise ReportSchemaError("No report files given")
    kind: Optional[str] = None
    merged: List[Dict[str, Any]] = []
    for path in paths:
        report = load_report(path)
        if kind is None:
            kind = report.kind
        elif report.kind != kind:
            raise ReportSchemaError(
                f"Cannot merge a '{report.kind}' report ({path}) with '{kind}' reports"
            )
        source = Path(path).stem
        merged.extend({"source": source, **row} for row in report.rows)
    logger.info(f"Merged {len(paths)} '{kind}' report(s), {len(merged)} rows")
    return kind, merged
