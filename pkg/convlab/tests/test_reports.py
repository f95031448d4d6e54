"""
Tests for report files.

This module tests:
- Envelope construction and schema validation
- JSON, CSV and SVG writers
- Merging reports of one kind
"""

import json
from fractions import Fraction

import pytest

from convlab.bayes import consistency_verdict, geometric
from convlab.errors import ReportSchemaError
from convlab.problems import raven_problem
from convlab.reports import (
    ReportEnvelope,
    build_envelope,
    chart_for,
    config_hash,
    load_report,
    merge_reports,
    write_report,
)
from convlab.serialization import bayes_summary, dumps, trace_rows


def _consistency_rows(p_values, n=10):
    return [
        {"p": p, "n": n, "replicates": 4, "coverage": "3/4", "coverage_decimal": "0.750000"}
        for p in p_values
    ]


def _write(path, envelope):
    path.write_text(dumps(envelope), encoding="utf-8")
    return path


class TestEnvelope:
    """Test envelopes and their schema."""

    def test_envelope_validates(self):
        """Test that a built envelope passes the schema."""
        envelope = build_envelope("consistency", _consistency_rows(["0", "1/2"]), {"seed": 1}, master_seed=1)
        report = ReportEnvelope.model_validate(envelope)

        assert report.kind == "consistency"
        assert report.master_seed == 1
        assert len(report.config_hash) == 64

    def test_config_hash_ignores_key_order(self):
        """Test that the hash depends on content, not insertion order."""
        assert config_hash({"a": 1, "b": [1, 2]}) == config_hash({"b": [1, 2], "a": 1})
        assert config_hash({"a": 1}) != config_hash({"a": 2})

    def test_rejects_wrong_columns(self, tmp_path):
        """Test that rows with another kind's columns fail to load."""
        envelope = build_envelope("progressiveness", _consistency_rows(["0"]), {})
        with pytest.raises(ReportSchemaError, match="schema mismatch"):
            load_report(_write(tmp_path / "bad.json", envelope))

    def test_rejects_extra_fields_and_bad_hash(self, tmp_path):
        """Test that unknown top-level fields and malformed hashes fail to load."""
        extra = {**build_envelope("theorem", [], {}), "colour": "blue"}
        bad_hash = {**build_envelope("theorem", [], {}), "config_hash": "abc"}
        for index, envelope in enumerate((extra, bad_hash)):
            with pytest.raises(ReportSchemaError):
                load_report(_write(tmp_path / f"bad_{index}.json", envelope))

    def test_rejects_non_json(self, tmp_path):
        """Test that unreadable files raise ReportSchemaError."""
        path = tmp_path / "broken.json"
        path.write_text("not json", encoding="utf-8")
        with pytest.raises(ReportSchemaError):
            load_report(path)


class TestWriters:
    """Test the file writers."""

    def test_formats(self, tmp_path):
        """Test JSON, CSV and SVG output for a consistency report."""
        envelope = build_envelope("consistency", _consistency_rows(["0", "1/2", "1"]), {}, master_seed=3)
        paths = write_report(envelope, tmp_path, "run", ["json", "csv", "svg"])

        assert [path.name for path in paths] == ["run.json", "run.csv", "run.svg"]
        assert json.loads(paths[0].read_text(encoding="utf-8")) == envelope
        csv_bytes = paths[1].read_bytes()
        assert b"\r" not in csv_bytes
        assert csv_bytes.decode().splitlines()[0] == "p,n,replicates,coverage,coverage_decimal"
        assert paths[2].read_text(encoding="utf-8").count("<polyline") == 1

    def test_kind_without_chart(self, tmp_path):
        """Test that SVG is skipped for kinds that have no chart."""
        row = {"trials": 1, "seed": 0, "max_states": 5, "antecedent_true": 0,
               "counterexamples": 0, "holds": True}
        paths = write_report(build_envelope("theorem", [row], {}), tmp_path, "t", ["csv", "svg"])

        assert [path.name for path in paths] == ["t.csv"]
        assert paths[0].read_text(encoding="utf-8").splitlines()[1] == "1,0,5,0,0,true"

    def test_json_is_deterministic(self, tmp_path):
        """Test that writing the same envelope twice gives identical bytes."""
        envelope = build_envelope("consistency", _consistency_rows(["1/3"]), {"seed": 5})
        first = write_report(envelope, tmp_path / "a", "x", ["json"])[0].read_bytes()
        second = write_report(envelope, tmp_path / "b", "x", ["json"])[0].read_bytes()
        assert first == second
        assert first.endswith(b"\n")


class TestCharts:
    """Test chart selection."""

    def test_bayes_chart_one_line_per_world(self):
        """Test that a Bayes chart draws one polyline per checked world."""
        report = consistency_verdict(geometric(64), raven_problem(), 12, Fraction(99, 100))
        rows = [row for trace in report.traces for row in trace_rows(trace)]
        chart = chart_for("bayes", rows)

        assert chart.count("<polyline") == report.worlds_checked
        assert bayes_summary(report)["passed"] is True

    def test_no_chart_for_check(self):
        """Test that verdict reports have no chart."""
        assert chart_for("check", []) is None

    def test_chart_is_pure(self):
        """Test that the chart text depends only on the rows."""
        rows = _consistency_rows(["0", "1/2", "1"])
        assert chart_for("consistency", rows) == chart_for("consistency", list(rows))


class TestMerge:
    """Test merging reports."""

    def test_merge_tags_sources(self, tmp_path):
        """Test that merged rows carry their source file stem."""
        first = _write(tmp_path / "seed1.json", build_envelope("consistency", _consistency_rows(["0", "1"]), {}))
        second = _write(tmp_path / "seed2.json", build_envelope("consistency", _consistency_rows(["1/2"]), {}))
        kind, rows = merge_reports([first, second])

        assert kind == "consistency"
        assert [row["source"] for row in rows] == ["seed1", "seed1", "seed2"]

    def test_mixed_kinds(self, tmp_path):
        """Test that reports of different kinds cannot be merged."""
        first = _write(tmp_path / "a.json", build_envelope("consistency", _consistency_rows(["0"]), {}))
        second = _write(tmp_path / "b.json", build_envelope("theorem", [], {}))
        with pytest.raises(ReportSchemaError, match="Cannot merge"):
            merge_reports([first, second])

    def test_nothing_to_merge(self):
        """Test that an empty input list is an error."""
        with pytest.raises(ReportSchemaError):
            merge_reports([])
