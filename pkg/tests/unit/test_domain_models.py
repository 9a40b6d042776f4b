"""
Unit tests for export rows.
"""

import pytest
from pydantic import ValidationError

from collatzlab.models.domain import (
    Branch,
    MapKind,
    PartialRow,
    SeedRecord,
    SuiteResult,
    TrajectoryRow,
)


class TestExportRow:
    """Test csv and json rendering."""

    def test_csv_columns_follow_fields(self):
        """Test that columns are the declared field order."""
        assert SeedRecord.csv_columns() == (
            "level",
            "branch",
            "c",
            "upsilon",
            "value",
            "e",
            "o",
            "expansion_duplicate",
        )

    def test_csv_row(self):
        """Test cell rendering of enums, lists, booleans and big values."""
        record = SeedRecord(
            level=3,
            branch=Branch.E,
            c=10,
            upsilon=[1],
            value=str(10**30 + 1),
            e=12,
            o=3,
            expansion_duplicate=False,
        )
        assert record.csv_row() == ["3", "E", "10", "1", str(10**30 + 1), "12", "3", "false"]

    def test_optional_cells(self):
        """Test that missing values render as empty cells."""
        row = TrajectoryRow(
            m="3", map=MapKind.T, e=5, o=2, g1=4, sigma_inf=5, completeness="2/5", gaps=[1, 4]
        )
        cells = dict(zip(TrajectoryRow.csv_columns(), row.csv_row()))
        assert cells["steps"] == ""
        assert cells["gamma"] == ""
        assert cells["gaps"] == "1 4"
        assert cells["map"] == "t"

    def test_partial_row(self):
        """Test the budget overrun row."""
        row = PartialRow(m="27", max_steps=10, last_term="214")
        assert row.model_dump()["status"] == "step_budget_exceeded"

    def test_frozen(self):
        """Test that rows are immutable."""
        row = PartialRow(m="27", max_steps=10, last_term="214")
        with pytest.raises(ValidationError):
            row.m = "28"


class TestSuiteResult:
    """Test suite summaries."""

    def test_pass(self):
        """Test a passing summary."""
        assert SuiteResult(name="table1", passed=True, checked=12).summary == "PASS, 12/12"

    def test_fail(self):
        """Test a failing summary."""
        result = SuiteResult(name="zk", passed=False, checked=10, failures=["a", "b"])
        assert result.summary == "FAIL, 8/10"
