"""Unit tests for database storage layer."""

import pytest
import json

from src.frobenius import CoefficientTable, coeff_B
from src.models import VerificationCase, VerificationReport


@pytest.mark.unit
class TestDatabaseManager:
    """Test DatabaseManager class."""

    def test_init_schema(self, temp_db_memory):
        """Test database schema initialization."""
        conn = temp_db_memory.connect()

        tables = conn.execute(
            "SELECT table_name FROM information_schema.tables"
        ).fetchall()
        table_names = [t[0] for t in tables]

        assert "coefficient_cache" in table_names
        assert "verification_runs" in table_names

    def test_init_schema_is_idempotent(self, temp_db_memory):
        """Running the schema twice keeps existing rows."""
        temp_db_memory.insert_coefficient("B", 2, 1, 1, [1])
        temp_db_memory.init_schema()

        assert temp_db_memory.get_coefficient("B", 2, 1, 1) == [1]

    def test_coefficient_roundtrip(self, temp_db_memory):
        """Stored coefficient lists come back unchanged."""
        db = temp_db_memory
        db.insert_coefficient("A", 3, 2, 4, [1, 0, -2, 5])

        assert db.get_coefficient("A", 3, 2, 4) == [1, 0, -2, 5]
        assert db.get_coefficient("A", 3, 2, 5) is None
        assert db.count_coefficients() == 1
        assert db.count_coefficients(p=2) == 0

    def test_insert_coefficient_keeps_first_value(self, temp_db_memory):
        """A second insert under the same key is ignored."""
        db = temp_db_memory
        db.insert_coefficient("B", 2, 2, 2, [0, 1])
        db.insert_coefficient("B", 2, 2, 2, [9])

        assert db.get_coefficient("B", 2, 2, 2) == [0, 1]

    def test_insert_verification_run(self, temp_db_memory):
        """Recorded reports keep their suite, counts and JSON body."""
        db = temp_db_memory
        report = VerificationReport(
            suite="lucas",
            params={"ring": "CycF:3"},
            cases=[
                VerificationCase(key="a", passed=True),
                VerificationCase(key="b", passed=False, detail="mismatch"),
            ],
        )

        run_id = db.insert_verification_run(report)
        row = db.get_verification_run(run_id)

        assert row is not None
        assert row["suite"] == "lucas"
        assert row["cases"] == 2
        assert row["failures"] == 1
        assert row["created_at"] == report.created_at.replace(tzinfo=None)
        body = json.loads(row["report"])
        assert body["failures"] == 1
        assert [c["key"] for c in body["cases"]] == ["a", "b"]

    def test_run_ids_increase(self, temp_db_memory):
        """Runs of one suite come back oldest first."""
        db = temp_db_memory
        first = db.insert_verification_run(VerificationReport(suite="examples"))
        second = db.insert_verification_run(VerificationReport(suite="examples"))
        db.insert_verification_run(VerificationReport(suite="lucas"))

        runs = db.get_runs_by_suite("examples")

        assert second > first
        assert [r["run_id"] for r in runs] == [first, second]

    def test_missing_run(self, temp_db_memory):
        """Unknown run ids give None."""
        assert temp_db_memory.get_verification_run(999) is None

    def test_file_backed_database(self, temp_db):
        """The file-backed fixture persists coefficients across connections."""
        temp_db.insert_coefficient("A", 2, 1, 2, [1])
        temp_db.close()

        assert temp_db.get_coefficient("A", 2, 1, 2) == [1]


@pytest.mark.unit
class TestCoefficientCache:
    """CoefficientTable reads through the DuckDB cache."""

    def test_table_populates_cache(self, temp_db_memory):
        """Computing a row stores A and B."""
        table = CoefficientTable(2, temp_db_memory)

        list(table.rows(2))

        assert temp_db_memory.get_coefficient("B", 2, 2, 2) == [0, 1]
        assert temp_db_memory.count_coefficients(p=2) > 0

    def test_table_prefers_cached_value(self, temp_db_memory):
        """A cached entry is returned instead of recomputing."""
        temp_db_memory.insert_coefficient("B", 3, 1, 1, [7])
        table = CoefficientTable(3, temp_db_memory)

        assert table.b(1, 1).to_data() == [7]
        assert table.b(1, 2) == coeff_B(1, 2, 3)
