"""DuckDB database manager."""

import duckdb
import json
from datetime import timezone
from pathlib import Path
from typing import Optional, List, Dict, Any

from ..models import VerificationReport
from ..config import get_settings


class DatabaseManager:
    """Manages DuckDB connection and operations."""

    def __init__(self, db_path: Optional[Path] = None):
        """Initialize database manager."""
        self.settings = get_settings()
        self.db_path = db_path or self.settings.duckdb_path_obj
        self.conn: Optional[duckdb.DuckDBPyConnection] = None

    def connect(self) -> duckdb.DuckDBPyConnection:
        """Connect to DuckDB database."""
        if self.conn is None:
            self.conn = duckdb.connect(str(self.db_path))
        return self.conn

    def close(self):
        """Close database connection."""
        if self.conn:
            self.conn.close()
            self.conn = None

    def init_schema(self):
        """Initialize database schema."""
        conn = self.connect()

        # Frobenius coefficients in Z[t], dense little-endian
        conn.execute("""
            CREATE TABLE IF NOT EXISTS coefficient_cache (
                family VARCHAR NOT NULL,
                p INTEGER NOT NULL,
                n INTEGER NOT NULL,
                i INTEGER NOT NULL,
                coefficients JSON NOT NULL,
                PRIMARY KEY (family, p, n, i)
            )
        """)

        # One row per recorded verify/simpson run
        conn.execute("""
            CREATE TABLE IF NOT EXISTS verification_runs (
                run_id INTEGER PRIMARY KEY,
                suite VARCHAR NOT NULL,
                params JSON,
                cases INTEGER NOT NULL,
                failures INTEGER NOT NULL,
                report JSON NOT NULL,
                created_at TIMESTAMP NOT NULL
            )
        """)
        conn.execute("CREATE SEQUENCE IF NOT EXISTS verification_run_ids START 1")
        conn.execute("CREATE INDEX IF NOT EXISTS idx_runs_suite ON verification_runs(suite)")

        conn.commit()

    def insert_coefficient(self, family: str, p: int, n: int, i: int, coefficients: List[int]):
        """Store one coefficient; an existing row is kept."""
        conn = self.connect()
        conn.execute("""
            INSERT INTO coefficient_cache (family, p, n, i, coefficients)
            VALUES (?, ?, ?, ?, ?)
            ON CONFLICT DO NOTHING
        """, [family, p, n, i, json.dumps(coefficients)])
        conn.commit()

    def get_coefficient(self, family: str, p: int, n: int, i: int) -> Optional[List[int]]:
        """Get a cached coefficient, or None."""
        conn = self.connect()
        result = conn.execute(
            "SELECT coefficients FROM coefficient_cache WHERE family = ? AND p = ? AND n = ? AND i = ?",
            [family, p, n, i],
        ).fetchone()
        if result:
            return json.loads(result[0])
        return None

    def count_coefficients(self, p: Optional[int] = None) -> int:
        conn = self.connect()
        if p is None:
            return conn.execute("SELECT COUNT(*) FROM coefficient_cache").fetchone()[0]
        return conn.execute("SELECT COUNT(*) FROM coefficient_cache WHERE p = ?", [p]).fetchone()[0]

    def insert_verification_run(self, report: VerificationReport) -> int:
        """Record a report and return its run id."""
        conn = self.connect()
        run_id = conn.execute("SELECT nextval('verification_run_ids')").fetchone()[0]
        conn.execute("""
            INSERT INTO verification_runs
            (run_id, suite, params, cases, failures, report, created_at)
            VALUES (?, ?, ?, ?, ?, ?, ?)
        """, [
            run_id,
            report.suite,
            json.dumps(report.params),
            len(report.cases),
            report.failures,
            json.dumps(report.summary()),
            report.created_at.astimezone(timezone.utc).replace(tzinfo=None),
        ])
        conn.commit()
        return run_id

    def get_verification_run(self, run_id: int) -> Optional[Dict[str, Any]]:
        """Get a recorded run by ID."""
        conn = self.connect()
        result = conn.execute(
            "SELECT * FROM verification_runs WHERE run_id = ?", [run_id]
        ).fetchone()
        if result:
            columns = [desc[0] for desc in conn.description]
            return dict(zip(columns, result))
        return None

    def get_runs_by_suite(self, suite: str) -> List[Dict[str, Any]]:
        """Get all recorded runs of a suite, oldest first."""
        conn = self.connect()
        results = conn.execute(
            "SELECT * FROM verification_runs WHERE suite = ? ORDER BY run_id",
            [suite]
        ).fetchall()
        columns = [desc[0] for desc in conn.description]
        return [dict(zip(columns, row)) for row in results]
