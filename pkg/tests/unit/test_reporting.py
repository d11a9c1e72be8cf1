"""Unit tests for table builders and emitters."""

import io
import json

import pytest
from rich.console import Console

from src.errors import PreconditionError
from src.models import OutputFormat, Subcommand, VerificationCase, VerificationReport
from src.reporting import center_table, emit, frob_coeff_table, qbinom_table, render


@pytest.fixture
def qbinom_report(make_config):
    return qbinom_table(make_config(Subcommand.QBINOM, ring="Zt", nmax=4))


@pytest.fixture
def small_verification():
    return VerificationReport(
        suite="demo",
        cases=[
            VerificationCase(key="b", passed=False, detail="off by one"),
            VerificationCase(key="a", passed=True),
        ],
    ).sorted()


@pytest.mark.unit
class TestTables:
    """Test the qbinom, frob-coeffs and center tables."""

    def test_qbinom_rows(self, qbinom_report):
        """{4, 2}_q = 1 + q + 2q^2 + q^3 + q^4."""
        row = next(r for r in qbinom_report.rows if (r["n"], r["k"]) == (4, 2))

        assert row["coefficients"] == [1, 1, 2, 1, 1]
        assert len(qbinom_report.rows) == 15

    def test_qbinom_nmax_zero(self, make_config):
        report = qbinom_table(make_config(Subcommand.QBINOM, nmax=0))

        assert report.rows == [{"n": 0, "k": 0, "coefficients": [1]}]

    def test_frob_coeffs(self, make_config):
        """B_{2,2} = t^(p-1) at p = 2."""
        report = frob_coeff_table(make_config(Subcommand.FROB_COEFFS, p=2, nmax=2))
        b22 = next(r for r in report.rows if (r["family"], r["n"], r["i"]) == ("B", 2, 2))

        assert b22["coefficients"] == [0, 1]
        assert {r["family"] for r in report.rows} == {"A", "B", "C-num", "C-den"}
        assert len(report.rows) == 4 * 9

    def test_frob_coeffs_need_p(self, make_config):
        with pytest.raises(PreconditionError):
            frob_coeff_table(make_config(Subcommand.FROB_COEFFS, nmax=2))

    def test_center_at_q_characteristic_zero(self, make_config):
        """Only the centralizer is listed over Z[t]."""
        report = center_table(make_config(Subcommand.CENTER, ring="Zt", degree=2))

        assert {r["kind"] for r in report.rows} == {"centralizer"}
        assert len(report.rows) == 3

    def test_center_at_q_minus_one(self, make_config):
        report = center_table(make_config(Subcommand.CENTER, ring="CycF:2", degree=2))

        assert {r["kind"] for r in report.rows} == {"centralizer", "center"}


@pytest.mark.unit
class TestRender:
    """Test JSON, CSV and text rendering."""

    def test_csv_spreads_coefficients(self, qbinom_report):
        lines = render(qbinom_report, OutputFormat.CSV).splitlines()

        assert lines[0] == "n,k,coefficients"
        assert "4,2,1,1,2,1,1" in lines

    def test_json(self, qbinom_report):
        data = json.loads(render(qbinom_report, OutputFormat.JSON))

        assert data["name"] == "qbinom"
        assert data["params"] == {"ring": "Zt", "nmax": 4}

    def test_text(self, qbinom_report):
        text = render(qbinom_report, OutputFormat.TEXT)

        assert "qbinom" in text
        assert "coefficients" in text

    def test_verification_csv(self, small_verification):
        lines = render(small_verification, OutputFormat.CSV).splitlines()

        assert lines == ["key,passed,detail", "a,True,", "b,False,off by one"]

    def test_verification_json_has_failures(self, small_verification):
        data = json.loads(render(small_verification, OutputFormat.JSON))

        assert data["failures"] == 1
        assert "created_at" not in data

    def test_verification_text_title(self, small_verification):
        assert "demo: 2 cases, 1 failures" in render(small_verification, OutputFormat.TEXT)


@pytest.mark.unit
class TestEmit:
    """Test where reports go."""

    def test_emit_to_file(self, qbinom_report, tmp_path):
        out = tmp_path / "nested" / "qbinom.csv"

        emit(qbinom_report, OutputFormat.CSV, out)

        assert out.read_text(encoding="utf-8") == render(qbinom_report, OutputFormat.CSV)

    def test_emit_to_console(self, qbinom_report):
        buffer = io.StringIO()

        emit(qbinom_report, OutputFormat.JSON, console=Console(file=buffer))

        assert json.loads(buffer.getvalue())["name"] == "qbinom"
