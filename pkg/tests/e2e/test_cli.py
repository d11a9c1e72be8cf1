"""End-to-end tests for the CLI interface."""

import json

import pytest
from click.testing import CliRunner

from run_tdp import cli
from src import __version__
from src.errors import DivisibilityError
from src.models import VerificationCase, VerificationReport


def _csv_lines(output: str) -> list:
    return [line for line in output.splitlines() if line[:2] in ("A,", "B,", "C-", "fa")]


@pytest.fixture
def runner():
    return CliRunner()


@pytest.mark.e2e
class TestCLI:
    """Test command-line interface."""

    def test_cli_help(self, runner):
        result = runner.invoke(cli, ["--help"])

        assert result.exit_code == 0
        assert "Twisted divided powers" in result.output
        for name in ("qbinom", "frob-coeffs", "verify", "center", "simpson"):
            assert name in result.output

    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])

        assert result.exit_code == 0
        assert __version__ in result.output

    def test_qbinom_csv(self, runner):
        """{4, 2}_q as a CSV row."""
        result = runner.invoke(cli, ["qbinom", "--ring", "Zt", "--nmax", "4", "--format", "csv"])

        assert result.exit_code == 0
        assert "4,2,1,1,2,1,1" in result.output.splitlines()

    def test_qbinom_json(self, runner):
        result = runner.invoke(cli, ["qbinom", "--nmax", "0"])

        assert result.exit_code == 0
        assert json.loads(result.output)["rows"] == [{"n": 0, "k": 0, "coefficients": [1]}]

    def test_suites_listed(self, runner):
        result = runner.invoke(cli, ["suites"])

        assert result.exit_code == 0
        assert "negative-controls" in result.output


@pytest.mark.e2e
class TestExitCodes:
    """0 success, 1 failures, 2 usage, 3 falsified divisibility."""

    def test_bad_descriptor(self, runner):
        result = runner.invoke(cli, ["qbinom", "--ring", "Qt"])

        assert result.exit_code == 2

    def test_negative_bound(self, runner):
        result = runner.invoke(cli, ["qbinom", "--nmax", "-1"])

        assert result.exit_code == 2

    def test_unknown_suite(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "nosuch"])

        assert result.exit_code == 2
        assert "unknown suite" in result.output

    def test_verify_needs_suite(self, runner):
        assert runner.invoke(cli, ["verify"]).exit_code == 2

    def test_simpson_needs_q_divisible_ring(self, runner):
        assert runner.invoke(cli, ["simpson", "--ring", "Zt"]).exit_code == 2

    def test_frob_coeffs_rejects_small_p(self, runner):
        assert runner.invoke(cli, ["frob-coeffs", "--p", "1"]).exit_code == 2

    def test_frob_coeffs_needs_p(self, runner):
        assert runner.invoke(cli, ["frob-coeffs"]).exit_code == 2

    def test_unknown_format(self, runner):
        assert runner.invoke(cli, ["qbinom", "--format", "xml"]).exit_code == 2

    def test_failures(self, runner):
        """The Lucas suite has nothing to check over Z[t]."""
        result = runner.invoke(cli, ["verify", "--suite", "lucas", "--ring", "Zt"])

        assert result.exit_code == 1
        assert "1 of 1 cases failed" in result.output

    def test_negative_controls_pass(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "negative-controls", "--format", "text"])

        assert result.exit_code == 0
        assert "negative-controls" in result.output

    def test_divisibility_error(self, runner, mocker):
        mocker.patch("run_tdp.frob_coeff_table", side_effect=DivisibilityError("B_(1,1) is not integral"))

        result = runner.invoke(cli, ["frob-coeffs", "--p", "2"])

        assert result.exit_code == 3
        assert "falsified" in result.output

    def test_falsifier_in_report(self, runner, mocker):
        report = VerificationReport(
            suite="coefficients",
            cases=[VerificationCase(key="p=2/B-integral/1,1", passed=False, data={"error": "DivisibilityError"})],
        )
        mocker.patch("run_tdp.run_verification", return_value=report)

        result = runner.invoke(cli, ["verify", "--suite", "coefficients"])

        assert result.exit_code == 3


@pytest.mark.e2e
class TestOutputs:
    """--out and --record."""

    def test_out_file(self, runner, tmp_path):
        out = tmp_path / "tables" / "frob.json"

        result = runner.invoke(cli, ["frob-coeffs", "--p", "2", "--nmax", "1", "--out", str(out)])

        assert result.exit_code == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["params"] == {"p": 2, "nmax": 1}

    def test_record(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "negative-controls", "--record"])

        assert result.exit_code == 0
        assert "recorded run" in result.output

    def test_coefficient_cache(self, runner, monkeypatch):
        monkeypatch.setenv("TDP_USE_COEFFICIENT_CACHE", "true")

        first = runner.invoke(cli, ["frob-coeffs", "--p", "2", "--nmax", "1", "--format", "csv"])
        second = runner.invoke(cli, ["frob-coeffs", "--p", "2", "--nmax", "1", "--format", "csv"])

        assert first.exit_code == second.exit_code == 0
        assert _csv_lines(first.output) == _csv_lines(second.output)
        assert "B,1,1,1" in _csv_lines(first.output)
