"""Integration tests running named suites end to end through run_verification."""

import pytest

from src.errors import UnknownSuiteError
from src.models import Subcommand
from src.reporting import simpson_report
from src.storage import DatabaseManager
from src.verification import available_suites, has_falsifier, run_verification


@pytest.mark.integration
class TestSuites:
    """Each registered suite passes on small parameters."""

    def test_registry(self):
        assert {"examples", "negative-controls", "sqform-assoc", "coefficients", "simpson"} <= set(available_suites())

    def test_unknown_suite(self, make_config):
        with pytest.raises(UnknownSuiteError):
            run_verification(make_config(suite="nosuch"))

    def test_examples(self, make_config):
        """Closed-form values reproduce exactly."""
        report = run_verification(make_config(suite="examples"))

        assert report.cases
        assert report.failures == 0, [c.key for c in report.cases if not c.passed]

    def test_negative_controls(self, make_config):
        """Every expected failure is observed, and none leaks as a falsifier."""
        report = run_verification(make_config(suite="negative-controls"))

        assert report.ok
        assert not has_falsifier(report)
        assert any(c.key.startswith("corrupted-A/") for c in report.cases)

    def test_divided_ring_laws(self, make_config):
        report = run_verification(make_config(suite="sqform-assoc", ring="Zt", nmax=2))

        assert report.ok
        assert report.params["ring"] == "Zt"

    def test_coefficients(self, make_config):
        report = run_verification(make_config(suite="coefficients", p=2, nmax=3))

        assert report.ok

    def test_lucas(self, make_config):
        assert run_verification(make_config(suite="lucas", ring="CycF:3")).ok

    def test_lucas_needs_q_characteristic(self, make_config):
        """Z[t] has no Lucas factorization; the single case records why."""
        report = run_verification(make_config(suite="lucas", ring="Zt"))

        assert report.failures == 1
        assert report.cases[0].detail == "needs positive q-characteristic"

    def test_center(self, make_config):
        assert run_verification(make_config(suite="center", ring="CycF:2", degree=4)).ok

    @pytest.mark.slow
    @pytest.mark.timeout(120)
    def test_center_at_cube_root(self, make_config):
        assert run_verification(make_config(suite="center", ring="CycF:3", degree=6)).ok

    @pytest.mark.slow
    @pytest.mark.parametrize("suite", ["comdlef", "azumaya"])
    @pytest.mark.timeout(300)
    def test_phi_suites(self, make_config, suite):
        """Phi lands in the center and acts through the Azumaya matrices."""
        report = run_verification(make_config(suite=suite))

        assert report.cases
        assert report.failures == 0, [(c.key, c.detail) for c in report.cases if not c.passed]

    def test_cases_sorted(self, make_config):
        report = run_verification(make_config(suite="examples"))
        keys = [c.key for c in report.cases]

        assert keys == sorted(keys)


@pytest.mark.integration
class TestSimpsonReport:
    """Test the Simpson roundtrip report."""

    @pytest.mark.slow
    @pytest.mark.timeout(300)
    def test_default_suite_at_q_minus_one(self, make_config):
        report = simpson_report(make_config(Subcommand.SIMPSON, ring="CycF:2"))

        assert report.suite == "simpson/default"
        assert len(report.cases) == 8
        assert report.ok, [(c.key, c.detail) for c in report.cases if not c.passed]

    def test_unknown_higgs_suite(self, make_config):
        with pytest.raises(UnknownSuiteError):
            simpson_report(make_config(Subcommand.SIMPSON, ring="CycF:2", suite="nosuch"))


@pytest.mark.integration
class TestRecording:
    """Verification runs stored in DuckDB."""

    def test_record_examples_run(self, make_config, temp_db):
        report = run_verification(make_config(suite="negative-controls"))

        run_id = temp_db.insert_verification_run(report)

        assert temp_db.get_verification_run(run_id)["suite"] == "negative-controls"

    def test_default_path_from_settings(self, tmp_path):
        db = DatabaseManager()
        try:
            db.init_schema()
            assert db.db_path == tmp_path / "tdp.duckdb"
        finally:
            db.close()
