"""End-to-end checks of the command line tool.

The binary path comes from the SVET_CLI environment variable (set by the
ctest registration); falling back to `svet` on PATH keeps the file runnable
by hand.
"""

import csv
import json
import math
import os
import subprocess

import pytest

CLI = os.environ.get("SVET_CLI", "svet")

SWEEP_HEADER = (
    "family,N,alpha,tau,variant,lhv_bound,analytic_max,numeric_max,violates,"
    "optimizer_restarts_converged"
)


def run(*args, **kwargs):
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=600, **kwargs
    )


def gghz_bound(n, alpha):
    product = 2 ** ((n + 1) // 2) * (abs(math.cos(2 * alpha)) if n % 2 else 1.0)
    equator = math.sqrt(2.0) * 2 ** (n - 1) * math.sin(2 * alpha)
    return max(product, equator)


class TestNuTable:
    def test_table_contents(self):
        res = run("nu-table")
        assert res.returncode == 0
        lines = res.stdout.strip().splitlines()
        assert lines[0] == "w,nu_plus,nu_minus"
        assert len(lines) == 17
        rows = [line.split(",") for line in lines[1:]]
        plus = [int(r[1]) for r in rows]
        minus = [int(r[2]) for r in rows]
        assert plus[:8] == [1, -1, -1, 1, 1, -1, -1, 1]
        assert minus[:8] == [1, 1, -1, -1, 1, 1, -1, -1]
        # period four
        assert plus == plus[:4] * 4
        assert minus == minus[:4] * 4


class TestBound:
    def test_gghz_tau_boundary(self):
        res = run("bound", "--family", "gghz", "--n", "5", "--tau", "0.5")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["analytic_max"] == pytest.approx(16.0, abs=1e-9)
        assert report["lhv_bound"] == 16.0
        assert report["violates"] is False
        assert report["tangle"] == pytest.approx(0.5, abs=1e-12)
        assert report["numeric_max"] is None

    def test_ms_biseparable(self):
        res = run("bound", "--family", "ms", "--n", "4", "--alpha", "0")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["analytic_max"] == pytest.approx(8.0)
        assert report["violates"] is False

    def test_gghz_alpha_peak(self):
        res = run("bound", "--family", "gghz", "--n", "3", "--alpha",
                  "0.7853981634")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["analytic_max"] == pytest.approx(4 * math.sqrt(2), rel=1e-9)
        assert report["algebraic_cap"] == pytest.approx(4 * math.sqrt(2))
        assert report["violates"] is True
        assert report["family"]["family"] == "gghz"
        assert report["family"]["num_qubits"] == 3

    def test_ms_odd_tangle_is_null(self):
        res = run("bound", "--family", "ms", "--n", "5", "--alpha", "0.3")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        assert report["tangle"] is None
        assert report["violates"] is True

    def test_parameter_errors(self):
        assert run("bound", "--family", "gghz", "--n", "3").returncode == 2
        assert (
            run("bound", "--family", "gghz", "--n", "3", "--alpha", "0.1",
                "--tau", "0.5").returncode
            == 2
        )
        assert (
            run("bound", "--family", "gghz", "--n", "1", "--alpha", "0.1").returncode
            == 2
        )
        assert (
            run("bound", "--family", "gghz", "--n", "3", "--alpha", "9").returncode
            == 2
        )
        assert (
            run("bound", "--family", "nope", "--n", "3", "--alpha", "0.1").returncode
            == 2
        )
        # tangle is undefined for odd-N slices above three qubits
        assert (
            run("bound", "--family", "ms", "--n", "5", "--tau", "0.4").returncode
            == 2
        )

    def test_unknown_subcommand_and_flag(self):
        assert run("frobnicate").returncode == 2
        assert run("nu-table", "--bogus").returncode == 2


class TestSweep:
    def test_csv_header_and_analytic_column(self):
        res = run("sweep", "--family", "gghz", "--n", "4", "--points", "25")
        assert res.returncode == 0
        lines = res.stdout.strip().splitlines()
        assert lines[0] == SWEEP_HEADER
        rows = list(csv.DictReader(lines))
        assert len(rows) == 25
        for row in rows:
            alpha = float(row["alpha"])
            assert float(row["analytic_max"]) == pytest.approx(
                gghz_bound(4, alpha), abs=1e-12
            )
            assert row["numeric_max"] == ""
            assert row["optimizer_restarts_converged"] == ""
            assert row["family"] == "gghz"
            assert float(row["tau"]) == pytest.approx(
                math.sin(2 * alpha) ** 2, abs=1e-12
            )
            assert row["violates"] == (
                "true" if gghz_bound(4, alpha) > 8 + 1e-12 else "false"
            )

    def test_ms_analytic_column(self):
        res = run("sweep", "--family", "ms", "--n", "3", "--points", "11")
        assert res.returncode == 0
        rows = list(csv.DictReader(res.stdout.strip().splitlines()))
        for row in rows:
            alpha = float(row["alpha"])
            expected = 4 * math.sqrt(1 + math.sin(alpha) ** 2)
            assert float(row["analytic_max"]) == pytest.approx(expected, abs=1e-12)

    def test_tau_grid_crossing_flips_once(self):
        res = run(
            "sweep", "--family", "gghz", "--n", "5",
            "--tau-start", "0.3", "--tau-stop", "0.7", "--points", "9",
        )
        assert res.returncode == 0
        rows = list(csv.DictReader(res.stdout.strip().splitlines()))
        flags = [row["violates"] == "true" for row in rows]
        flips = sum(1 for a, b in zip(flags, flags[1:]) if a != b)
        assert flips == 1
        assert flags[0] is False
        assert flags[-1] is True
        taus = [float(row["tau"]) for row in rows]
        assert taus[0] == pytest.approx(0.3, abs=1e-12)
        assert taus[-1] == pytest.approx(0.7, abs=1e-12)

    def test_optimizer_columns(self):
        res = run(
            "sweep", "--family", "gghz", "--n", "3", "--points", "5",
            "--optimize", "--restarts", "8", "--seed", "3",
        )
        assert res.returncode == 0
        rows = list(csv.DictReader(res.stdout.strip().splitlines()))
        for row in rows:
            numeric = float(row["numeric_max"])
            assert numeric == pytest.approx(float(row["analytic_max"]), abs=1e-5)
            assert 1 <= int(row["optimizer_restarts_converged"]) <= 8
            assert row["variant"] in ("plus", "minus")

    def test_json_format(self):
        res = run(
            "sweep", "--family", "gghz", "--n", "3", "--n-max", "4",
            "--points", "3", "--format", "json",
        )
        assert res.returncode == 0
        rows = json.loads(res.stdout)
        assert len(rows) == 6
        expected_keys = set(SWEEP_HEADER.split(","))
        for row in rows:
            assert set(row.keys()) == expected_keys
            assert row["numeric_max"] is None
            assert isinstance(row["violates"], bool)
        assert {row["N"] for row in rows} == {3, 4}

    def test_out_file(self, tmp_path):
        target = tmp_path / "sweep.csv"
        res = run(
            "sweep", "--family", "gghz", "--n", "3", "--points", "5",
            "--out", str(target),
        )
        assert res.returncode == 0
        content = target.read_text().strip().splitlines()
        assert content[0] == SWEEP_HEADER
        assert len(content) == 6

    def test_out_io_error(self):
        res = run(
            "sweep", "--family", "gghz", "--n", "3", "--points", "5",
            "--out", "/nonexistent-dir/sweep.csv",
        )
        assert res.returncode == 3
        assert "error" in res.stderr.lower()

    def test_grid_validation(self):
        assert (
            run("sweep", "--family", "gghz", "--n", "3", "--points", "1").returncode
            == 2
        )
        assert (
            run("sweep", "--family", "gghz", "--n", "4", "--n-max", "3").returncode
            == 2
        )


class TestOptimize:
    def test_ghz_peak(self):
        res = run(
            "optimize", "--family", "gghz", "--n", "3",
            "--alpha", str(math.pi / 4), "--restarts", "16", "--seed", "1",
        )
        assert res.returncode == 0
        out = json.loads(res.stdout)
        assert out["best_value"] == pytest.approx(4 * math.sqrt(2), abs=1e-6)
        assert out["best_variant"] in ("plus", "minus")
        assert len(out["best_settings"]) == 3
        for qubit in out["best_settings"]:
            assert set(qubit.keys()) == {"theta0", "phi0", "theta1", "phi1"}
        assert out["stationarity_residual"] < 1e-5
        assert 1 <= out["restarts_converged"] <= 16

    def test_product_branch(self):
        res = run(
            "optimize", "--family", "gghz", "--n", "4", "--alpha", "0",
            "--restarts", "8",
        )
        assert res.returncode == 0
        out = json.loads(res.stdout)
        assert out["best_value"] == pytest.approx(4.0, abs=1e-6)

    def test_ms_value(self):
        res = run(
            "optimize", "--family", "ms", "--n", "5",
            "--alpha", str(math.pi / 3), "--restarts", "16", "--seed", "2",
        )
        assert res.returncode == 0
        out = json.loads(res.stdout)
        assert out["best_value"] == pytest.approx(16 * math.sqrt(1.75), abs=1e-4)

    def test_parameter_errors(self):
        assert run("optimize", "--family", "gghz", "--n", "3").returncode == 2
        assert (
            run("optimize", "--family", "gghz", "--n", "20", "--alpha",
                "0.3").returncode
            == 2
        )


class TestVerify:
    def test_quick_suite_passes(self):
        res = run("verify", "--level", "quick")
        assert res.returncode == 0, res.stdout + res.stderr
        assert "FAIL" not in res.stdout
        assert res.stdout.count("PASS") >= 10

    def test_level_validation(self):
        assert run("verify", "--level", "bogus").returncode == 2
