"""Smoke tests for the python bindings."""

import math

import pytest

import svet


def test_module_surface():
    assert svet.__version__
    for name in (
        "StateVector", "BlochDirection", "QubitSettings", "MeasurementSettings",
        "Variant", "Family", "FamilyParameter", "OptimizerConfig",
        "gghz", "ms", "expectation_fast", "expectation_bruteforce", "nu",
        "lhv_bound", "algebraic_cap", "gghz_bound_alpha", "gghz_bound_tangle",
        "ms_bound", "optimal_settings_gghz", "hk_bounds",
        "maximize", "maximize_both", "violation_report", "family_tangle",
        "random_settings", "run_acceptance", "run_all_checks",
    ):
        assert hasattr(svet, name), name


def test_nu_values():
    assert [svet.nu(w, svet.Variant.plus) for w in range(4)] == [1, -1, -1, 1]
    assert [svet.nu(w, svet.Variant.minus) for w in range(4)] == [1, 1, -1, -1]


def test_bounds_match_closed_forms():
    assert svet.lhv_bound(5) == 16.0
    assert svet.algebraic_cap(5) == pytest.approx(16 * math.sqrt(2))
    alpha = 0.31
    expected = max(
        8 * abs(math.cos(2 * alpha)), 8 * math.sqrt(2) * math.sin(2 * alpha)
    )
    assert svet.gghz_bound_alpha(4, alpha) == pytest.approx(expected, abs=1e-12)
    assert svet.ms_bound(4, alpha) == pytest.approx(
        8 * math.sqrt(1 + math.sin(alpha) ** 2), abs=1e-12
    )
    tau = math.sin(2 * alpha) ** 2
    assert svet.gghz_bound_tangle(4, tau) == pytest.approx(
        svet.gghz_bound_alpha(4, alpha), abs=1e-12
    )


def test_state_vectors():
    psi = svet.gghz(3, 0.4)
    assert psi.num_qubits == 3
    assert psi.dim == 8
    assert psi.is_normalized()
    amps = psi.amplitudes
    assert amps[0] == pytest.approx(math.cos(0.4))
    assert amps[7] == pytest.approx(math.sin(0.4))

    chi = svet.ms(4, 0.25)
    assert chi.norm() == pytest.approx(1.0)
    assert chi.amplitudes[0] == pytest.approx(1 / math.sqrt(2))


def test_expectation_attains_bound():
    for n, alpha in ((3, 0.5), (4, 0.2), (5, math.pi / 4)):
        psi = svet.gghz(n, alpha)
        bound = svet.gghz_bound_alpha(n, alpha)
        best = max(
            abs(svet.expectation_fast(psi, svet.optimal_settings_gghz(n, alpha, v), v))
            for v in (svet.Variant.plus, svet.Variant.minus)
        )
        assert best == pytest.approx(bound, abs=1e-10)


def test_maximize_small():
    psi = svet.gghz(3, math.pi / 4)
    config = svet.OptimizerConfig()
    config.restarts = 8
    config.seed = 11
    result = svet.maximize(psi, svet.Variant.plus, config)
    assert result.best_value == pytest.approx(4 * math.sqrt(2), abs=1e-6)
    assert result.restarts_converged >= 1
    assert result.best_settings.num_qubits == 3

    both = svet.maximize_both(psi, config)
    assert both.best_value == pytest.approx(4 * math.sqrt(2), abs=1e-6)


def test_tangle_helpers():
    assert svet.family_tangle(
        svet.FamilyParameter(svet.Family.gghz, 4, 0.3)
    ) == pytest.approx(math.sin(0.6) ** 2)
    assert svet.family_tangle(svet.FamilyParameter(svet.Family.ms, 5, 0.3)) is None


def test_violation_report():
    report = svet.violation_report(
        svet.FamilyParameter(svet.Family.gghz, 6, math.pi / 4)
    )
    assert report.lhv_bound == 32.0
    assert report.analytic_max == pytest.approx(32 * math.sqrt(2))
    assert report.violates
    assert report.tangle == pytest.approx(1.0)
    assert report.numeric_max is None


def test_random_settings_deterministic():
    a = svet.random_settings(4, 99)
    b = svet.random_settings(4, 99)
    assert a.angles() == b.angles()
    assert len(a.angles()) == 4
    for theta0, phi0, theta1, phi1 in a.angles():
        for theta in (theta0, theta1):
            assert 0 <= theta <= math.pi
        for phi in (phi0, phi1):
            assert 0 <= phi < 2 * math.pi
