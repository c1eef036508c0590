import math

import numpy as np
import pytest

from qslt.spacetime import (
    Scenario,
    hawking_temperature,
    kruskal_coeffs,
    kruskal_embed_and_trace,
    physical_state,
)

INV_SQRT2 = 1.0 / math.sqrt(2.0)


def test_hawking_temperature_values():
    assert abs(hawking_temperature(1.0 / (8.0 * math.pi)) - 1.0) <= 1e-15
    assert abs(hawking_temperature(1.0) - 1.0 / (8.0 * math.pi)) <= 1e-15
    assert abs(hawking_temperature(1.0) - 0.039788735772973836) <= 1e-15


def test_hawking_temperature_monotone_and_guarded():
    masses = [0.1, 1.0, 10.0, 1000.0]
    temps = [hawking_temperature(m) for m in masses]
    assert all(b < a for a, b in zip(temps[:-1], temps[1:]))
    with pytest.raises(ValueError):
        hawking_temperature(0.0)
    with pytest.raises(ValueError):
        hawking_temperature(-1.0)


def test_kruskal_coeffs_limits():
    cold = kruskal_coeffs(1.0, 0.0)
    assert (cold.m, cold.n) == (1.0, 0.0)
    near_cold = kruskal_coeffs(1.0, 1e-3)
    assert abs(near_cold.m - 1.0) <= 1e-12 and near_cold.n <= 1e-12
    hot = kruskal_coeffs(1.0, 1e9)
    assert abs(hot.m - INV_SQRT2) <= 1e-9
    assert abs(hot.n - INV_SQRT2) <= 1e-9


def test_kruskal_coeffs_reference_point():
    co = kruskal_coeffs(1.0, 3.0)
    assert abs(co.m - (1.0 + math.exp(-1.0 / 3.0)) ** -0.5) <= 1e-15
    assert abs(co.m - 0.7633) <= 5e-5


def test_kruskal_coeffs_normalized_and_ordered():
    for t in np.logspace(-3, 3, 25):
        co = kruskal_coeffs(1.0, float(t))
        assert abs(co.m**2 + co.n**2 - 1.0) <= 1e-14
        assert INV_SQRT2 < co.m <= 1.0
        assert 0.0 <= co.n < INV_SQRT2


def test_kruskal_coeffs_rejects_bad_inputs():
    with pytest.raises(ValueError):
        kruskal_coeffs(0.0, 1.0)
    with pytest.raises(ValueError):
        kruskal_coeffs(1.0, -0.1)


def test_scenario_validation():
    with pytest.raises(ValueError):
        Scenario(alpha=1.5, omega=1.0, temperature=1.0)
    with pytest.raises(ValueError):
        Scenario(alpha=0.5, omega=0.0, temperature=1.0)
    with pytest.raises(ValueError):
        Scenario(alpha=0.5, omega=1.0)
    with pytest.raises(ValueError):
        Scenario(alpha=0.5, omega=1.0, temperature=1.0, mass=1.0)


def test_scenario_mass_fills_temperature():
    s = Scenario(alpha=0.5, omega=1.0, mass=2.0)
    assert abs(s.temperature - hawking_temperature(2.0)) <= 1e-18
    consistent = Scenario(alpha=0.5, omega=1.0, temperature=hawking_temperature(2.0), mass=2.0)
    assert consistent.mass == 2.0
    assert abs(Scenario(alpha=0.6, omega=1.0, temperature=3.0).beta - 0.8) <= 1e-15


def test_physical_state_product_limit():
    s = Scenario(alpha=1.0, omega=1.0, temperature=3.0)
    rho = physical_state(s)
    co = s.coeffs()
    expected = np.zeros((8, 8), dtype=complex)
    expected[0, 0] = co.m**2
    expected[1, 1] = co.n**2
    assert np.max(np.abs(rho - expected)) <= 1e-15


def test_physical_state_alpha_zero():
    rho = physical_state(Scenario(alpha=0.0, omega=1.0, temperature=3.0))
    expected = np.zeros((8, 8), dtype=complex)
    expected[7, 7] = 1.0
    assert np.max(np.abs(rho - expected)) == 0.0


def test_physical_state_zero_temperature_is_pure_ghz():
    alpha = 0.25
    s = Scenario(alpha=alpha, omega=1.0, temperature=0.0)
    rho = physical_state(s)
    beta = s.beta
    expected = np.zeros((8, 8), dtype=complex)
    expected[0, 0] = alpha * alpha
    expected[7, 7] = beta * beta
    expected[0, 7] = expected[7, 0] = alpha * beta
    assert np.max(np.abs(rho - expected)) <= 1e-15


def test_physical_state_infinite_temperature_weights():
    s = Scenario(alpha=INV_SQRT2, omega=1.0, temperature=1e12)
    rho = physical_state(s)
    assert abs(rho[0, 0].real - 0.25) <= 1e-9
    assert abs(rho[1, 1].real - 0.25) <= 1e-9
    assert abs(rho[7, 7].real - 0.5) <= 1e-12
    assert abs(rho[0, 7].real - 2.0**-1.5) <= 1e-9


def test_embedding_matches_direct_construction():
    for alpha in (0.0, 0.25, INV_SQRT2, 1.0):
        for t in (0.1, 1.0, 3.0, 10.0):
            for omega in (0.5, 1.0, 2.0):
                s = Scenario(alpha=alpha, omega=omega, temperature=t)
                diff = np.max(np.abs(physical_state(s) - kruskal_embed_and_trace(s)))
                assert diff <= 1e-13


def test_physical_state_trace_and_horizon_population():
    for alpha in (0.1, 0.25, 0.7):
        temps = (0.2, 1.0, 3.0, 10.0, 50.0)
        pops = []
        for t in temps:
            s = Scenario(alpha=alpha, omega=1.0, temperature=t)
            rho = physical_state(s)
            assert abs(np.trace(rho).real - 1.0) <= 1e-14
            co = s.coeffs()
            assert abs(rho[1, 1].real - alpha**2 * co.n**2) <= 1e-15
            pops.append(rho[1, 1].real)
        assert all(b > a for a, b in zip(pops[:-1], pops[1:]))
