import math

import numpy as np
import pytest

from qslt.channels import ChannelKind, closed_form
from qslt.qmatrix import (
    PAULI,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    DensityViolationError,
    check_density,
    dagger,
    from_descending_label,
    hermitian_eigenvalues,
    hs_norm,
    kron,
    partial_trace,
    to_descending_label,
    validate_density,
)
from qslt.spacetime import Scenario, kruskal_coeffs

RNG = np.random.default_rng(20240811)


def random_complex(n):
    return RNG.normal(size=(n, n)) + 1j * RNG.normal(size=(n, n))


def random_density(k):
    g = random_complex(2**k)
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def test_label_conversion_roundtrip():
    assert from_descending_label(1) == 7  # |111>
    assert from_descending_label(8) == 0  # |000>
    for k in range(1, 9):
        assert to_descending_label(from_descending_label(k)) == k
    with pytest.raises(ValueError):
        from_descending_label(0)
    with pytest.raises(ValueError):
        to_descending_label(8)


def test_kron_identity():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_double_bit_flip():
    rho00 = np.zeros((4, 4), dtype=complex)
    rho00[0, 0] = 1.0
    op = kron(SIGMA_X, SIGMA_X)
    out = op @ rho00 @ op
    expected = np.zeros((4, 4), dtype=complex)
    expected[3, 3] = 1.0
    assert np.allclose(out, expected, atol=0)


def test_kron_sigma_z_flips_bell_coherence():
    bell = np.zeros((4, 4), dtype=complex)
    bell[0, 0] = bell[3, 3] = 0.5
    bell[0, 3] = bell[3, 0] = 0.5
    op = kron(SIGMA_Z, np.eye(2))
    out = op @ bell @ op
    # hand oracle: row/column 3 picks up a sign, diagonal untouched
    expected = bell.copy()
    expected[0, 3] = expected[3, 0] = -0.5
    assert np.max(np.abs(out - expected)) == 0.0


def test_kron_rejects_dimension_overflow():
    with pytest.raises(ValueError):
        kron(np.eye(4), np.eye(4))
    assert kron(np.eye(2), kron(np.eye(2), np.eye(2))).shape == (8, 8)


def test_kron_associative_and_trace_multiplicative():
    for _ in range(20):
        a, b, c = (random_complex(2) for _ in range(3))
        left = kron(kron(a, b), c)
        right = kron(a, kron(b, c))
        assert np.max(np.abs(left - right)) <= 1e-12
        assert abs(np.trace(kron(a, b)) - np.trace(a) * np.trace(b)) <= 1e-12


def test_dagger_basics():
    assert np.array_equal(dagger(np.eye(3)), np.eye(3))
    assert np.array_equal(dagger(SIGMA_Y), SIGMA_Y)
    for n in (2, 4, 8):
        for _ in range(5):
            a = random_complex(n)
            assert np.array_equal(dagger(dagger(a)), a)


def test_hs_norm_simple_values():
    assert hs_norm(np.zeros((4, 4))) == 0.0
    assert abs(hs_norm(np.eye(8)) - math.sqrt(8.0)) <= 1e-15


def test_hs_norm_of_phase_flip_difference():
    # difference between the noiseless state and its phase-flipped image:
    # two symmetric coherences change by 4 p (1-p) alpha beta m each
    alpha = 1.0 / math.sqrt(2.0)
    p = 0.25
    m = kruskal_coeffs(1.0, 3.0).m
    beta = math.sqrt(1.0 - alpha * alpha)
    delta = 4.0 * p * (1.0 - p) * alpha * beta * m
    diff = np.zeros((8, 8), dtype=complex)
    diff[0, 7] = diff[7, 0] = -delta
    # explicit Frobenius sum as the oracle
    expected = math.sqrt(2.0 * delta * delta)
    assert abs(hs_norm(diff) - expected) <= 1e-15
    assert abs(expected - 4.0 * math.sqrt(2.0) * (0.25 * 0.75) * 0.5 * m) <= 1e-15


def test_hs_norm_squared_equals_gram_eigenvalue_sum():
    for n in (2, 4, 8):
        for _ in range(5):
            a = random_complex(n)
            gram_eigs = hermitian_eigenvalues(dagger(a) @ a)
            assert abs(hs_norm(a) ** 2 - float(np.sum(gram_eigs))) <= 1e-10 * hs_norm(a) ** 2


def test_partial_trace_product_state():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0  # |00><00|
    reduced = partial_trace(rho, which=1)
    assert np.allclose(reduced, [[1, 0], [0, 0]], atol=0)


def test_partial_trace_maximally_entangled():
    bell = np.zeros((4, 4), dtype=complex)
    bell[0, 0] = bell[3, 3] = bell[0, 3] = bell[3, 0] = 0.5
    for which in (0, 1):
        assert np.max(np.abs(partial_trace(bell, which) - np.eye(2) / 2)) <= 1e-15


def test_partial_trace_preserves_trace():
    for k in (2, 3, 4):
        for which in range(k):
            rho = random_density(k)
            assert abs(np.trace(partial_trace(rho, which)) - 1.0) <= 1e-14


def test_partial_trace_rejects_bad_inputs():
    with pytest.raises(ValueError):
        partial_trace(np.eye(4), which=2)
    with pytest.raises(ValueError):
        partial_trace(np.eye(3), which=0)


def test_eigenvalues_diagonal_and_pauli():
    assert np.allclose(hermitian_eigenvalues(np.diag([3.0, 1.0, 2.0])), [1, 2, 3], atol=1e-12)
    assert np.allclose(hermitian_eigenvalues(SIGMA_X), [-1, 1], atol=1e-12)
    assert np.allclose(hermitian_eigenvalues(SIGMA_Y), [-1, 1], atol=1e-12)


def test_eigenvalues_satisfy_characteristic_polynomial():
    for n in (2, 3, 4):
        for _ in range(5):
            a = random_complex(n)
            h = 0.5 * (a + a.conj().T)
            for lam in hermitian_eigenvalues(h):
                assert abs(np.linalg.det(h - lam * np.eye(n))) <= 1e-8


def test_eigenvalues_reject_non_hermitian_and_large():
    with pytest.raises(ValueError):
        hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        hermitian_eigenvalues(np.eye(16))


def test_dressed_state_spectrum_is_rank_two():
    # the accessible state is a pure four-mode state traced over one qubit,
    # so its rank is at most 2: the |000>/|111> block is exactly singular
    # (its determinant is alpha^2 m^2 beta^2 - (alpha beta m)^2 = 0) and the
    # nonzero eigenvalues are alpha^2 n^2 and alpha^2 m^2 + beta^2
    from qslt.spacetime import physical_state

    s = Scenario(alpha=0.25, omega=1.0, temperature=3.0)
    eigs = hermitian_eigenvalues(physical_state(s))
    co = s.coeffs()
    expected_nonzero = sorted(
        (s.alpha**2 * co.n**2, s.alpha**2 * co.m**2 + s.beta**2)
    )
    assert np.max(np.abs(eigs[:6])) <= 1e-12
    assert np.allclose(eigs[6:], expected_nonzero, atol=1e-12)
    assert abs(float(np.sum(eigs)) - 1.0) <= 1e-12


def test_validate_density_accepts_maximally_mixed():
    rho = validate_density(np.eye(8) / 8.0)
    assert rho.shape == (8, 8)


def test_validate_density_trace_violation():
    bad = np.zeros((8, 8), dtype=complex)
    bad[0, 0] = 2.0
    check = check_density(bad)
    assert not check.ok
    assert check.violation == "trace"
    assert abs(check.magnitude - 1.0) <= 1e-15
    with pytest.raises(DensityViolationError) as err:
        validate_density(bad)
    assert err.value.check.violation == "trace"


def test_validate_density_hermiticity_violation():
    bad = np.eye(8, dtype=complex) / 8.0
    bad[0, 1] = 1e-3
    check = check_density(bad)
    assert check.violation == "hermiticity"
    assert abs(check.magnitude - 1e-3) <= 1e-15


def test_validate_density_positivity_violation():
    bad = np.diag([1.5, -0.5, 0, 0, 0, 0, 0, 0]).astype(complex)
    check = check_density(bad)
    assert check.violation == "positivity"
    assert abs(check.magnitude - 0.5) <= 1e-12


def test_validate_density_accepts_depolarized_state():
    s = Scenario(alpha=0.25, omega=1.0, temperature=3.0)
    validate_density(closed_form(ChannelKind.DPC, s, 0.3))


def test_pauli_constants_are_involutions():
    for sigma in PAULI:
        assert np.max(np.abs(sigma @ sigma - np.eye(2))) == 0.0
