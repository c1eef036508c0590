"""Dense complex matrix kernel for systems of up to three qubits.

Everything here works on plain numpy arrays of complex128. The dimensions
in play are tiny (2, 4, 8, plus a transient 16 during the horizon embedding),
so clarity wins over vectorization tricks: the Hermitian eigensolver is a
plain cyclic Jacobi iteration owned by this module, with its tolerances
stated explicitly.

Basis convention: a three-qubit ket |abc> (a = Alice, b = Bob, c = Charlie's
exterior mode) lives at row/column index 4a + 2b + c, i.e. the basis is
ordered ascending from |000> to |111>. Some texts label the same basis
descending, |1> = |111> down to |8> = |000>; the two label helpers convert
between that one-based descending scheme and our internal index (they are
related by k -> 8 - k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MAX_DIM = 8

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_0, SIGMA_X, SIGMA_Y, SIGMA_Z)


def ket_index(a: int, b: int, c: int) -> int:
    """Internal index of |abc>."""
    return 4 * a + 2 * b + c


def from_descending_label(k: int) -> int:
    """Internal index of the one-based descending label k (|1> = |111>)."""
    if not 1 <= k <= 8:
        raise ValueError(f"descending label must be in 1..8, got {k}")
    return 8 - k


def to_descending_label(i: int) -> int:
    """One-based descending label of internal index i (|000> -> 8)."""
    if not 0 <= i <= 7:
        raise ValueError(f"internal index must be in 0..7, got {i}")
    return 8 - i


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def kron(a, b) -> np.ndarray:
    """Kronecker product, restricted to product dimension <= 8."""
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape[0] * b.shape[0] > MAX_DIM:
        raise ValueError(
            f"kron product dimension {a.shape[0] * b.shape[0]} exceeds {MAX_DIM}"
        )
    return np.kron(a, b)


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return _as_matrix(a).conj().T


def hs_norm(a) -> float:
    """Hilbert-Schmidt (Frobenius) norm sqrt(trace(A^dag A))."""
    a = _as_matrix(a)
    return float(math.sqrt(float(np.sum(np.abs(a) ** 2))))


def partial_trace(rho, which: int) -> np.ndarray:
    """Trace out qubit `which` (0-based) of a state on k qubits.

    The input dimension must be a power of two; the result acts on the
    remaining k-1 qubits in their original order.
    """
    rho = _as_matrix(rho)
    dim = rho.shape[0]
    k = dim.bit_length() - 1
    if 2**k != dim or k < 1:
        raise ValueError(f"dimension {dim} is not a power of two >= 2")
    if not 0 <= which < k:
        raise ValueError(f"subsystem index {which} out of range for {k} qubits")
    t = rho.reshape((2,) * (2 * k))
    t = np.trace(t, axis1=which, axis2=k + which)
    return t.reshape(dim // 2, dim // 2)


def hermitian_eigenvalues(a, *, off_tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix of dimension <= 8, ascending.

    Cyclic Jacobi with complex rotations; iterates until the off-diagonal
    Frobenius mass drops below `off_tol`. Inputs farther than 1e-10 from
    Hermitian are rejected.
    """
    a = _as_matrix(a)
    n = a.shape[0]
    if n > MAX_DIM:
        raise ValueError(f"eigensolver supports dim <= {MAX_DIM}, got {n}")
    herm_defect = float(np.max(np.abs(a - a.conj().T)))
    if herm_defect > 1e-10:
        raise ValueError(f"matrix is not Hermitian (max defect {herm_defect:.3e})")

    w = 0.5 * (a + a.conj().T)
    if n == 1:
        return np.array([w[0, 0].real])

    # elements below this cannot lift the off-diagonal mass above off_tol
    skip_tol = off_tol / (n * n)
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.abs(w[off_mask]) ** 2)))
        if off <= off_tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = complex(w[p, q])
                absa = abs(apq)
                if absa <= skip_tol:
                    continue
                phase = apq / absa
                tau = float(w[q, q].real - w[p, p].real) / (2.0 * absa)
                # smaller-magnitude root of t^2 - 2*tau*t - 1 = 0
                if abs(tau) > 1e100:
                    t = -0.5 / tau
                elif tau >= 0.0:
                    t = -1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                u = np.eye(n, dtype=complex)
                u[p, p] = c
                u[p, q] = -s * phase
                u[q, p] = s * np.conj(phase)
                u[q, q] = c
                w = u.conj().T @ w @ u
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return np.sort(w.diagonal().real)


@dataclass(frozen=True)
class DensityCheck:
    """Outcome of a density-matrix validation.

    `violation` names the first failed invariant ("hermiticity", "trace" or
    "positivity") and `magnitude` how badly it failed; both are None/0 when
    the matrix passes.
    """

    ok: bool
    violation: str | None = None
    magnitude: float = 0.0


class DensityViolationError(ValueError):
    def __init__(self, check: DensityCheck):
        self.check = check
        super().__init__(
            f"density matrix violates {check.violation} (magnitude {check.magnitude:.3e})"
        )


def check_density(rho) -> DensityCheck:
    """Check Hermiticity, unit trace and positive semidefiniteness, in that order."""
    rho = _as_matrix(rho)
    if rho.shape[0] != MAX_DIM:
        raise ValueError(f"expected an 8x8 matrix, got {rho.shape}")
    herm = float(np.max(np.abs(rho - rho.conj().T)))
    if herm > HERMITICITY_TOL:
        return DensityCheck(False, "hermiticity", herm)
    tr = complex(np.trace(rho))
    tr_defect = abs(tr - 1.0)
    if tr_defect > TRACE_TOL:
        return DensityCheck(False, "trace", float(tr_defect))
    lam_min = float(hermitian_eigenvalues(rho)[0])
    if lam_min < EIGENVALUE_FLOOR:
        return DensityCheck(False, "positivity", abs(lam_min))
    return DensityCheck(True)


def validate_density(rho) -> np.ndarray:
    """Return rho as an 8x8 complex array, raising DensityViolationError if invalid."""
    rho = _as_matrix(rho)
    check = check_density(rho)
    if not check.ok:
        raise DensityViolationError(check)
    return rho
