"""Pauli noise channels on Alice's and Bob's qubits.

Both qubits pass independently through the same single-qubit Pauli channel
while Charlie's mode is left alone, so the evolved state is the sixteen-term
double Kraus sum

    rho_t = sum_{i1,i2} p_{i1} p_{i2}
            (sigma_{i1} x sigma_{i2} x sigma_0) rho (sigma_{i1} x sigma_{i2} x sigma_0).

Channel kinds and their probability vectors (p0, p1, p2, p3) over
(identity, sigma_x, sigma_y, sigma_z):

    BFC   bit flip         (p, 1-p, 0, 0)
    BPFC  bit-phase flip   (p, 0, 1-p, 0)
    PFC   phase flip       (p, 0, 0, 1-p)
    DPC   depolarizing     (p, (1-p)/3, (1-p)/3, (1-p)/3)

p runs from 1 (no noise) down to the final value p_tau, and every element of
the evolved matrix is a quadratic in p. `apply_channel` performs the literal
Kraus sum and is the ground truth; `closed_form` builds the same matrix from
the per-element quadratic coefficients (shared with the speed kernel), and
`drho_dp` is its exact p-derivative. Any disagreement between the two routes
is a transcription defect in the coefficient table.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import kernel
from .qmatrix import PAULI, kron
from .spacetime import Scenario


class ChannelKind(enum.Enum):
    DPC = "DPC"
    BFC = "BFC"
    BPFC = "BPFC"
    PFC = "PFC"


_KIND_CODE = {
    ChannelKind.DPC: kernel.KIND_DPC,
    ChannelKind.BFC: kernel.KIND_BFC,
    ChannelKind.BPFC: kernel.KIND_BPFC,
    ChannelKind.PFC: kernel.KIND_PFC,
}


def kind_code(kind: ChannelKind) -> int:
    """Integer code of a channel kind, as used by the speed kernel."""
    return _KIND_CODE[kind]


@dataclass(frozen=True)
class ChannelSpec:
    kind: ChannelKind
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"decoherence parameter must be in [0, 1], got {self.p}")


def pauli_probs(kind: ChannelKind, p: float) -> tuple[float, float, float, float]:
    """Probability weights (p0, p1, p2, p3) of the four Pauli operators."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"decoherence parameter must be in [0, 1], got {p}")
    q = 1.0 - p
    if kind is ChannelKind.BFC:
        return (p, q, 0.0, 0.0)
    if kind is ChannelKind.BPFC:
        return (p, 0.0, q, 0.0)
    if kind is ChannelKind.PFC:
        return (p, 0.0, 0.0, q)
    return (p, q / 3.0, q / 3.0, q / 3.0)


def apply_channel(rho: np.ndarray, spec: ChannelSpec) -> np.ndarray:
    """Sixteen-term Kraus sum; kept fully unrolled for auditability."""
    probs = pauli_probs(spec.kind, spec.p)
    out = np.zeros((8, 8), dtype=complex)
    for i1, w1 in enumerate(probs):
        for i2, w2 in enumerate(probs):
            op = kron(kron(PAULI[i1], PAULI[i2]), PAULI[0])
            out += (w1 * w2) * (op @ rho @ op)
    return out


def _table(kind: ChannelKind, scenario: Scenario):
    m = scenario.coeffs().m
    return kernel.element_table(kind_code(kind), scenario.alpha, m)


def closed_form(kind: ChannelKind, scenario: Scenario, p: float) -> np.ndarray:
    """Evolved density matrix built from the per-element quadratics in p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"decoherence parameter must be in [0, 1], got {p}")
    rho = np.zeros((8, 8), dtype=complex)
    for i, j, _, c0, c1, c2 in _table(kind, scenario):
        v = c0 + p * (c1 + p * c2)
        rho[i, j] = v
        if i != j:
            rho[j, i] = v
    return rho


def drho_dp(kind: ChannelKind, scenario: Scenario, p: float) -> np.ndarray:
    """Exact elementwise derivative of `closed_form` with respect to p.

    Every element is a quadratic, so this is c1 + 2 c2 p per element;
    the result is Hermitian and traceless.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"decoherence parameter must be in [0, 1], got {p}")
    out = np.zeros((8, 8), dtype=complex)
    for i, j, _, _, c1, c2 in _table(kind, scenario):
        v = c1 + 2.0 * c2 * p
        out[i, j] = v
        if i != j:
            out[j, i] = v
    return out
