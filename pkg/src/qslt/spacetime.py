"""Hawking-dressed three-qubit states outside a Schwarzschild horizon.

Alice, Bob and Charlie start from the GHZ-family state
alpha|000> + beta|111> (beta = sqrt(1 - alpha^2)) in flat space; Charlie
then hovers near the horizon of a black hole of Hawking temperature
T = 1/(8 pi M). For a fermionic mode of frequency omega the Kruskal vacuum
and one-particle states decompose over the exterior (I) and interior (II)
Schwarzschild modes as

    |0>_K = m |0>_I |0>_II + n |1>_I |1>_II,      |1>_K = |1>_I |0>_II,

with m = (e^(-omega/T) + 1)^(-1/2) and n = (e^(omega/T) + 1)^(-1/2).
Tracing out the causally disconnected interior leaves the physically
accessible state on (Alice, Bob, Charlie-exterior):

    alpha^2 m^2 |000><000| + alpha^2 n^2 |001><001| + beta^2 |111><111|
    + alpha beta m (|000><111| + |111><000|).

`physical_state` builds that matrix directly; `kruskal_embed_and_trace`
rebuilds it the long way (embed into four modes, project, partial-trace)
and serves as the independent cross-check of the direct constructor.

Natural units throughout: G = c = hbar = k_B = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmatrix import ket_index, partial_trace

_MASS_TEMPERATURE_RTOL = 1e-12


def hawking_temperature(mass: float) -> float:
    """Hawking temperature 1/(8 pi M) of a Schwarzschild black hole."""
    if mass <= 0:
        raise ValueError(f"mass must be positive, got {mass}")
    return 1.0 / (8.0 * math.pi * mass)


@dataclass(frozen=True)
class KruskalCoeffs:
    """Fermionic thermal amplitudes m, n with m^2 + n^2 = 1."""

    m: float
    n: float


def kruskal_coeffs(omega: float, temperature: float) -> KruskalCoeffs:
    """Amplitudes m = (e^(-w/T)+1)^(-1/2), n = (e^(w/T)+1)^(-1/2).

    T = 0 is accepted and returns the limit (1, 0); large omega/T is
    evaluated through e^(-omega/T) so nothing overflows.
    """
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")
    if temperature < 0:
        raise ValueError(f"temperature must be nonnegative, got {temperature}")
    if temperature == 0.0:
        return KruskalCoeffs(1.0, 0.0)
    x = omega / temperature
    e = math.exp(-x)
    root = math.sqrt(1.0 + e)
    return KruskalCoeffs(1.0 / root, math.exp(-0.5 * x) / root)


@dataclass(frozen=True)
class Scenario:
    """Physical parameters: GHZ amplitude, mode frequency, Hawking temperature.

    Either `temperature` or `mass` must be given; if both are, they must be
    consistent with T = 1/(8 pi M).
    """

    alpha: float
    omega: float = 1.0
    temperature: float | None = None
    mass: float | None = None

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.omega <= 0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if self.temperature is None and self.mass is None:
            raise ValueError("provide temperature or mass")
        if self.temperature is None:
            object.__setattr__(self, "temperature", hawking_temperature(self.mass))
        elif self.mass is not None:
            t_from_mass = hawking_temperature(self.mass)
            if abs(self.temperature - t_from_mass) > _MASS_TEMPERATURE_RTOL * self.temperature:
                raise ValueError(
                    f"temperature {self.temperature} inconsistent with mass "
                    f"{self.mass} (implies T = {t_from_mass})"
                )
        if self.temperature < 0:
            raise ValueError(f"temperature must be nonnegative, got {self.temperature}")

    @property
    def beta(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.alpha * self.alpha))

    def coeffs(self) -> KruskalCoeffs:
        return kruskal_coeffs(self.omega, self.temperature)


def physical_state(scenario: Scenario) -> np.ndarray:
    """Accessible 8x8 state after the interior region is traced away."""
    co = scenario.coeffs()
    a = scenario.alpha
    b = scenario.beta
    rho = np.zeros((8, 8), dtype=complex)
    i000 = ket_index(0, 0, 0)
    i001 = ket_index(0, 0, 1)
    i111 = ket_index(1, 1, 1)
    rho[i000, i000] = a * a * co.m * co.m
    rho[i001, i001] = a * a * co.n * co.n
    rho[i111, i111] = b * b
    coherence = a * b * co.m
    rho[i000, i111] = coherence
    rho[i111, i000] = coherence
    return rho


def kruskal_embed_and_trace(scenario: Scenario) -> np.ndarray:
    """Rebuild the accessible state via the four-mode embedding.

    Charlie's |0> becomes m|0>_I|0>_II + n|1>_I|1>_II and his |1> becomes
    |1>_I|0>_II; the interior mode is appended as the fourth qubit, the
    16x16 projector is formed, and the interior is traced out. Must agree
    with `physical_state` elementwise to ~1e-13.
    """
    co = scenario.coeffs()
    a = scenario.alpha
    b = scenario.beta
    psi = np.zeros(16, dtype=complex)
    # index = 8*A + 4*B + 2*C_I + C_II
    psi[0b0000] = a * co.m
    psi[0b0011] = a * co.n
    psi[0b1110] = b
    rho4 = np.outer(psi, psi.conj())
    return partial_trace(rho4, which=3)
