"""Euclidean quantum-speed-limit-time ratio tau_QSL / tau.

For driving parametrized by s in [0, tau], the Hilbert-Schmidt bound is

    tau_QSL = ||rho(0) - rho(tau)||_hs / mean(||d rho/ds||_hs),

so the ratio tau_QSL / tau equals (endpoint distance) / (path length) and is
invariant under any monotone reparametrization of the drive. Evolution here
is parametrized directly by the decoherence parameter, running from p = 1
(noiseless) down to p_tau; no physical clock t(p) is needed and
`reparametrization_check` demonstrates that none would change the answer.

A ratio of 1 means the state already moves along a Hilbert-Schmidt geodesic
(no speedup is available); smaller values mean more room for speedup. When
the path length vanishes (the state never moves, e.g. an unentangled state
in the phase-flip channel) the dynamics are "frozen" and the ratio is
reported as 1 with the `frozen` flag set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import kernel
from .channels import ChannelKind, kind_code
from .quadrature import DEFAULT_MAX_DEPTH, DEFAULT_TOL, adaptive_simpson
from .spacetime import Scenario

FROZEN_PATH_TOL = 1e-14


class QuadratureError(ArithmeticError):
    """Adaptive quadrature hit its depth limit; partial results attached."""

    def __init__(self, message: str, value: float, error_estimate: float):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


@dataclass(frozen=True)
class QsltResult:
    distance: float
    path_length: float
    ratio: float
    frozen: bool
    quadrature_error_estimate: float


def _check_p(p: float, name: str = "p_tau") -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {p}")


def hs_speed(kind: ChannelKind, scenario: Scenario, p: float) -> float:
    """Hilbert-Schmidt speed ||d rho/dp||_hs at decoherence parameter p."""
    _check_p(p, "p")
    return kernel.speed(kind_code(kind), scenario.alpha, scenario.coeffs().m, p)


def integrate_speed(
    kind: ChannelKind,
    scenario: Scenario,
    p_tau: float,
    *,
    tol: float = DEFAULT_TOL,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> tuple[float, float]:
    """Path length: integral of the speed over [p_tau, 1].

    Adaptive Simpson with a mandatory node at p = 1/2 (the phase-flip speed
    is |1-2p|-shaped there). Raises QuadratureError, with the partial value
    attached, if any subinterval exhausts `max_depth`.
    """
    _check_p(p_tau)
    value, err, converged = kernel.path_length(
        kind_code(kind), scenario.alpha, scenario.coeffs().m, p_tau, tol, max_depth
    )
    if not converged:
        raise QuadratureError(
            f"speed quadrature did not converge within depth {max_depth}", value, err
        )
    return value, err


def qslt_ratio(kind: ChannelKind, scenario: Scenario, p_tau: float) -> QsltResult:
    """Assemble distance, path length and their ratio for one evolution."""
    _check_p(p_tau)
    dist = kernel.distance(kind_code(kind), scenario.alpha, scenario.coeffs().m, p_tau)
    path, err = integrate_speed(kind, scenario, p_tau)
    if path <= FROZEN_PATH_TOL:
        return QsltResult(dist, path, 1.0, True, err)
    return QsltResult(dist, path, dist / path, False, err)


def _sqrt_quadratic_antiderivative(a: float, b: float, c: float, x: float) -> float:
    """Antiderivative of sqrt(a x^2 + b x + c) for a > 0, 4ac - b^2 > 0."""
    disc = 4.0 * a * c - b * b
    q = math.sqrt(a * x * x + b * x + c)
    lin = 2.0 * a * x + b
    return lin * q / (4.0 * a) + disc / (8.0 * a**1.5) * math.asinh(lin / math.sqrt(disc))


def _sqrt_quadratic_integral(a: float, b: float, c: float, lo: float, hi: float) -> float:
    return _sqrt_quadratic_antiderivative(a, b, c, hi) - _sqrt_quadratic_antiderivative(
        a, b, c, lo
    )


def closed_form_ratio(kind: ChannelKind, scenario: Scenario, p_tau: float) -> float | None:
    """Analytic ratio where one exists; None otherwise.

    Covered cases:
      * phase flip, any alpha: 1 for p_tau >= 1/2, else
        2 p_tau (1 - p_tau) / (1 - 2 p_tau (1 - p_tau));
      * depolarizing with alpha = 1:
        (1-p) sqrt(11 + 8p(1+p)) / integral sqrt(11 + 16p(2p-1));
      * bit flip / bit-phase flip with alpha = 1:
        (1-p) sqrt(1 + 2p^2) / integral sqrt(3 + 8p(p-1));
    with p = p_tau in the numerators and integrals over [p_tau, 1], done by
    exact antiderivative. The last two presume p_tau < 1; at p_tau = 1 the
    0/0 limit is 1. The phase-flip expression assumes non-frozen dynamics
    (it is independent of alpha and does not apply to alpha in {0, 1}).
    """
    _check_p(p_tau)
    if kind is ChannelKind.PFC:
        if p_tau >= 0.5:
            return 1.0
        q = 2.0 * p_tau * (1.0 - p_tau)
        return q / (1.0 - q)
    if scenario.alpha != 1.0:
        return None
    if p_tau == 1.0:
        return 1.0
    p = p_tau
    if kind is ChannelKind.DPC:
        num = (1.0 - p) * math.sqrt(11.0 + 8.0 * p * (1.0 + p))
        den = _sqrt_quadratic_integral(32.0, -16.0, 11.0, p, 1.0)
    else:  # BFC and BPFC share the expression
        num = (1.0 - p) * math.sqrt(1.0 + 2.0 * p * p)
        den = _sqrt_quadratic_integral(8.0, -8.0, 3.0, p, 1.0)
    return num / den


def _derivative(phi: Callable[[float], float], p: float, h: float = 1e-5) -> float:
    """Second-order finite difference of phi on [0, 1], one-sided at the edges."""
    if p - h >= 0.0 and p + h <= 1.0:
        return (phi(p + h) - phi(p - h)) / (2.0 * h)
    if p + 2.0 * h <= 1.0:
        return (-3.0 * phi(p) + 4.0 * phi(p + h) - phi(p + 2.0 * h)) / (2.0 * h)
    return (3.0 * phi(p) - 4.0 * phi(p - h) + phi(p - 2.0 * h)) / (2.0 * h)


def reparametrization_check(
    kind: ChannelKind,
    scenario: Scenario,
    p_tau: float,
    phi: Callable[[float], float],
) -> float:
    """Recompute the ratio with the drive reclocked as s = phi(p).

    phi must be a smooth strictly increasing map of [0, 1] into [0, 1]. The
    path length is re-integrated in s, with p(s) recovered by bisection and
    dp/ds from a finite-difference derivative, so nothing is shared with the
    plain p-parametrized quadrature. The result must match qslt_ratio.
    """
    _check_p(p_tau)
    samples = [phi(i / 100.0) for i in range(101)]
    if any(b <= a for a, b in zip(samples[:-1], samples[1:])):
        raise ValueError("phi must be strictly increasing on [0, 1]")
    if samples[0] < -1e-12 or samples[-1] > 1.0 + 1e-12:
        raise ValueError("phi must map [0, 1] into [0, 1]")

    code = kind_code(kind)
    alpha = scenario.alpha
    m = scenario.coeffs().m
    dist = kernel.distance(code, alpha, m, p_tau)
    if p_tau == 1.0:
        return 1.0

    def inverse(s: float) -> float:
        lo, hi = 0.0, 1.0
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            if phi(mid) < s:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-15:
                break
        return 0.5 * (lo + hi)

    def integrand(s: float) -> float:
        p = inverse(s)
        dphi = _derivative(phi, p)
        return kernel.speed(code, alpha, m, p) / dphi

    s_lo, s_hi = phi(p_tau), phi(1.0)
    splits = (phi(0.5),) if p_tau < 0.5 else ()
    res = adaptive_simpson(integrand, s_lo, s_hi, tol=DEFAULT_TOL, split_at=splits)
    if res.value <= FROZEN_PATH_TOL:
        return 1.0
    return dist / res.value


def temperature_trend(
    kind: ChannelKind,
    alpha: float,
    omega: float,
    p_tau: float,
    temperatures,
) -> str:
    """Classify the ratio's dependence on Hawking temperature.

    Returns "increasing", "decreasing", "constant" or "mixed" over the given
    temperature samples (strict comparisons, 1e-12 slack for "constant").
    The critical p_tau where the trend flips is channel-dependent and is left
    to the caller to locate by scanning.
    """
    ratios = [
        qslt_ratio(kind, Scenario(alpha=alpha, omega=omega, temperature=t), p_tau).ratio
        for t in temperatures
    ]
    diffs = [b - a for a, b in zip(ratios[:-1], ratios[1:])]
    if all(abs(d) <= 1e-12 for d in diffs):
        return "constant"
    if all(d > 0 for d in diffs):
        return "increasing"
    if all(d < 0 for d in diffs):
        return "decreasing"
    return "mixed"
