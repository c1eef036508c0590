"""Oracle-equivalence checks runnable from the command line.

Every closed-form route in the package has an independent partner: the
embedding vs the direct state constructor, the Kraus sum vs the elementwise
quadratics, finite differences vs the analytic derivative, matrix norms vs
the scalar kernel. This module runs all of those cross-checks on a fixed
grid and reports one line per check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernel
from .channels import ChannelKind, ChannelSpec, apply_channel, closed_form, drho_dp, kind_code
from .qmatrix import check_density, hs_norm
from .spacetime import Scenario, kruskal_embed_and_trace, physical_state
from .speed_limit import closed_form_ratio, qslt_ratio

ALPHAS = (0.0, 0.25, 1.0 / math.sqrt(2.0), 1.0)
TEMPERATURES = (0.5, 1.0, 3.0, 10.0)
P_GRID = tuple(i / 10.0 for i in range(11))


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _scenarios() -> list[Scenario]:
    return [
        Scenario(alpha=a, omega=1.0, temperature=t) for a in ALPHAS for t in TEMPERATURES
    ]


def _check_embedding() -> CheckResult:
    worst = 0.0
    for s in _scenarios():
        worst = max(worst, float(np.max(np.abs(physical_state(s) - kruskal_embed_and_trace(s)))))
    return CheckResult(
        "embedding vs direct state", worst <= 1e-13, f"max elementwise diff {worst:.3e}"
    )


def _check_kraus_oracle() -> CheckResult:
    worst = 0.0
    for s in _scenarios():
        rho = physical_state(s)
        for kind in ChannelKind:
            for p in P_GRID:
                diff = apply_channel(rho, ChannelSpec(kind, p)) - closed_form(kind, s, p)
                worst = max(worst, float(np.max(np.abs(diff))))
    return CheckResult(
        "Kraus sum vs elementwise evolution", worst <= 1e-12, f"max elementwise diff {worst:.3e}"
    )


def _check_density_validity() -> CheckResult:
    for s in _scenarios():
        for kind in ChannelKind:
            for p in P_GRID:
                chk = check_density(closed_form(kind, s, p))
                if not chk.ok:
                    return CheckResult(
                        "evolved states are valid density matrices",
                        False,
                        f"{kind.value} alpha={s.alpha} T={s.temperature} p={p}: "
                        f"{chk.violation} {chk.magnitude:.3e}",
                    )
    return CheckResult("evolved states are valid density matrices", True, "all grid points pass")


def _check_derivative() -> CheckResult:
    h = 1e-6
    worst = 0.0
    for s in _scenarios():
        for kind in ChannelKind:
            for p in (0.2, 0.5, 0.8):
                fd = (closed_form(kind, s, p + h) - closed_form(kind, s, p - h)) / (2 * h)
                worst = max(worst, float(np.max(np.abs(fd - drho_dp(kind, s, p)))))
    return CheckResult(
        "analytic derivative vs finite differences", worst <= 1e-6, f"max diff {worst:.3e}"
    )


def _check_kernel_vs_matrix() -> CheckResult:
    worst = 0.0
    for s in _scenarios():
        m = s.coeffs().m
        rho0 = physical_state(s)
        for kind in ChannelKind:
            code = kind_code(kind)
            for p in (0.0, 0.3, 0.7, 1.0):
                worst = max(
                    worst, abs(kernel.speed(code, s.alpha, m, p) - hs_norm(drho_dp(kind, s, p)))
                )
                worst = max(
                    worst,
                    abs(
                        kernel.distance(code, s.alpha, m, p)
                        - hs_norm(rho0 - closed_form(kind, s, p))
                    ),
                )
    return CheckResult(
        "scalar kernel vs matrix norms", worst <= 1e-12, f"max diff {worst:.3e}"
    )


def _check_phase_flip_ratio() -> CheckResult:
    worst = 0.0
    for alpha in (0.25, 1.0 / math.sqrt(2.0)):
        for t in TEMPERATURES:
            s = Scenario(alpha=alpha, omega=1.0, temperature=t)
            for p_tau in (0.1, 0.25, 0.4, 0.5, 0.75):
                got = qslt_ratio(ChannelKind.PFC, s, p_tau).ratio
                want = closed_form_ratio(ChannelKind.PFC, s, p_tau)
                worst = max(worst, abs(got - want))
    return CheckResult(
        "phase-flip two-branch ratio", worst <= 1e-8, f"max |numeric - analytic| {worst:.3e}"
    )


def run_selftest() -> list[CheckResult]:
    return [
        _check_embedding(),
        _check_kraus_oracle(),
        _check_density_validity(),
        _check_derivative(),
        _check_kernel_vs_matrix(),
        _check_phase_flip_ratio(),
    ]
