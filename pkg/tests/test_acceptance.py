"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see every line.
"""

import math

import numpy as np

from qslt.channels import ChannelKind, ChannelSpec, apply_channel, closed_form, drho_dp
from qslt.entanglement import c_max, gm_concurrence, optimal_concurrence
from qslt.spacetime import Scenario, physical_state
from qslt.speed_limit import closed_form_ratio, qslt_ratio, reparametrization_check

INV_SQRT2 = 1.0 / math.sqrt(2.0)

ALPHA_GRID = (0.0, 0.25, INV_SQRT2, 1.0)
T_GRID = (0.5, 1.0, 3.0, 10.0)
P_GRID = tuple(i / 10.0 for i in range(11))

# small-p_tau point where the bit-flip ratio falls with temperature,
# located by scanning the trend reversal (it flips near p_tau ~ 0.7)
BFC_DECREASING_WITNESS = 0.2


def _criterion(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def _scenarios():
    return [Scenario(alpha=a, omega=1.0, temperature=t) for a in ALPHA_GRID for t in T_GRID]


def test_criterion_01_phase_flip_two_branch_exactness():
    worst = 0.0
    for alpha in (0.25, INV_SQRT2):
        for t in (0.5, 3.0):
            s = Scenario(alpha=alpha, omega=1.0, temperature=t)
            for i in range(1, 20):
                p_tau = 0.05 * i
                got = qslt_ratio(ChannelKind.PFC, s, p_tau).ratio
                want = closed_form_ratio(ChannelKind.PFC, s, p_tau)
                worst = max(worst, abs(got - want))
                if p_tau >= 0.5:
                    worst = max(worst, abs(got - 1.0))
    s = Scenario(alpha=0.25, omega=1.0, temperature=3.0)
    worst = max(worst, abs(qslt_ratio(ChannelKind.PFC, s, 0.25).ratio - 0.6))
    _criterion(
        "01 phase-flip ratio matches the two-branch analytic form",
        worst <= 1e-8,
        f"max deviation {worst:.3e}",
    )


def test_criterion_02_kraus_oracle_equivalence():
    worst = 0.0
    for s in _scenarios():
        rho = physical_state(s)
        for kind in ChannelKind:
            for p in P_GRID:
                diff = apply_channel(rho, ChannelSpec(kind, p)) - closed_form(kind, s, p)
                worst = max(worst, float(np.max(np.abs(diff))))
    _criterion(
        "02 Kraus sum equals elementwise evolution for all four channels",
        worst <= 1e-12,
        f"max elementwise deviation {worst:.3e}",
    )


def test_criterion_03_maximum_concurrence_value():
    got = gm_concurrence(Scenario(alpha=INV_SQRT2, omega=1.0, temperature=3.0))
    exact = (1.0 + math.exp(-1.0 / 3.0)) ** -0.5
    ok = abs(got - exact) <= 1e-14 and abs(got - 0.76) <= 0.005
    _criterion(
        "03 maximum initial concurrence equals (1+e^(-1/3))^(-1/2) ~ 0.76",
        ok,
        f"value {got:.6f}",
    )


def test_criterion_04_depolarizing_optimal_concurrence_plateaus():
    cm = c_max(1.0, 3.0)
    low = optimal_concurrence(ChannelKind.DPC, 1.0, 3.0, 0.05)
    high = optimal_concurrence(ChannelKind.DPC, 1.0, 3.0, 0.8)
    ok = low.boundary == "at_cmax" and low.c_op == cm
    ok = ok and high.boundary == "at_zero" and high.c_op == 0.0

    p_taus = [0.12 + 0.02 * i for i in range(26)]
    c_ops = [optimal_concurrence(ChannelKind.DPC, 1.0, 3.0, p).c_op for p in p_taus]
    monotone = all(b <= a + 1e-6 for a, b in zip(c_ops[:-1], c_ops[1:]))
    ok = ok and monotone

    upper_low = optimal_concurrence(ChannelKind.DPC, 1.0, 3.0, 0.05, branch="upper")
    upper_high = optimal_concurrence(ChannelKind.DPC, 1.0, 3.0, 0.8, branch="upper")
    print(
        "[INFO] upper-branch depolarizing optima: "
        f"p_tau=0.05 -> {upper_low.boundary} c_op={upper_low.c_op:.6f}, "
        f"p_tau=0.8 -> {upper_high.boundary} c_op={upper_high.c_op:.6f}"
    )
    _criterion(
        "04 depolarizing optimum sits at C_max for small p_tau, at 0 for large, "
        "nonincreasing between",
        ok,
        f"c_op range [{min(c_ops):.4f}, {max(c_ops):.4f}] over p_tau in [0.12, 0.62]",
    )


def test_criterion_05_bit_flip_interior_optimum_window():
    p_taus = [0.58 + 0.02 * i for i in range(8)]
    results = [optimal_concurrence(ChannelKind.BFC, 1.0, 3.0, p) for p in p_taus]
    interior = all(r.boundary == "interior" for r in results)
    c_ops = [r.c_op for r in results]
    decreasing = all(b < a for a, b in zip(c_ops[:-1], c_ops[1:]))
    _criterion(
        "05 bit-flip optimum is interior and strictly decreasing on p_tau in [0.58, 0.72]",
        interior and decreasing,
        f"c_op from {c_ops[0]:.4f} down to {c_ops[-1]:.4f}",
    )


def test_criterion_06_temperature_independence():
    worst = 0.0
    for alpha in ALPHA_GRID:
        for p_tau in (0.2, 0.45, 0.7, 0.9):
            ratios = [
                qslt_ratio(ChannelKind.PFC, Scenario(alpha, 1.0, t), p_tau).ratio
                for t in T_GRID
            ]
            worst = max(worst, (max(ratios) - min(ratios)) / max(ratios))
    for kind in (ChannelKind.DPC, ChannelKind.BFC, ChannelKind.BPFC):
        for p_tau in (0.2, 0.45, 0.7, 0.9):
            ratios = [
                qslt_ratio(kind, Scenario(1.0, 1.0, t), p_tau).ratio for t in T_GRID
            ]
            worst = max(worst, (max(ratios) - min(ratios)) / max(ratios))
    _criterion(
        "06 ratio is temperature-independent for phase flip (any alpha) and "
        "unentangled depolarizing/bit-flip/bit-phase-flip",
        worst <= 1e-8,
        f"max relative spread {worst:.3e}",
    )


def _ratios_vs_temperature(kind, p_tau):
    return [
        qslt_ratio(kind, Scenario(0.25, 1.0, float(t)), p_tau).ratio
        for t in np.linspace(0.5, 10.0, 20)
    ]


def test_criterion_07_temperature_monotonicity_regimes():
    ok = True
    details = []
    for p_tau in (0.6, 0.8):
        rs = _ratios_vs_temperature(ChannelKind.DPC, p_tau)
        decreasing = all(b < a for a, b in zip(rs[:-1], rs[1:]))
        ok = ok and decreasing
        details.append(f"DPC@{p_tau} {'down' if decreasing else 'NOT down'}")
    rs = _ratios_vs_temperature(ChannelKind.BFC, 0.8)
    increasing = all(b > a for a, b in zip(rs[:-1], rs[1:]))
    ok = ok and increasing
    details.append(f"BFC@0.8 {'up' if increasing else 'NOT up'}")
    rs = _ratios_vs_temperature(ChannelKind.BFC, BFC_DECREASING_WITNESS)
    decreasing = all(b < a for a, b in zip(rs[:-1], rs[1:]))
    ok = ok and decreasing
    details.append(f"BFC@{BFC_DECREASING_WITNESS} {'down' if decreasing else 'NOT down'}")
    _criterion(
        "07 entangled ratio falls with T for depolarizing at large p_tau and "
        "rises for bit flip (and vice versa at the small-p_tau witness)",
        ok,
        ", ".join(details),
    )


def test_criterion_08_unentangled_analytic_ratios():
    worst = 0.0
    tail = 1.0
    s = Scenario(alpha=1.0, omega=1.0, temperature=3.0)
    for kind in (ChannelKind.DPC, ChannelKind.BFC):
        for i in range(1, 10):
            p_tau = 0.1 * i
            got = qslt_ratio(kind, s, p_tau).ratio
            want = closed_form_ratio(kind, s, p_tau)
            worst = max(worst, abs(got - want))
        tail = min(tail, qslt_ratio(kind, s, 0.999).ratio)
    _criterion(
        "08 unentangled depolarizing/bit-flip analytic ratios match the pipeline "
        "and tend to 1",
        worst <= 1e-8 and tail >= 0.99,
        f"max deviation {worst:.3e}, ratio(0.999) >= {tail:.6f}",
    )


def test_criterion_09_derivative_against_finite_differences():
    rng = np.random.default_rng(20240812)
    kinds = tuple(ChannelKind)
    h = 1e-6
    worst = 0.0
    for _ in range(50):
        kind = kinds[rng.integers(0, 4)]
        s = Scenario(
            alpha=float(rng.uniform(0.0, 1.0)),
            omega=float(rng.uniform(0.5, 2.0)),
            temperature=float(rng.uniform(0.5, 10.0)),
        )
        p = float(rng.uniform(0.01, 0.99))
        fd = (closed_form(kind, s, p + h) - closed_form(kind, s, p - h)) / (2.0 * h)
        worst = max(worst, float(np.max(np.abs(fd - drho_dp(kind, s, p)))))
    _criterion(
        "09 analytic p-derivative matches central finite differences at 50 random points",
        worst <= 1e-6,
        f"max elementwise deviation {worst:.3e}",
    )


def test_criterion_10_geometry_bounds():
    ok = True
    worst_ratio = 0.0
    worst_slack = -1.0
    for s in _scenarios():
        for kind in ChannelKind:
            for p_tau in P_GRID:
                r = qslt_ratio(kind, s, p_tau)
                ok = ok and 0.0 <= r.ratio <= 1.0 + 1e-10
                ok = ok and r.distance <= r.path_length + 1e-10
                worst_ratio = max(worst_ratio, r.ratio)
                worst_slack = max(worst_slack, r.distance - r.path_length)
    _criterion(
        "10 every ratio lies in [0, 1] and no distance exceeds its path length",
        ok,
        f"max ratio {worst_ratio:.12f}, max distance-path slack {worst_slack:.3e}",
    )


def test_criterion_11_reparametrization_invariance():
    s1 = Scenario(alpha=0.25, omega=1.0, temperature=3.0)
    base1 = qslt_ratio(ChannelKind.DPC, s1, 0.3).ratio
    dev1 = abs(reparametrization_check(ChannelKind.DPC, s1, 0.3, lambda p: p * p) - base1)
    s2 = Scenario(alpha=0.25, omega=1.0, temperature=1.0)
    base2 = qslt_ratio(ChannelKind.BFC, s2, 0.6).ratio
    exp_map = lambda p: (math.exp(p) - 1.0) / (math.e - 1.0)
    dev2 = abs(reparametrization_check(ChannelKind.BFC, s2, 0.6, exp_map) - base2)
    _criterion(
        "11 ratio is invariant under reclocking the drive (p^2 and exponential maps)",
        dev1 <= 1e-8 and dev2 <= 1e-8,
        f"deviations {dev1:.3e}, {dev2:.3e}",
    )


def test_criterion_12_bit_flip_and_bit_phase_flip_agree():
    worst = 0.0
    for s in _scenarios():
        for p_tau in P_GRID:
            r1 = qslt_ratio(ChannelKind.BFC, s, p_tau).ratio
            r2 = qslt_ratio(ChannelKind.BPFC, s, p_tau).ratio
            worst = max(worst, abs(r1 - r2))
    _criterion(
        "12 bit-flip and bit-phase-flip ratios are identical",
        worst <= 1e-12,
        f"max deviation {worst:.3e}",
    )
