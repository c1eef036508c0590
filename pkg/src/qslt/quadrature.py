"""Adaptive Simpson quadrature for piecewise-smooth integrands.

The integrands in this package are square roots of quadratics in the
evolution parameter; they are analytic except for a possible |1-2p|-style
kink, which callers remove by listing the kink location in `split_at`.
Each smooth piece then converges in a handful of bisections.

The compiled speed kernel (qslt._speed_kernel) reimplements exactly this
recursion in C for its own integrand; keep the two in sync.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

DEFAULT_TOL = 1e-10
DEFAULT_MAX_DEPTH = 40


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    converged: bool


def _simpson(fa: float, fm: float, fb: float, width: float) -> float:
    return width / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(f, a, fa, b, fb, m, fm, whole, tol, depth, max_depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0, abs(delta) / 15.0, True
    if depth >= max_depth:
        return left + right + delta / 15.0, abs(delta) / 15.0, False
    lv, le, lc = _adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, max_depth)
    rv, re, rc = _adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, max_depth)
    return lv + rv, le + re, lc and rc


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    tol: float = DEFAULT_TOL,
    max_depth: int = DEFAULT_MAX_DEPTH,
    split_at: tuple[float, ...] = (),
) -> QuadratureResult:
    """Integrate f over [a, b] to absolute tolerance `tol`.

    `split_at` lists interior points where the integrand has a kink; the
    interval is partitioned there and each piece gets an equal share of
    the tolerance. Pieces that hit `max_depth` before meeting their share
    are still summed but flag the result as not converged.
    """
    if a > b:
        raise ValueError(f"integration bounds out of order: [{a}, {b}]")
    if a == b:
        return QuadratureResult(0.0, 0.0, True)
    nodes = [a] + sorted(s for s in split_at if a < s < b) + [b]
    piece_tol = tol / (len(nodes) - 1)
    total = 0.0
    err = 0.0
    converged = True
    for lo, hi in zip(nodes[:-1], nodes[1:]):
        flo = f(lo)
        fhi = f(hi)
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        whole = _simpson(flo, fmid, fhi, hi - lo)
        v, e, c = _adaptive(f, lo, flo, hi, fhi, mid, fmid, whole, piece_tol, 0, max_depth)
        total += v
        err += e
        converged = converged and c
    return QuadratureResult(total, err, converged)
