"""Pure-Python speed kernel: the fallback when the compiled core is absent.

Mirrors the API of qslt._speed_kernel. Each evolved matrix element under a
Pauli pair channel is a real quadratic c0 + c1*p + c2*p^2 in the decoherence
parameter, with coefficients fixed by the GHZ amplitude alpha and the thermal
amplitude m. The kernel works directly on those coefficients, so evaluating
the Hilbert-Schmidt speed or distance never builds a matrix.

Element tables list only the diagonal and the upper-triangle coherences;
`weight` is the multiplicity in the squared norm (2 for a Hermitian pair).
"""

from __future__ import annotations

import math

from .quadrature import adaptive_simpson

KIND_DPC = 0
KIND_BFC = 1
KIND_BPFC = 2
KIND_PFC = 3

# table rows: (i, j, weight, c0, c1, c2)
Element = tuple[int, int, float, float, float, float]


def element_table(kind: int, alpha: float, m: float) -> list[Element]:
    """Quadratic-in-p coefficients of every nonzero evolved matrix element."""
    a2 = alpha * alpha
    b2 = 1.0 - a2
    m2 = m * m
    n2 = 1.0 - m2
    am = a2 * m2  # |000> population of the noiseless state
    an = a2 * n2  # |001> population fed by the horizon
    x = alpha * math.sqrt(b2) * m  # |000><111| coherence scale

    if kind == KIND_PFC:
        # populations untouched; the GHZ coherence is rescaled by (1-2p)^2
        return [
            (0, 0, 1.0, am, 0.0, 0.0),
            (1, 1, 1.0, an, 0.0, 0.0),
            (7, 7, 1.0, b2, 0.0, 0.0),
            (0, 7, 2.0, x, -4.0 * x, 4.0 * x),
        ]

    if kind in (KIND_BFC, KIND_BPFC):
        # per-qubit populations mix with stay weight p, flip weight 1-p;
        # the sigma_y channel flips the sign of the single-flip coherences
        sg = -1.0 if kind == KIND_BPFC else 1.0
        anb = an + b2
        return [
            (0, 0, 1.0, 0.0, 0.0, am),
            (1, 1, 1.0, b2, -2.0 * b2, an + b2),
            (2, 2, 1.0, 0.0, am, -am),
            (3, 3, 1.0, 0.0, anb, -anb),
            (4, 4, 1.0, 0.0, am, -am),
            (5, 5, 1.0, 0.0, anb, -anb),
            (6, 6, 1.0, am, -2.0 * am, am),
            (7, 7, 1.0, an, -2.0 * an, an + b2),
            (0, 7, 2.0, 0.0, 0.0, x),
            (1, 6, 2.0, x, -2.0 * x, x),
            (2, 5, 2.0, 0.0, sg * x, -sg * x),
            (3, 4, 2.0, 0.0, sg * x, -sg * x),
        ]

    if kind == KIND_DPC:
        # stay weight (1+2p)/3, flip weight 2(1-p)/3 per qubit; the GHZ
        # coherence is rescaled by (1-4p)^2/9 and the double-flip images of
        # it cancel between sigma_x and sigma_y
        s = 1.0 / 9.0
        anb = an + b2
        return [
            (0, 0, 1.0, am * s, 4.0 * am * s, 4.0 * am * s),
            (1, 1, 1.0, (an + 4.0 * b2) * s, (4.0 * an - 8.0 * b2) * s, (4.0 * an + 4.0 * b2) * s),
            (2, 2, 1.0, 2.0 * am * s, 2.0 * am * s, -4.0 * am * s),
            (3, 3, 1.0, 2.0 * anb * s, 2.0 * anb * s, -4.0 * anb * s),
            (4, 4, 1.0, 2.0 * am * s, 2.0 * am * s, -4.0 * am * s),
            (5, 5, 1.0, 2.0 * anb * s, 2.0 * anb * s, -4.0 * anb * s),
            (6, 6, 1.0, 4.0 * am * s, -8.0 * am * s, 4.0 * am * s),
            (7, 7, 1.0, (b2 + 4.0 * an) * s, (4.0 * b2 - 8.0 * an) * s, (4.0 * b2 + 4.0 * an) * s),
            (0, 7, 2.0, x * s, -8.0 * x * s, 16.0 * x * s),
        ]

    raise ValueError(f"unknown channel kind code {kind}")


def speed(kind: int, alpha: float, m: float, p: float) -> float:
    """Hilbert-Schmidt norm of d(rho)/dp at decoherence parameter p."""
    acc = 0.0
    for _, _, w, _, c1, c2 in element_table(kind, alpha, m):
        d = c1 + 2.0 * c2 * p
        acc += w * d * d
    return math.sqrt(acc)


def distance(kind: int, alpha: float, m: float, p_tau: float) -> float:
    """Hilbert-Schmidt norm of rho(p=1) - rho(p=p_tau)."""
    acc = 0.0
    one_minus = 1.0 - p_tau
    one_minus_sq = 1.0 - p_tau * p_tau
    for _, _, w, _, c1, c2 in element_table(kind, alpha, m):
        d = c1 * one_minus + c2 * one_minus_sq
        acc += w * d * d
    return math.sqrt(acc)


def path_length(
    kind: int,
    alpha: float,
    m: float,
    p_tau: float,
    tol: float = 1e-10,
    max_depth: int = 40,
) -> tuple[float, float, bool]:
    """Integral of the speed over [p_tau, 1] by adaptive Simpson.

    The interval is always split at p = 1/2 when that point is interior:
    the phase-flip speed has a |1-2p| kink there.
    """
    table = element_table(kind, alpha, m)

    def f(p: float) -> float:
        acc = 0.0
        for _, _, w, _, c1, c2 in table:
            d = c1 + 2.0 * c2 * p
            acc += w * d * d
        return math.sqrt(acc)

    res = adaptive_simpson(f, p_tau, 1.0, tol=tol, max_depth=max_depth, split_at=(0.5,))
    return res.value, res.error_estimate, res.converged
