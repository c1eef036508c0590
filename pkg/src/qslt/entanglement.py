"""Initial entanglement of the dressed state and its optimal value.

The genuinely multipartite concurrence of the accessible initial state is

    C(alpha) = 2 alpha sqrt(1 - alpha^2) * (1 + e^(-omega/T))^(-1/2),

zero at alpha in {0, 1} and maximal, C_max = m(omega, T), at alpha = 1/sqrt2.
Inverting C is two-valued: the lower branch has alpha <= 1/sqrt2, the upper
alpha >= 1/sqrt2. Both branches give the same concurrence but generally
different speed-limit ratios; the lower branch is the default everywhere.

`optimal_concurrence` minimizes the ratio over C in [0, C_max] at fixed
channel and p_tau: a dense uniform scan (ties resolved toward smaller C)
followed by derivative-free golden-section refinement. The phase-flip
channel is excluded: its ratio does not depend on C at all, and a flagged
degenerate result is returned instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channels import ChannelKind
from .spacetime import Scenario, kruskal_coeffs
from .speed_limit import qslt_ratio

BRANCHES = ("lower", "upper")

DEFAULT_GRID_RESOLUTION = 2001
DEFAULT_REFINEMENT_TOL = 1e-6

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def c_max(omega: float, temperature: float) -> float:
    """Largest attainable concurrence, equal to the thermal amplitude m."""
    return kruskal_coeffs(omega, temperature).m


def gm_concurrence(scenario: Scenario) -> float:
    """GM concurrence 2 alpha beta m of the initial accessible state."""
    return 2.0 * scenario.alpha * scenario.beta * scenario.coeffs().m


def alpha_from_concurrence(
    c: float, omega: float, temperature: float, branch: str = "lower"
) -> float:
    """Solve C(alpha) = c on the chosen branch.

    alpha^2 = (1 -+ sqrt(1 - (c/C_max)^2)) / 2, minus for the lower branch.
    Round-trips through gm_concurrence to ~1e-12.
    """
    if branch not in BRANCHES:
        raise ValueError(f"branch must be one of {BRANCHES}, got {branch!r}")
    cm = c_max(omega, temperature)
    if c < 0.0:
        raise ValueError(f"concurrence must be nonnegative, got {c}")
    if c > cm * (1.0 + 1e-12):
        raise ValueError(f"concurrence {c} exceeds the attainable maximum {cm}")
    r = min(c / cm, 1.0)
    root = math.sqrt(max(0.0, 1.0 - r * r))
    a2 = 0.5 * (1.0 - root) if branch == "lower" else 0.5 * (1.0 + root)
    return math.sqrt(a2)


@dataclass(frozen=True)
class ConcurrenceMap:
    """C <-> alpha conversion at fixed omega, T on a fixed branch."""

    omega: float
    temperature: float
    branch: str = "lower"

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"branch must be one of {BRANCHES}, got {self.branch!r}")
        kruskal_coeffs(self.omega, self.temperature)  # validates omega, T

    @property
    def c_max(self) -> float:
        return c_max(self.omega, self.temperature)

    def alpha(self, c: float) -> float:
        return alpha_from_concurrence(c, self.omega, self.temperature, self.branch)

    def concurrence(self, alpha: float) -> float:
        return gm_concurrence(
            Scenario(alpha=alpha, omega=self.omega, temperature=self.temperature)
        )


@dataclass(frozen=True)
class OptimalCResult:
    """Minimizer of the ratio over the initial concurrence.

    `boundary` is "interior", "at_zero" or "at_cmax"; for the phase-flip
    channel it is "degenerate" (ratio independent of C) and c_op is NaN.
    """

    c_op: float
    ratio_min: float
    boundary: str
    grid_resolution: int
    refinement_tolerance: float


def _golden_section(f, a: float, b: float, tol: float) -> tuple[float, float]:
    c = b - (b - a) * _INV_GOLDEN
    d = a + (b - a) * _INV_GOLDEN
    fc = f(c)
    fd = f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INV_GOLDEN
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INV_GOLDEN
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def ratio_vs_concurrence(
    kind: ChannelKind,
    omega: float,
    temperature: float,
    p_tau: float,
    c_grid,
    branch: str = "lower",
) -> list[tuple[float, float]]:
    """Ratio at each concurrence value of `c_grid` (converted via `branch`)."""
    cmap = ConcurrenceMap(omega, temperature, branch)
    out = []
    for c in c_grid:
        scenario = Scenario(alpha=cmap.alpha(c), omega=omega, temperature=temperature)
        out.append((float(c), qslt_ratio(kind, scenario, p_tau).ratio))
    return out


def optimal_concurrence(
    kind: ChannelKind,
    omega: float,
    temperature: float,
    p_tau: float,
    *,
    branch: str = "lower",
    grid_resolution: int = DEFAULT_GRID_RESOLUTION,
    refinement_tolerance: float = DEFAULT_REFINEMENT_TOL,
) -> OptimalCResult:
    """Concurrence minimizing the ratio at fixed channel, omega, T, p_tau."""
    cmap = ConcurrenceMap(omega, temperature, branch)
    cm = cmap.c_max

    def ratio_at(c: float) -> float:
        scenario = Scenario(alpha=cmap.alpha(c), omega=omega, temperature=temperature)
        return qslt_ratio(kind, scenario, p_tau).ratio

    if kind is ChannelKind.PFC:
        # constant in C for C > 0 (and trivially frozen at C = 0)
        return OptimalCResult(
            c_op=math.nan,
            ratio_min=ratio_at(0.5 * cm),
            boundary="degenerate",
            grid_resolution=0,
            refinement_tolerance=refinement_tolerance,
        )

    if grid_resolution < 3:
        raise ValueError(f"grid_resolution must be >= 3, got {grid_resolution}")
    step = cm / (grid_resolution - 1)
    grid = [i * step for i in range(grid_resolution)]
    grid[-1] = cm
    ratios = [ratio_at(c) for c in grid]
    k = min(range(grid_resolution), key=lambda i: (ratios[i], i))

    if k == 0:
        return OptimalCResult(0.0, ratios[0], "at_zero", grid_resolution, refinement_tolerance)
    if k == grid_resolution - 1:
        return OptimalCResult(cm, ratios[-1], "at_cmax", grid_resolution, refinement_tolerance)

    c_ref, r_ref = _golden_section(ratio_at, grid[k - 1], grid[k + 1], refinement_tolerance)
    if ratios[k] < r_ref:
        c_ref, r_ref = grid[k], ratios[k]
    return OptimalCResult(c_ref, r_ref, "interior", grid_resolution, refinement_tolerance)
