"""Quantum-speed-limit ratios for a GHZ-family state near a Schwarzschild horizon.

Three observers share alpha|000> + sqrt(1-alpha^2)|111>; one hovers near the
horizon of a black hole at Hawking temperature T, and the two distant qubits
pass through a Pauli noise channel. This package builds the accessible state,
evolves it, and computes the Euclidean quantum-speed-limit-time ratio, the
initial GM concurrence, and the concurrence that minimizes the ratio.
"""

from .channels import ChannelKind, ChannelSpec, apply_channel, closed_form, drho_dp, pauli_probs
from .entanglement import (
    ConcurrenceMap,
    OptimalCResult,
    alpha_from_concurrence,
    c_max,
    gm_concurrence,
    optimal_concurrence,
    ratio_vs_concurrence,
)
from .kernel import BACKEND as KERNEL_BACKEND
from .qmatrix import (
    DensityCheck,
    DensityViolationError,
    check_density,
    dagger,
    hermitian_eigenvalues,
    hs_norm,
    kron,
    partial_trace,
    validate_density,
)
from .spacetime import (
    KruskalCoeffs,
    Scenario,
    hawking_temperature,
    kruskal_coeffs,
    kruskal_embed_and_trace,
    physical_state,
)
from .speed_limit import (
    QsltResult,
    QuadratureError,
    closed_form_ratio,
    hs_speed,
    integrate_speed,
    qslt_ratio,
    reparametrization_check,
    temperature_trend,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelKind",
    "ChannelSpec",
    "ConcurrenceMap",
    "DensityCheck",
    "DensityViolationError",
    "KERNEL_BACKEND",
    "KruskalCoeffs",
    "OptimalCResult",
    "QsltResult",
    "QuadratureError",
    "Scenario",
    "alpha_from_concurrence",
    "apply_channel",
    "c_max",
    "check_density",
    "closed_form",
    "closed_form_ratio",
    "dagger",
    "drho_dp",
    "gm_concurrence",
    "hawking_temperature",
    "hermitian_eigenvalues",
    "hs_norm",
    "hs_speed",
    "integrate_speed",
    "kron",
    "kruskal_coeffs",
    "kruskal_embed_and_trace",
    "optimal_concurrence",
    "partial_trace",
    "pauli_probs",
    "physical_state",
    "qslt_ratio",
    "ratio_vs_concurrence",
    "reparametrization_check",
    "temperature_trend",
    "validate_density",
    "__version__",
]
