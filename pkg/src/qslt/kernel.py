"""Speed-kernel backend selection.

The hot loop of this package is the Hilbert-Schmidt speed evaluated inside
adaptive quadrature, thousands of times per optimal-entanglement scan. A
Cython extension (qslt._speed_kernel) implements it in C; if the extension
was not built, the pure-Python twin (qslt._speed_fallback) takes over with
identical semantics. `BACKEND` records which one is active.
"""

from __future__ import annotations

from . import _speed_fallback
from ._speed_fallback import KIND_BFC, KIND_BPFC, KIND_DPC, KIND_PFC  # noqa: F401

try:
    from . import _speed_kernel as _impl

    BACKEND = "compiled"
except ImportError:  # extension not built
    _impl = _speed_fallback
    BACKEND = "python"

element_table = _impl.element_table
speed = _impl.speed
distance = _impl.distance
path_length = _impl.path_length


def backends() -> dict:
    """Importable kernel implementations, keyed by backend name."""
    found = {"python": _speed_fallback}
    if BACKEND == "compiled":
        found["compiled"] = _impl
    return found
