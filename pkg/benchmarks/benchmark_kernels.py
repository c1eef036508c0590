#!/usr/bin/env python3
"""Benchmark the compiled speed kernel against its pure-Python twin.

Times the three layers that back one ratio evaluation:

    speed          one Hilbert-Schmidt speed sample
    path_length    one adaptive quadrature over [p_tau, 1]
    qslt_ratio     distance + quadrature, via whichever backend is active

and, as a reference, the matrix route hs_norm(drho_dp(...)) that the kernel
replaces. Usage: python benchmarks/benchmark_kernels.py [repeats]
"""

import sys
import time

from qslt import _speed_fallback as fallback
from qslt import kernel
from qslt.channels import ChannelKind, drho_dp, kind_code
from qslt.qmatrix import hs_norm
from qslt.spacetime import Scenario
from qslt.speed_limit import qslt_ratio

SCENARIO = Scenario(alpha=0.25, omega=1.0, temperature=3.0)
KIND = ChannelKind.DPC
CODE = kind_code(KIND)
M = SCENARIO.coeffs().m
P_TAU = 0.3


def time_per_call(fn, repeats: int) -> float:
    start = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - start) / repeats


def fmt(seconds: float) -> str:
    return f"{seconds * 1e6:13.2f} us"


def main() -> int:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 20000
    impls = kernel.backends()
    print(f"active backend: {kernel.BACKEND}; repeats per timing: {repeats}")
    print(f"{'operation':<28}" + "".join(f"{name:>16}" for name in impls))

    rows = [
        ("speed(p=0.3)", lambda impl: (lambda: impl.speed(CODE, 0.25, M, 0.3))),
        (
            "path_length(p_tau=0.3)",
            lambda impl: (lambda: impl.path_length(CODE, 0.25, M, P_TAU)),
        ),
        (
            "distance(p_tau=0.3)",
            lambda impl: (lambda: impl.distance(CODE, 0.25, M, P_TAU)),
        ),
    ]
    for label, make in rows:
        times = {name: time_per_call(make(impl), repeats) for name, impl in impls.items()}
        line = f"{label:<28}" + "".join(fmt(times[name]) for name in impls)
        if "compiled" in times and times["compiled"] > 0:
            line += f"   ({times['python'] / times['compiled']:.1f}x)"
        print(line)

    matrix_reference = time_per_call(
        lambda: hs_norm(drho_dp(KIND, SCENARIO, 0.3)), max(1, repeats // 10)
    )
    print(f"{'matrix route speed sample':<28}{fmt(matrix_reference)}   (reference)")

    ratio_calls = max(1, repeats // 10)
    per_ratio = time_per_call(lambda: qslt_ratio(KIND, SCENARIO, P_TAU), ratio_calls)
    print(f"{'qslt_ratio (active backend)':<28}{fmt(per_ratio)}")

    # the two backends must agree before their timings mean anything
    for name, impl in impls.items():
        v, _, _ = impl.path_length(CODE, 0.25, M, P_TAU)
        ref, _, _ = fallback.path_length(CODE, 0.25, M, P_TAU)
        assert abs(v - ref) <= 5e-10, (name, v, ref)
    print("backend agreement verified")
    return 0


if __name__ == "__main__":
    sys.exit(main())
