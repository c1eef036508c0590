"""Parameter sweeps and their CSV/JSON serialization.

A sweep varies one axis (temperature, p_tau, concurrence or alpha) while the
remaining parameters stay fixed, producing one row of
(axis value, ratio, distance, path length, frozen, error) per point. Output
is byte-deterministic: rows are ordered by ascending axis value and numbers
are printed with 12 significant digits.

Rows are independent, so they may be computed in a thread pool; the
QSLT_THREADS environment variable caps the pool size (default 1, serial).
Quadrature failures do not abort a sweep: the offending row keeps the
partial values and gets error = 1.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields

from .channels import ChannelKind, kind_code
from .entanglement import BRANCHES, alpha_from_concurrence, c_max
from .kernel import distance as _kernel_distance
from .spacetime import Scenario
from .speed_limit import FROZEN_PATH_TOL, QuadratureError, qslt_ratio

AXES = ("temperature", "p_tau", "concurrence", "alpha")
FORMATS = ("csv", "json")


class ConfigError(ValueError):
    """Invalid sweep or figure configuration; `field` names the offender."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


@dataclass(frozen=True)
class SweepConfig:
    channel: ChannelKind
    axis: str
    lo: float
    hi: float
    count: int
    omega: float = 1.0
    temperature: float | None = None
    alpha: float | None = None
    p_tau: float | None = None
    branch: str = "lower"
    output: str | None = None
    fmt: str = "csv"

    def __post_init__(self):
        if self.axis not in AXES:
            raise ConfigError("axis", f"must be one of {AXES}, got {self.axis!r}")
        if self.fmt not in FORMATS:
            raise ConfigError("format", f"must be one of {FORMATS}, got {self.fmt!r}")
        if self.branch not in BRANCHES:
            raise ConfigError("branch", f"must be one of {BRANCHES}, got {self.branch!r}")
        if not self.lo < self.hi:
            raise ConfigError("lo", f"range must satisfy lo < hi, got [{self.lo}, {self.hi}]")
        if self.count < 2:
            raise ConfigError("count", f"must be >= 2, got {self.count}")
        if self.omega <= 0:
            raise ConfigError("omega", f"must be positive, got {self.omega}")

        fixed_by_axis = {
            "temperature": ("alpha", "p_tau"),
            "p_tau": ("temperature", "alpha"),
            "concurrence": ("temperature", "p_tau"),
            "alpha": ("temperature", "p_tau"),
        }
        for name in fixed_by_axis[self.axis]:
            if getattr(self, name) is None:
                raise ConfigError(name, f"required when sweeping {self.axis}")
        if getattr(self, self.axis, None) is not None:
            raise ConfigError(self.axis, "cannot be fixed while being the sweep axis")

        if self.alpha is not None and not 0.0 <= self.alpha <= 1.0:
            raise ConfigError("alpha", f"must be in [0, 1], got {self.alpha}")
        if self.p_tau is not None and not 0.0 <= self.p_tau <= 1.0:
            raise ConfigError("p_tau", f"must be in [0, 1], got {self.p_tau}")
        if self.temperature is not None and self.temperature < 0:
            raise ConfigError("temperature", f"must be nonnegative, got {self.temperature}")

        if self.axis == "temperature" and self.lo < 0:
            raise ConfigError("lo", f"temperature must be nonnegative, got {self.lo}")
        if self.axis in ("p_tau", "alpha") and not (0.0 <= self.lo and self.hi <= 1.0):
            raise ConfigError("lo", f"{self.axis} range must lie in [0, 1]")
        if self.axis == "concurrence":
            if self.alpha is not None:
                raise ConfigError("alpha", "cannot be fixed when sweeping concurrence")
            if self.lo < 0:
                raise ConfigError("lo", f"concurrence must be nonnegative, got {self.lo}")
            cm = c_max(self.omega, self.temperature)
            if self.hi > cm * (1.0 + 1e-12):
                raise ConfigError(
                    "hi", f"concurrence exceeds the attainable maximum {cm:.12g}"
                )


@dataclass(frozen=True)
class SweepRow:
    axis_value: float
    ratio: float
    distance: float
    path_length: float
    frozen: bool
    error: bool


def axis_values(config: SweepConfig) -> list[float]:
    step = (config.hi - config.lo) / (config.count - 1)
    values = [config.lo + i * step for i in range(config.count)]
    values[-1] = config.hi
    return values


def _scenario_for(config: SweepConfig, value: float) -> tuple[Scenario, float]:
    axis = config.axis
    if axis == "temperature":
        return Scenario(config.alpha, config.omega, value), config.p_tau
    if axis == "p_tau":
        return Scenario(config.alpha, config.omega, config.temperature), value
    if axis == "alpha":
        return Scenario(value, config.omega, config.temperature), config.p_tau
    alpha = alpha_from_concurrence(value, config.omega, config.temperature, config.branch)
    return Scenario(alpha, config.omega, config.temperature), config.p_tau


def _compute_row(config: SweepConfig, value: float) -> SweepRow:
    scenario, p_tau = _scenario_for(config, value)
    try:
        r = qslt_ratio(config.channel, scenario, p_tau)
    except QuadratureError as exc:
        code = kind_code(config.channel)
        dist = _kernel_distance(code, scenario.alpha, scenario.coeffs().m, p_tau)
        path = exc.value
        frozen = path <= FROZEN_PATH_TOL
        return SweepRow(value, 1.0 if frozen else dist / path, dist, path, frozen, True)
    return SweepRow(value, r.ratio, r.distance, r.path_length, r.frozen, False)


def sweep_workers() -> int:
    raw = os.environ.get("QSLT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError("QSLT_THREADS", f"must be an integer, got {raw!r}")
    return max(1, n)


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    values = axis_values(config)
    workers = sweep_workers()
    if workers == 1:
        return [_compute_row(config, v) for v in values]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda v: _compute_row(config, v), values))


def format_number(x: float) -> str:
    return f"{x:.12g}"


def render_csv(config: SweepConfig, rows: list[SweepRow]) -> str:
    lines = [f"{config.axis},ratio,distance,path_length,frozen,error"]
    for r in rows:
        lines.append(
            ",".join(
                (
                    format_number(r.axis_value),
                    format_number(r.ratio),
                    format_number(r.distance),
                    format_number(r.path_length),
                    str(int(r.frozen)),
                    str(int(r.error)),
                )
            )
        )
    return "\n".join(lines) + "\n"


def render_json(config: SweepConfig, rows: list[SweepRow]) -> str:
    payload = {
        "axis": config.axis,
        "channel": config.channel.value,
        "rows": [
            {
                "axis_value": r.axis_value,
                "ratio": r.ratio,
                "distance": r.distance,
                "path_length": r.path_length,
                "frozen": r.frozen,
                "error": r.error,
            }
            for r in rows
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


_CONFIG_KEYS = {
    "channel": str,
    "axis": str,
    "lo": (int, float),
    "hi": (int, float),
    "count": int,
    "omega": (int, float),
    "temperature": (int, float),
    "alpha": (int, float),
    "p_tau": (int, float),
    "branch": str,
    "output": str,
    "format": str,
}

_FIGURE_KEYS = {"figure": str, "output_dir": str}


def _parse_channel(name) -> ChannelKind:
    try:
        return ChannelKind(name)
    except ValueError:
        valid = ", ".join(k.value for k in ChannelKind)
        raise ConfigError("channel", f"must be one of {valid}, got {name!r}")


def parse_config(text: str):
    """Parse a JSON config into a SweepConfig or a figure request.

    A config containing a "figure" key selects figure reproduction and may
    only also carry "output_dir"; anything else is a sweep. Unknown keys are
    rejected, every number is range-checked.
    """
    from .figures import FIGURES, FigureRequest

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("syntax", f"line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(data, dict):
        raise ConfigError("syntax", "top-level value must be an object")

    if "figure" in data:
        for key in data:
            if key not in _FIGURE_KEYS:
                raise ConfigError(key, "unknown key for a figure request")
        figure = data["figure"]
        if figure not in FIGURES:
            raise ConfigError("figure", f"must be one of {sorted(FIGURES)}, got {figure!r}")
        return FigureRequest(figure=figure, output_dir=data.get("output_dir", "figures"))

    for key, value in data.items():
        if key not in _CONFIG_KEYS:
            raise ConfigError(key, "unknown key for a sweep")
        expected = _CONFIG_KEYS[key]
        if not isinstance(value, expected) or isinstance(value, bool):
            raise ConfigError(key, f"expected {expected}, got {value!r}")
    for key in ("channel", "axis", "lo", "hi", "count"):
        if key not in data:
            raise ConfigError(key, "required")
    kwargs = dict(data)
    kwargs["channel"] = _parse_channel(kwargs["channel"])
    if "format" in kwargs:
        kwargs["fmt"] = kwargs.pop("format")
    return SweepConfig(**kwargs)


def serialize_config(config: SweepConfig) -> str:
    """Canonical JSON for a SweepConfig; parse_config round-trips it."""
    data = {}
    for f in fields(config):
        value = getattr(config, f.name)
        if value is None:
            continue
        key = "format" if f.name == "fmt" else f.name
        data[key] = value.value if isinstance(value, ChannelKind) else value
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
