"""Run configuration: schema, defaults, and strict parsing.

The configuration is a flat key-value document (JSON on disk) with one
nesting level for the model, the two modulators, the grids, and the
measurement sweep.  Unknown keys are rejected with their path rather than
silently ignored; type mismatches name the offending path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError

SCENARIOS = ("spectrum", "correlate", "sumrules", "measure", "figure-preset")
FORMATS = ("csv", "csv+svg")

DEFAULT_T = 1.0
DEFAULT_TOL = 1e-10
DEFAULT_GRID_RECTANGULAR = (200.0, 16001)
DEFAULT_GRID_GAUSSIAN = (40.0, 8001)
DEFAULT_DELTA_AXIS = (20.0, 801)


@dataclass(frozen=True)
class ModelConfig:
    kind: str = "rectangular"          # rectangular | gaussian
    duration: float = 1.0
    delay: float = 0.0
    center: float = 0.0


@dataclass(frozen=True)
class ModConfig:
    kind: str = "identity"             # phase | amplitude | identity
    depth: float = 0.0
    omega_m: float = 1.0


@dataclass(frozen=True)
class MeasureConfig:
    delta_s: float = 0.2
    delta_i: float = 0.2
    omega_m_max: float = 12.0
    n_samples: int = 241
    tau_max: float = 16.0
    n_tau: int = 321


@dataclass(frozen=True)
class RunConfig:
    scenario: str
    preset: str | None = None
    model: ModelConfig = field(default_factory=ModelConfig)
    modulator_s: ModConfig = field(default_factory=ModConfig)
    modulator_i: ModConfig = field(default_factory=ModConfig)
    grid: tuple[float, int] = DEFAULT_GRID_RECTANGULAR
    delta_axis: tuple[float, int] = DEFAULT_DELTA_AXIS
    T: float = DEFAULT_T
    tol: float = DEFAULT_TOL
    measure: MeasureConfig = field(default_factory=MeasureConfig)
    output: str = "out"
    format: str = "csv"


def _require_mapping(value, path: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"{path}: expected a mapping, got "
                          f"{type(value).__name__}")
    return value


def _reject_unknown(data: dict, allowed, path: str):
    for key in data:
        if key not in allowed:
            where = f"{path}.{key}" if path else key
            raise ConfigError(f"unknown key '{where}'")


def _get_number(data: dict, key: str, default, path: str) -> float:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path}.{key}: expected a number, got "
                          f"{type(value).__name__}")
    return float(value)


def _get_int(data: dict, key: str, default, path: str) -> int:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}.{key}: expected an integer, got "
                          f"{type(value).__name__}")
    return value


def _get_str(data: dict, key: str, default, path: str) -> str:
    value = data.get(key, default)
    if not isinstance(value, str):
        raise ConfigError(f"{path}.{key}: expected a string, got "
                          f"{type(value).__name__}")
    return value


def _parse_model(data, path: str) -> ModelConfig:
    data = _require_mapping(data, path)
    _reject_unknown(data, {"kind", "duration", "delay", "center"}, path)
    kind = _get_str(data, "kind", "rectangular", path)
    if kind not in ("rectangular", "gaussian"):
        raise ConfigError(f"{path}.kind: unknown model kind '{kind}'")
    return ModelConfig(
        kind=kind,
        duration=_get_number(data, "duration", 1.0, path),
        delay=_get_number(data, "delay", 0.0, path),
        center=_get_number(data, "center", 0.0, path),
    )


def _parse_modulator(data, path: str) -> ModConfig:
    data = _require_mapping(data, path)
    _reject_unknown(data, {"kind", "depth", "omega_m"}, path)
    kind = _get_str(data, "kind", "identity", path)
    if kind not in ("phase", "amplitude", "identity"):
        raise ConfigError(f"{path}.kind: unknown modulator kind '{kind}'")
    cfg = ModConfig(
        kind=kind,
        depth=_get_number(data, "depth", 0.0, path),
        omega_m=_get_number(data, "omega_m", 1.0, path),
    )
    if kind != "identity" and "depth" not in data:
        raise ConfigError(f"{path}: '{kind}' modulator requires a depth")
    return cfg


def _parse_axis(data, path: str, default) -> tuple[float, int]:
    if data is None:
        return default
    data = _require_mapping(data, path)
    _reject_unknown(data, {"half_width", "n_points"}, path)
    half_width = _get_number(data, "half_width", default[0], path)
    n_points = _get_int(data, "n_points", default[1], path)
    if n_points % 2 == 0 or n_points < 3:
        raise ConfigError(f"{path}.n_points: must be odd and >= 3")
    return (half_width, n_points)


def _parse_measure(data, path: str) -> MeasureConfig:
    if data is None:
        return MeasureConfig()
    data = _require_mapping(data, path)
    allowed = {"delta_s", "delta_i", "omega_m_max", "n_samples",
               "tau_max", "n_tau"}
    _reject_unknown(data, allowed, path)
    base = MeasureConfig()
    return MeasureConfig(
        delta_s=_get_number(data, "delta_s", base.delta_s, path),
        delta_i=_get_number(data, "delta_i", base.delta_i, path),
        omega_m_max=_get_number(data, "omega_m_max", base.omega_m_max, path),
        n_samples=_get_int(data, "n_samples", base.n_samples, path),
        tau_max=_get_number(data, "tau_max", base.tau_max, path),
        n_tau=_get_int(data, "n_tau", base.n_tau, path),
    )


def parse_config(data: dict) -> RunConfig:
    """Resolve a raw configuration mapping into a validated RunConfig."""
    data = _require_mapping(data, "config")
    allowed = {"scenario", "preset", "model", "modulator_s", "modulator_i",
               "grid", "delta_axis", "T", "tol", "measure", "output",
               "format"}
    _reject_unknown(data, allowed, "")
    if "scenario" not in data:
        raise ConfigError("scenario required")
    scenario = _get_str(data, "scenario", None, "")
    if scenario not in SCENARIOS:
        raise ConfigError(f"scenario: unknown scenario '{scenario}' "
                          f"(choose from {', '.join(SCENARIOS)})")
    preset = None
    if scenario == "figure-preset":
        if "preset" not in data:
            raise ConfigError("figure-preset scenario requires 'preset'")
        preset = _get_str(data, "preset", None, "")

    model = _parse_model(data.get("model", {}), "model")
    default_grid = (DEFAULT_GRID_GAUSSIAN if model.kind == "gaussian"
                    else DEFAULT_GRID_RECTANGULAR)
    fmt = _get_str(data, "format", "csv", "")
    if fmt not in FORMATS:
        raise ConfigError(f"format: must be one of {', '.join(FORMATS)}")
    return RunConfig(
        scenario=scenario,
        preset=preset,
        model=model,
        modulator_s=_parse_modulator(data.get("modulator_s", {}),
                                     "modulator_s"),
        modulator_i=_parse_modulator(data.get("modulator_i", {}),
                                     "modulator_i"),
        grid=_parse_axis(data.get("grid"), "grid", default_grid),
        delta_axis=_parse_axis(data.get("delta_axis"), "delta_axis",
                               DEFAULT_DELTA_AXIS),
        T=_get_number(data, "T", DEFAULT_T, ""),
        tol=_get_number(data, "tol", DEFAULT_TOL, ""),
        measure=_parse_measure(data.get("measure"), "measure"),
        output=_get_str(data, "output", "out", ""),
        format=fmt,
    )
