"""Run configuration: JSON schema, loading, and byte-stable serialization.

Reports and configs are emitted through one canonical writer: keys keep their
insertion order and every float is printed with 17 significant digits, so a
value survives a round trip bit-for-bit and two identical runs produce
identical bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

from .errors import ConfigError, GdoError
from .interactions import (
    CotInteraction,
    Grid,
    InteractionSpec,
    LinearInteraction,
    MorseInteraction,
    PhysicalConstants,
)


@dataclass(frozen=True)
class Tolerances:
    condition: float = 1e-10
    eigen_rel: float = 1e-3
    residual: float = 1e-8

    def __post_init__(self):
        for name in ("condition", "eigen_rel", "residual"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"tolerance {name!r} must be > 0")


@dataclass(frozen=True)
class RunConfig:
    """Everything a CLI run needs; JSON round-trips losslessly."""

    interaction: InteractionSpec
    grid: Grid
    constants: PhysicalConstants = PhysicalConstants()
    tolerances: Tolerances = Tolerances()
    levels: int = 4
    mode: str = "contour"
    theta_override: Optional[float] = None

    def __post_init__(self):
        if self.levels < 1:
            raise ConfigError(f"levels must be >= 1, got {self.levels}")
        if self.mode not in ("contour", "real_line"):
            raise ConfigError(f"mode must be 'contour' or 'real_line', got {self.mode!r}")


def _require(mapping: dict, key: str, where: str):
    if key not in mapping:
        raise ConfigError(f"missing key {key!r} in {where}")
    return mapping[key]


def _interaction_from_dict(data: dict) -> InteractionSpec:
    kind = _require(data, "kind", "interaction")
    try:
        if kind == "linear":
            return LinearInteraction(
                omega=float(_require(data, "omega", "linear interaction")),
                sign=int(data.get("sign", 1)),
            )
        if kind == "morse":
            return MorseInteraction(
                D=float(_require(data, "D", "morse interaction")),
                A=float(_require(data, "A", "morse interaction")),
                B=float(data.get("B", 0.0)),
                alpha=float(_require(data, "alpha", "morse interaction")),
            )
        if kind == "cot":
            return CotInteraction(
                A=float(_require(data, "A", "cot interaction")),
                alpha=float(_require(data, "alpha", "cot interaction")),
                a=float(data.get("a", 0.0)),
                b=float(data.get("b", 0.0)),
            )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad {kind!r} interaction parameters: {exc}") from exc
    raise ConfigError(f"unknown interaction kind {kind!r} (expected linear, morse, or cot)")


def _interaction_to_dict(spec: InteractionSpec) -> dict:
    if isinstance(spec, LinearInteraction):
        return {"kind": "linear", "omega": spec.omega, "sign": spec.sign}
    if isinstance(spec, MorseInteraction):
        return {"kind": "morse", "D": spec.D, "A": spec.A, "B": spec.B, "alpha": spec.alpha}
    if isinstance(spec, CotInteraction):
        return {"kind": "cot", "A": spec.A, "alpha": spec.alpha, "a": spec.a, "b": spec.b}
    raise ConfigError("custom interactions cannot be written to JSON")


def config_from_dict(data: dict) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("configuration root must be a JSON object")
    interaction = _interaction_from_dict(_require(data, "interaction", "configuration"))
    grid_data = _require(data, "grid", "configuration")
    try:
        grid = Grid(
            x_min=float(_require(grid_data, "x_min", "grid")),
            x_max=float(_require(grid_data, "x_max", "grid")),
            n_points=int(_require(grid_data, "n_points", "grid")),
        )
        consts_data = data.get("constants", {})
        constants = PhysicalConstants(
            hbar=float(consts_data.get("hbar", 1.0)),
            c=float(consts_data.get("c", 1.0)),
            mass=float(consts_data.get("mass", 1.0)),
        )
        tol_data = data.get("tolerances", {})
        tolerances = Tolerances(
            condition=float(tol_data.get("condition", 1e-10)),
            eigen_rel=float(tol_data.get("eigen_rel", 1e-3)),
            residual=float(tol_data.get("residual", 1e-8)),
        )
        theta_override = data.get("theta_override")
        return RunConfig(
            interaction=interaction,
            grid=grid,
            constants=constants,
            tolerances=tolerances,
            levels=int(data.get("levels", 4)),
            mode=str(data.get("mode", "contour")),
            theta_override=None if theta_override is None else float(theta_override),
        )
    except ConfigError:
        raise
    except (TypeError, ValueError, GdoError) as exc:
        raise ConfigError(f"bad configuration value: {exc}") from exc


def config_to_dict(config: RunConfig) -> dict:
    out = {
        "constants": {
            "hbar": config.constants.hbar,
            "c": config.constants.c,
            "mass": config.constants.mass,
        },
        "interaction": _interaction_to_dict(config.interaction),
        "grid": {
            "x_min": config.grid.x_min,
            "x_max": config.grid.x_max,
            "n_points": config.grid.n_points,
        },
        "tolerances": {
            "condition": config.tolerances.condition,
            "eigen_rel": config.tolerances.eigen_rel,
            "residual": config.tolerances.residual,
        },
        "levels": config.levels,
        "mode": config.mode,
    }
    if config.theta_override is not None:
        out["theta_override"] = config.theta_override
    return out


def load_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read configuration file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"configuration file {path!r} is not valid JSON: {exc}") from exc
    return config_from_dict(data)


def _format_float(value: float) -> str:
    if math.isnan(value) or math.isinf(value):
        raise ConfigError("non-finite numbers have no JSON representation")
    text = format(value, ".17g")
    # keep a float marker so the value parses back as float, not int
    if not any(ch in text for ch in ".eE"):
        text += ".0"
    return text


def dumps_canonical(obj, indent: int = 0) -> str:
    """Serialize nested dict/list/scalar data with 17-significant-digit floats."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        rows = [f'{inner}{json.dumps(str(key))}: {dumps_canonical(val, indent + 1)}' for key, val in obj.items()]
        return "{\n" + ",\n".join(rows) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        rows = [f"{inner}{dumps_canonical(val, indent + 1)}" for val in obj]
        return "[\n" + ",\n".join(rows) + f"\n{pad}]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int,)):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    raise ConfigError(f"cannot serialize object of type {type(obj).__name__}")
