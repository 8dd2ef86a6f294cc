"""
Scenario model and loading.

Values are merged from the packaged defaults, an optional scenario file and
command flags (later sources win), then validated by pydantic.
"""
from pathlib import Path
from typing import Any, Dict, List, Literal, Mapping, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from config import ConfigManager
from exceptions import ConfigError
from kinematics import FlowProtocol, parse_protocol
from models3d import MaterialParams, params_for, parse_inline_params

RAW_KEYS = ("omega", "network", "protocol", "params")
_PARAM_PREFIXES = ("mu", "eta")


class Scenario(BaseModel):
    """A fully resolved run description."""

    model_config = ConfigDict(extra="forbid")

    command: Optional[str] = None
    model: Optional[int] = None
    network: Optional[str] = None
    params: Dict[str, float] = Field(default_factory=dict)
    protocol: str = "rest"
    t_end: float
    dt: float
    record_every: int = 1
    ramp_time: float = 1e-3
    out: Optional[str] = None
    compare_mode: Optional[Literal["shear", "uniaxial"]] = None
    amplitude: float = 1.0
    omega: List[str] = Field(default_factory=list)
    verify: bool = False
    stress_normalization: Literal["extra", "traceless"] = "extra"

    @field_validator("dt", "ramp_time", "amplitude")
    @classmethod
    def _positive(cls, value: float, info) -> float:
        if not value > 0.0:
            raise ValueError(f"{info.field_name} must be positive, got {value}")
        return value

    @field_validator("record_every")
    @classmethod
    def _stride(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"record_every must be at least 1, got {value}")
        return value

    @field_validator("model")
    @classmethod
    def _model_id(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value not in (1, 2, 3, 4):
            raise ValueError(f"model must be one of 1, 2, 3, 4 (got {value})")
        return value

    @field_validator("params")
    @classmethod
    def _positive_params(cls, value: Dict[str, float]) -> Dict[str, float]:
        for name, v in value.items():
            if not v > 0.0:
                raise ValueError(f"parameter {name} must be positive, got {v}")
        return value

    @field_validator("omega", mode="before")
    @classmethod
    def _omega_list(cls, value: Any) -> List[str]:
        if value is None:
            return []
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        if isinstance(value, (int, float)):
            return [str(value)]
        return [str(item) for item in value]

    @model_validator(mode="after")
    def _span(self) -> "Scenario":
        if self.t_end < self.dt:
            raise ValueError(f"t_end ({self.t_end}) must be at least dt ({self.dt})")
        return self

    def material_params(self) -> MaterialParams:
        """
        Parameters of ``model``.

        Raises:
            ConfigError: If no model is set or the names do not match it
        """
        if self.model is None:
            raise ConfigError("a model (--model) is required")
        return params_for(self.model, self.params)

    def flow_protocol(self) -> FlowProtocol:
        """
        The parsed protocol, checked against ``compare_mode`` when set.

        Raises:
            ConfigError: On malformed specs or a mode mismatch
        """
        protocol = parse_protocol(self.protocol, default_ramp=self.ramp_time)
        if self.compare_mode is not None and protocol.compare_mode != self.compare_mode:
            raise ConfigError(
                f"protocol '{self.protocol}' compares in {protocol.compare_mode} mode, not {self.compare_mode}")
        return protocol

    def omegas(self) -> List[float]:
        """Angular frequencies as floats, in input order."""
        try:
            values = [float(w) for w in self.omega]
        except ValueError as e:
            raise ConfigError(f"omega grid is not numeric: {e}") from e
        if not values:
            raise ConfigError("an omega grid (--omega) is required")
        if any(not w > 0.0 for w in values):
            raise ConfigError("omega values must be positive")
        return values


def resolve_params(value: Union[None, str, Mapping[str, Any]]) -> Dict[str, float]:
    """
    Parameter values from a mapping, a parameter file or inline text.

    Args:
        value: ``{"mu3": 1, ...}``, a path to a scenario-style file, or
            ``mu3=1,mu_p=1,...``

    Returns:
        Dict[str, float]: Parameter values by name
    """
    if value is None:
        return {}
    if isinstance(value, Mapping):
        try:
            return {str(k): float(v) for k, v in value.items()}
        except (TypeError, ValueError) as e:
            raise ConfigError(f"parameter values must be numbers: {e}") from e
    text = str(value).strip()
    if "=" not in text and Path(text).is_file():
        return _param_entries(ConfigManager.load_scenario_file(text))
    return parse_inline_params(text)


def _param_entries(values: Mapping[str, Any]) -> Dict[str, float]:
    params: Dict[str, float] = {}
    nested = values.get("params")
    if nested is not None:
        params.update(resolve_params(nested))
    for key, value in values.items():
        if key.startswith(_PARAM_PREFIXES):
            try:
                params[key] = float(value)
            except (TypeError, ValueError) as e:
                raise ConfigError(f"parameter '{key}' is not a number: {value!r}") from e
    return params


def load_scenario(path: Optional[Union[str, Path]] = None,
                  overrides: Optional[Mapping[str, Any]] = None,
                  config_manager: Optional[ConfigManager] = None) -> Scenario:
    """
    Build a validated scenario.

    Args:
        path: Optional scenario file (``key = value`` text or YAML)
        overrides: Command-flag values; ``None`` entries are ignored
        config_manager: Source of packaged defaults

    Returns:
        Scenario: Validated scenario

    Raises:
        ConfigError: On unreadable files or invalid values
    """
    config_manager = config_manager or ConfigManager()
    defaults = config_manager.get_simulation_config()
    merged: Dict[str, Any] = {k: v for k, v in defaults.items() if k in Scenario.model_fields}

    params: Dict[str, float] = {}
    if path is not None:
        file_values = ConfigManager.load_scenario_file(path, raw_keys=RAW_KEYS)
        params.update(_param_entries(file_values))
        merged.update({k: v for k, v in file_values.items()
                       if k != "params" and not k.startswith(_PARAM_PREFIXES)})

    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    if "params" in overrides:
        params.update(resolve_params(overrides.pop("params")))
    merged.update(overrides)
    merged["params"] = params

    try:
        return Scenario(**merged)
    except ValidationError as e:
        raise ConfigError(_validation_message(e)) from e


def _validation_message(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(p) for p in item["loc"]) or "scenario"
        parts.append(f"{location}: {item['msg']}")
    return "invalid scenario: " + "; ".join(parts)
