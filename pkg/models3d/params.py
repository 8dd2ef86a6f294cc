"""
Material parameters of the four natural-configuration models.

Moduli μ are in stress units, viscosities η in stress·time. A zero modulus
is accepted so a spring can be switched off (degenerate-limit studies);
``require_positive`` enforces the strict positivity that the coefficient
maps and the command line need.
"""
import math
from dataclasses import dataclass, fields, asdict
from typing import ClassVar, Dict, Mapping, Type

from exceptions import NonPositiveParameterError, ConfigError


@dataclass(frozen=True)
class MaterialParams:
    """Base for per-model parameter sets."""
    model_id: ClassVar[int] = 0

    def __post_init__(self):
        for f in fields(self):
            value = float(getattr(self, f.name))
            object.__setattr__(self, f.name, value)
            if not math.isfinite(value):
                raise NonPositiveParameterError(f"{f.name} must be finite, got {value}")
            if f.name.startswith("eta") and not value > 0.0:
                raise NonPositiveParameterError(f"viscosity {f.name} must be positive, got {value}")
            if f.name.startswith("mu") and value < 0.0:
                raise NonPositiveParameterError(f"modulus {f.name} must be non-negative, got {value}")

    def require_positive(self) -> "MaterialParams":
        """
        Check every parameter is strictly positive.

        Returns:
            MaterialParams: self, for chaining

        Raises:
            NonPositiveParameterError: If any modulus is zero
        """
        for name, value in self.as_dict().items():
            if not value > 0.0:
                raise NonPositiveParameterError(f"{name} must be strictly positive, got {value}")
        return self

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)

    @classmethod
    def parameter_names(cls) -> tuple:
        return tuple(f.name for f in fields(cls))


@dataclass(frozen=True)
class Model1Params(MaterialParams):
    """Dashpot η₁ in series with spring μ_p parallel to a Maxwell (μ₃, η₂) branch."""
    mu3: float
    mu_p: float
    eta1: float
    eta2: float
    model_id: ClassVar[int] = 1


@dataclass(frozen=True)
class Model2Params(MaterialParams):
    """Spring μ₃ in series with dashpot η_G parallel to a Maxwell (μ₂, η₁) branch."""
    mu2: float
    mu3: float
    eta1: float
    eta_g: float
    model_id: ClassVar[int] = 2


@dataclass(frozen=True)
class Model3Params(MaterialParams):
    """Spring μ₃, Kelvin-Voigt (μ₂, η₂) and dashpot η₁ in series."""
    mu2: float
    mu3: float
    eta1: float
    eta2: float
    model_id: ClassVar[int] = 3


@dataclass(frozen=True)
class Model4Params(MaterialParams):
    """Two Maxwell branches (μ₂, η₁) and (μ₄, η₃) in parallel."""
    mu2: float
    mu4: float
    eta1: float
    eta3: float
    model_id: ClassVar[int] = 4


PARAMS_BY_MODEL: Dict[int, Type[MaterialParams]] = {
    1: Model1Params,
    2: Model2Params,
    3: Model3Params,
    4: Model4Params,
}

_ALIASES = {"mup": "mu_p", "etag": "eta_g", "eta_G": "eta_g", "mu_P": "mu_p"}


def params_for(model_id: int, values: Mapping[str, float]) -> MaterialParams:
    """
    Build the parameter set of ``model_id`` from a name → value mapping.

    Args:
        model_id: 1, 2, 3 or 4
        values: Parameter values keyed by name (``mu3``, ``eta_g``, ...)

    Returns:
        MaterialParams: Validated parameters

    Raises:
        ConfigError: On unknown models, missing or unexpected names
    """
    if model_id not in PARAMS_BY_MODEL:
        raise ConfigError(f"model must be one of 1, 2, 3, 4 (got {model_id})")
    cls = PARAMS_BY_MODEL[model_id]
    normalized = {_ALIASES.get(k, k): v for k, v in values.items()}
    expected = set(cls.parameter_names())
    unexpected = sorted(set(normalized) - expected)
    missing = sorted(expected - set(normalized))
    if unexpected:
        raise ConfigError(f"model {model_id} has no parameter(s) {', '.join(unexpected)}")
    if missing:
        raise ConfigError(f"model {model_id} requires parameter(s) {', '.join(missing)}")
    try:
        return cls(**{k: float(v) for k, v in normalized.items()})
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid parameter value: {e}") from e


def parse_inline_params(text: str) -> Dict[str, float]:
    """
    Parse ``mu3=1,mu_p=1,eta1=2,eta2=2``.

    Raises:
        ConfigError: On malformed items
    """
    values: Dict[str, float] = {}
    for item in text.split(","):
        if not item.strip():
            continue
        key, sep, raw = item.partition("=")
        if not sep:
            raise ConfigError(f"malformed parameter '{item.strip()}', expected name=value")
        try:
            values[key.strip()] = float(raw)
        except ValueError as e:
            raise ConfigError(f"parameter '{key.strip()}' is not a number: '{raw.strip()}'") from e
    return values
