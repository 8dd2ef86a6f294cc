"""
Parsing of protocol specifications such as ``osc:gamma0=0.01,omega=2.0``.
"""
from typing import Callable, Dict

from exceptions import ConfigError
from .protocol_interface import FlowProtocol
from .protocols import (
    RestProtocol,
    SimpleShear,
    OscillatoryShear,
    RampStepShear,
    UniaxialExtension,
    DEFAULT_RAMP_TIME,
)

# kind -> (required keys, optional keys with defaults, constructor)
_PROTOCOLS: Dict[str, tuple] = {
    "rest": ((), {}, lambda v: RestProtocol()),
    "shear": (("rate",), {}, lambda v: SimpleShear(rate=v["rate"])),
    "osc": (("gamma0", "omega"), {}, lambda v: OscillatoryShear(gamma0=v["gamma0"], omega=v["omega"])),
    "uniaxial": (("rate",), {}, lambda v: UniaxialExtension(rate=v["rate"])),
    "step": (("gamma",), {"ramp": DEFAULT_RAMP_TIME},
             lambda v: RampStepShear(gamma=v["gamma"], ramp=v["ramp"])),
}


def supported_protocols() -> list:
    return sorted(_PROTOCOLS)


def parse_protocol(spec: str, default_ramp: float = DEFAULT_RAMP_TIME) -> FlowProtocol:
    """
    Build a protocol from its command-line specification.

    Args:
        spec: ``kind`` or ``kind:key=value,key=value``
        default_ramp: Ramp time of ``step`` when the spec gives none

    Returns:
        FlowProtocol: The described protocol

    Raises:
        ConfigError: On unknown kinds, unknown or missing keys, or bad numbers
    """
    text = spec.strip()
    kind, _, arg_text = text.partition(":")
    kind = kind.strip().lower()
    if kind not in _PROTOCOLS:
        raise ConfigError(f"unknown protocol '{kind}' (expected one of {', '.join(supported_protocols())})")
    required, optional, build = _PROTOCOLS[kind]

    values = dict(optional)
    if kind == "step":
        values["ramp"] = default_ramp
    if arg_text.strip():
        for item in arg_text.split(","):
            key, sep, raw = item.partition("=")
            key = key.strip()
            if not sep or not key:
                raise ConfigError(f"malformed protocol argument '{item.strip()}' in '{spec}'")
            if key not in required and key not in optional:
                raise ConfigError(f"protocol '{kind}' has no parameter '{key}'")
            try:
                values[key] = float(raw)
            except ValueError as e:
                raise ConfigError(f"protocol parameter '{key}' is not a number: '{raw.strip()}'") from e

    missing = [key for key in required if key not in values]
    if missing:
        raise ConfigError(f"protocol '{kind}' requires {', '.join(missing)}")
    try:
        return build(values)
    except ValueError as e:
        raise ConfigError(str(e)) from e
