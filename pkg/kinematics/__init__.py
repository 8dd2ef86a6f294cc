"""Prescribed deformation protocols and their matched 1D drives."""
import numpy as np

from .protocol_interface import FlowProtocol, Drive1D, SHEAR, UNIAXIAL
from .protocols import (
    RestProtocol,
    ShearProtocol,
    SimpleShear,
    OscillatoryShear,
    RampStepShear,
    UniaxialExtension,
    DEFAULT_RAMP_TIME,
)
from .protocol_parser import parse_protocol, supported_protocols


def velocity_gradient(p: FlowProtocol, t: float) -> np.ndarray:
    """Velocity gradient L(t) of protocol ``p``."""
    return p.velocity_gradient(t)


def drive_1d(p: FlowProtocol, t: float) -> Drive1D:
    """Matched 1D drive (ε, ε̇, ε̈) of protocol ``p``."""
    return p.drive_1d(t)


__all__ = [
    'FlowProtocol', 'Drive1D', 'SHEAR', 'UNIAXIAL',
    'RestProtocol', 'ShearProtocol', 'SimpleShear', 'OscillatoryShear', 'RampStepShear',
    'UniaxialExtension', 'DEFAULT_RAMP_TIME',
    'parse_protocol', 'supported_protocols', 'velocity_gradient', 'drive_1d',
]
