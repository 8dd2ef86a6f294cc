"""
Concrete deformation protocols.

Shear-family protocols prescribe only L₁₂ = γ̇(t) and map to the 1D drive
ε = γ/2 (tensorial shear strain); uniaxial extension maps to the axial true
strain.
"""
import math
from abc import abstractmethod
from dataclasses import dataclass, replace
from typing import Tuple

import numpy as np

from .protocol_interface import FlowProtocol, Drive1D, SHEAR, UNIAXIAL

DEFAULT_RAMP_TIME = 1e-3


def _fmt(value: float) -> str:
    return repr(float(value))


@dataclass(frozen=True)
class RestProtocol(FlowProtocol):
    """No motion: L ≡ 0."""
    compare_mode = SHEAR

    def velocity_gradient(self, t: float) -> np.ndarray:
        return np.zeros((3, 3))

    def drive_1d(self, t: float) -> Drive1D:
        return (0.0, 0.0, 0.0)

    def scaled(self, factor: float) -> "RestProtocol":
        return self

    def to_spec(self) -> str:
        return "rest"


class ShearProtocol(FlowProtocol):
    """Base for histories of the form L = γ̇(t) e₁⊗e₂."""
    compare_mode = SHEAR

    @abstractmethod
    def shear_strain(self, t: float) -> Tuple[float, float, float]:
        """(γ, γ̇, γ̈) at time t."""
        pass

    def velocity_gradient(self, t: float) -> np.ndarray:
        lg = np.zeros((3, 3))
        lg[0, 1] = self.shear_strain(t)[1]
        return lg

    def drive_1d(self, t: float) -> Drive1D:
        gamma, gamma_dot, gamma_ddot = self.shear_strain(t)
        return (0.5 * gamma, 0.5 * gamma_dot, 0.5 * gamma_ddot)


@dataclass(frozen=True)
class SimpleShear(ShearProtocol):
    """Steady simple shear started at t = 0: γ = γ̇ t."""
    rate: float

    def shear_strain(self, t: float) -> Tuple[float, float, float]:
        return (self.rate * t, self.rate, 0.0)

    def scaled(self, factor: float) -> "SimpleShear":
        return replace(self, rate=self.rate * factor)

    def to_spec(self) -> str:
        return f"shear:rate={_fmt(self.rate)}"


@dataclass(frozen=True)
class OscillatoryShear(ShearProtocol):
    """γ(t) = γ₀ sin(ωt)."""
    gamma0: float
    omega: float

    def shear_strain(self, t: float) -> Tuple[float, float, float]:
        s, c = math.sin(self.omega * t), math.cos(self.omega * t)
        return (self.gamma0 * s,
                self.gamma0 * self.omega * c,
                -self.gamma0 * self.omega * self.omega * s)

    def scaled(self, factor: float) -> "OscillatoryShear":
        return replace(self, gamma0=self.gamma0 * factor)

    def to_spec(self) -> str:
        return f"osc:gamma0={_fmt(self.gamma0)},omega={_fmt(self.omega)}"


@dataclass(frozen=True)
class RampStepShear(ShearProtocol):
    """
    Smoothed step strain: γ(t) = γ∞·s(t/t_r) with the C¹ smoothstep
    s(x) = 3x² − 2x³ on [0, 1] and s = 1 afterwards.
    """
    gamma: float
    ramp: float = DEFAULT_RAMP_TIME

    def __post_init__(self):
        if not self.ramp > 0.0:
            raise ValueError(f"ramp time must be positive, got {self.ramp}")

    def shear_strain(self, t: float) -> Tuple[float, float, float]:
        if t >= self.ramp:
            return (self.gamma, 0.0, 0.0)
        x = max(t, 0.0) / self.ramp
        return (self.gamma * x * x * (3.0 - 2.0 * x),
                self.gamma * 6.0 * x * (1.0 - x) / self.ramp,
                self.gamma * (6.0 - 12.0 * x) / (self.ramp * self.ramp))

    def scaled(self, factor: float) -> "RampStepShear":
        return replace(self, gamma=self.gamma * factor)

    def to_spec(self) -> str:
        return f"step:gamma={_fmt(self.gamma)},ramp={_fmt(self.ramp)}"


@dataclass(frozen=True)
class UniaxialExtension(FlowProtocol):
    """
    Isochoric uniaxial extension L = diag(ε̇₀, −ε̇₀/2, −ε̇₀/2).

    The 1D drive is the axial true strain ε = ε̇₀ t; the linearised
    (T₁₁ − T₂₂) equals 3/2 of the 1D Burgers stress.
    """
    rate: float
    compare_mode = UNIAXIAL

    def velocity_gradient(self, t: float) -> np.ndarray:
        return np.diag([self.rate, -0.5 * self.rate, -0.5 * self.rate])

    def drive_1d(self, t: float) -> Drive1D:
        return (self.rate * t, self.rate, 0.0)

    def scaled(self, factor: float) -> "UniaxialExtension":
        return replace(self, rate=self.rate * factor)

    def to_spec(self) -> str:
        return f"uniaxial:rate={_fmt(self.rate)}"
