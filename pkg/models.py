"""
Core data models shared across the rheology laboratory.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from tensor_core import SymTensor3


@dataclass
class SimRecord:
    """One recorded instant of a 3D simulation."""
    t: float
    stress: SymTensor3
    n1: float
    n2: float
    psi: float
    xi: float
    det_a: float
    det_b: float
    stress_power: float = 0.0  # S·D

    @classmethod
    def csv_header(cls) -> Tuple[str, ...]:
        return ("t", "S11", "S22", "S33", "S12", "S13", "S23", "N1", "N2", "psi", "xi", "det_a", "det_b")

    def csv_values(self) -> Tuple[float, ...]:
        s = self.stress
        return (self.t, s.a11, s.a22, s.a33, s.a12, s.a13, s.a23,
                self.n1, self.n2, self.psi, self.xi, self.det_a, self.det_b)


@dataclass(frozen=True)
class BurgersCoeffs:
    """
    Coefficients of σ + p₁σ̇ + p₂σ̈ = q₁ε̇ + q₂ε̈.

    p₁ [time], p₂ [time²], q₁ [stress·time], q₂ [stress·time²].
    """
    p1: float
    p2: float
    q1: float
    q2: float

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.p1, self.p2, self.q1, self.q2)

    @property
    def discriminant(self) -> float:
        """p₁² − 4p₂; non-negative for a real relaxation spectrum."""
        return self.p1 * self.p1 - 4.0 * self.p2

    @property
    def instantaneous_modulus(self) -> float:
        """High-frequency plateau q₂/p₂ (0 for the Maxwell-like case p₂ = 0)."""
        return self.q2 / self.p2 if self.p2 > 0.0 else 0.0


@dataclass
class BurgersSeries:
    """Strain-driven 1D response sampled on a uniform grid."""
    t: np.ndarray
    eps: np.ndarray
    sigma: np.ndarray


@dataclass
class ElementState:
    """Strains of every element of a network at one instant, and the stress."""
    strains: Dict[str, float]
    sigma: float


@dataclass
class NetworkSeries:
    """Element-network response sampled on a uniform grid."""
    arrangement: str
    t: np.ndarray
    eps: np.ndarray
    sigma: np.ndarray
    states: List[ElementState] = field(default_factory=list)


@dataclass
class CreepSeries:
    """Stress-controlled response ε(t) under constant σ₀."""
    t: np.ndarray
    eps: np.ndarray
    eps_rate: np.ndarray
    sigma0: float
