"""
The four spring-dashpot arrangements that reduce to the Burgers law.

  (a) dashpot η₁ in series with [spring μ_p ∥ (spring μ₃ – dashpot η₂)]
  (b) spring μ₃ in series with [dashpot η_G ∥ (spring μ₂ – dashpot η₁)]
  (c) spring μ₃, Kelvin-Voigt (μ₂ ∥ η₂) and dashpot η₁ in series
  (d) (spring μ₂ – dashpot η₁) ∥ (spring μ₄ – dashpot η₃)
"""
from typing import Dict, List, Type

import numpy as np

from exceptions import ConfigError
from models3d.params import MaterialParams, Model1Params, Model2Params, Model3Params, Model4Params
from .network_interface import ElementNetworkInterface


class ArrangementA(ElementNetworkInterface):
    """State (ε₁, ε₂): strains of dashpots η₁ and η₂."""

    arrangement = "a"
    model_id = 1
    params_type = Model1Params
    state_names = ("eps1", "eps2")

    def element_strains(self, eps: float, state: np.ndarray) -> Dict[str, float]:
        eps1, eps2 = state
        eps_p = eps - eps1
        return {"eps1": eps1, "eps_p": eps_p, "eps2": eps2, "eps3": eps_p - eps2}

    def stress(self, eps: float, state: np.ndarray) -> float:
        s = self.element_strains(eps, state)
        return 2.0 * self.params.mu_p * s["eps_p"] + 2.0 * self.params.mu3 * s["eps3"]

    def state_rate(self, eps: float, state: np.ndarray) -> np.ndarray:
        s = self.element_strains(eps, state)
        sigma = 2.0 * self.params.mu_p * s["eps_p"] + 2.0 * self.params.mu3 * s["eps3"]
        return np.array([sigma / self.params.eta1,
                         2.0 * self.params.mu3 * s["eps3"] / self.params.eta2])

    def strain_under_stress(self, sigma: float, state: np.ndarray) -> float:
        p = self.params
        eps_p = (sigma + 2.0 * p.mu3 * state[1]) / (2.0 * p.mu_p + 2.0 * p.mu3)
        return eps_p + state[0]

    def partition_residuals(self, eps: float, strains: Dict[str, float]) -> List[float]:
        return [eps - strains["eps1"] - strains["eps_p"],
                strains["eps_p"] - strains["eps2"] - strains["eps3"]]


class ArrangementB(ElementNetworkInterface):
    """State (ε_G, ε₁): strains of dashpots η_G and η₁."""

    arrangement = "b"
    model_id = 2
    params_type = Model2Params
    state_names = ("eps_g", "eps1")

    def element_strains(self, eps: float, state: np.ndarray) -> Dict[str, float]:
        eps_g, eps1 = state
        return {"eps3": eps - eps_g, "eps_g": eps_g, "eps2": eps_g - eps1, "eps1": eps1}

    def stress(self, eps: float, state: np.ndarray) -> float:
        return 2.0 * self.params.mu3 * (eps - state[0])

    def state_rate(self, eps: float, state: np.ndarray) -> np.ndarray:
        p = self.params
        s = self.element_strains(eps, state)
        branch = 2.0 * p.mu2 * s["eps2"]
        return np.array([(2.0 * p.mu3 * s["eps3"] - branch) / p.eta_g, branch / p.eta1])

    def strain_under_stress(self, sigma: float, state: np.ndarray) -> float:
        return sigma / (2.0 * self.params.mu3) + state[0]

    def partition_residuals(self, eps: float, strains: Dict[str, float]) -> List[float]:
        return [eps - strains["eps3"] - strains["eps_g"],
                strains["eps_g"] - strains["eps2"] - strains["eps1"]]


class ArrangementC(ElementNetworkInterface):
    """State (ε₁, ε₂): strain of dashpot η₁ and of the Kelvin-Voigt block."""

    arrangement = "c"
    model_id = 3
    params_type = Model3Params
    state_names = ("eps1", "eps2")

    def element_strains(self, eps: float, state: np.ndarray) -> Dict[str, float]:
        eps1, eps2 = state
        return {"eps3": eps - eps1 - eps2, "eps2": eps2, "eps1": eps1}

    def stress(self, eps: float, state: np.ndarray) -> float:
        return 2.0 * self.params.mu3 * (eps - state[0] - state[1])

    def state_rate(self, eps: float, state: np.ndarray) -> np.ndarray:
        p = self.params
        sigma = self.stress(eps, state)
        return np.array([sigma / p.eta1, (sigma - 2.0 * p.mu2 * state[1]) / p.eta2])

    def strain_under_stress(self, sigma: float, state: np.ndarray) -> float:
        return sigma / (2.0 * self.params.mu3) + state[0] + state[1]

    def partition_residuals(self, eps: float, strains: Dict[str, float]) -> List[float]:
        return [eps - strains["eps1"] - strains["eps2"] - strains["eps3"]]


class ArrangementD(ElementNetworkInterface):
    """State (ε₁, ε₃): strains of dashpots η₁ and η₃."""

    arrangement = "d"
    model_id = 4
    params_type = Model4Params
    state_names = ("eps1", "eps3")

    def element_strains(self, eps: float, state: np.ndarray) -> Dict[str, float]:
        eps1, eps3 = state
        return {"eps2": eps - eps1, "eps1": eps1, "eps4": eps - eps3, "eps3": eps3}

    def stress(self, eps: float, state: np.ndarray) -> float:
        p = self.params
        return 2.0 * p.mu2 * (eps - state[0]) + 2.0 * p.mu4 * (eps - state[1])

    def state_rate(self, eps: float, state: np.ndarray) -> np.ndarray:
        p = self.params
        return np.array([2.0 * p.mu2 * (eps - state[0]) / p.eta1,
                         2.0 * p.mu4 * (eps - state[1]) / p.eta3])

    def strain_under_stress(self, sigma: float, state: np.ndarray) -> float:
        p = self.params
        return (sigma + 2.0 * p.mu2 * state[0] + 2.0 * p.mu4 * state[1]) / (2.0 * p.mu2 + 2.0 * p.mu4)

    def partition_residuals(self, eps: float, strains: Dict[str, float]) -> List[float]:
        return [eps - strains["eps1"] - strains["eps2"],
                eps - strains["eps3"] - strains["eps4"]]


ARRANGEMENTS: Dict[str, Type[ElementNetworkInterface]] = {
    "a": ArrangementA,
    "b": ArrangementB,
    "c": ArrangementC,
    "d": ArrangementD,
}

ARRANGEMENT_FOR_MODEL = {cls.model_id: name for name, cls in ARRANGEMENTS.items()}


def create_network(arrangement: str, params: MaterialParams) -> ElementNetworkInterface:
    """
    Instantiate arrangement a-d.

    Raises:
        ConfigError: On unknown arrangements or mismatched parameters
    """
    key = arrangement.lower()
    if key not in ARRANGEMENTS:
        raise ConfigError(f"arrangement must be one of a, b, c, d (got {arrangement!r})")
    return ARRANGEMENTS[key](params)
