"""
Model 3: spring, Kelvin-Voigt element and dashpot in series (network
arrangement (c)).

State (B₂, B₃) with F_p = V₃V₂. B₃ is convected with
L_p = L − F_p D₁ F_p⁻¹ and B₂ with L_G = D₂ + V₂ D₁ V₂⁻¹.
"""
from typing import Tuple

import numpy as np

from tensor_core import SymTensor3, spd_sqrt, dev, inverse, convect, sym_product
from .model_interface import ConstitutiveModelInterface
from .params import Model3Params
from .state import ModelState, InternalRates


class SeriesChainModel(ConstitutiveModelInterface):
    """Three-dimensional model reducing to arrangement (c)."""

    model_id = 3
    params_type = Model3Params
    state_labels = ("B2", "B3")
    rate_labels = ("D1", "D2")

    def _rates_and_stretches(self, state: ModelState) -> Tuple[InternalRates, np.ndarray, np.ndarray, np.ndarray]:
        p = self.params
        b2, b3 = state.a, state.b
        v2 = spd_sqrt(b2).matrix
        v3 = spd_sqrt(b3).matrix
        v2_inv = inverse(v2)
        m = v2 @ b3.matrix @ v2_inv
        d1 = dev(SymTensor3.from_matrix(m + m.T)) * (p.mu3 / (2.0 * p.eta1))
        d2 = dev(p.mu3 * b3 - p.mu2 * b2) * (1.0 / p.eta2)
        return InternalRates(d1, d2), v2, v3, v2_inv

    def internal_rates(self, state: ModelState) -> InternalRates:
        return self._rates_and_stretches(state)[0]

    def state_rate(self, state: ModelState, velocity_gradient: np.ndarray) -> ModelState:
        rates, v2, v3, v2_inv = self._rates_and_stretches(state)
        d1 = rates.first.matrix
        f_p = v3 @ v2
        l_p = velocity_gradient - f_p @ d1 @ inverse(f_p)
        l_g = rates.second.matrix + v2 @ d1 @ v2_inv
        b3_rate = convect(state.b, l_p) - 2.0 * sym_product(v3, rates.second, v3)
        b2_rate = convect(state.a, l_g) - 2.0 * sym_product(v2, rates.first, v2)
        return ModelState(b2_rate, b3_rate)

    def extra_stress(self, state: ModelState) -> SymTensor3:
        return self.params.mu3 * state.b

    def moduli(self) -> Tuple[float, float]:
        return (self.params.mu2, self.params.mu3)

    def viscosities(self) -> Tuple[float, float]:
        return (self.params.eta1, self.params.eta2)
