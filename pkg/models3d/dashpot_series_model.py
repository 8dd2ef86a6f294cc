"""
Model 1: a dashpot in series with a spring that is parallel to a Maxwell
branch (network arrangement (a)).

State (B₃, B_p). The natural configuration reached through F_p relaxes by
D₁; the one reached through F₃ sits on top of it and relaxes by D₂, so B₃
is convected with L_p = L − V_p D₁ V_p⁻¹.
"""
from typing import Tuple

import numpy as np

from tensor_core import SymTensor3, spd_sqrt, dev, inverse, convect, sym_product
from .model_interface import ConstitutiveModelInterface
from .params import Model1Params
from .state import ModelState, InternalRates


class DashpotSeriesModel(ConstitutiveModelInterface):
    """Three-dimensional model reducing to arrangement (a)."""

    model_id = 1
    params_type = Model1Params
    state_labels = ("B3", "Bp")
    rate_labels = ("D1", "D2")

    def _rates_and_stretches(self, state: ModelState) -> Tuple[InternalRates, np.ndarray, np.ndarray]:
        p = self.params
        b3, bp = state.a, state.b
        v3 = spd_sqrt(b3).matrix
        vp = spd_sqrt(bp).matrix
        f2 = inverse(v3) @ vp
        m = inverse(f2) @ b3.matrix @ f2
        # F₂ᵀB₃F₂⁻ᵀ + F₂⁻¹B₃F₂
        coupling = SymTensor3.from_matrix(m + m.T)
        d1 = dev(p.mu_p * bp + (0.5 * p.mu3) * coupling) * (1.0 / p.eta1)
        d2 = dev(b3) * (p.mu3 / p.eta2)
        return InternalRates(d1, d2), v3, vp

    def internal_rates(self, state: ModelState) -> InternalRates:
        return self._rates_and_stretches(state)[0]

    def state_rate(self, state: ModelState, velocity_gradient: np.ndarray) -> ModelState:
        rates, v3, vp = self._rates_and_stretches(state)
        l_p = velocity_gradient - vp @ rates.first.matrix @ inverse(vp)
        bp_rate = convect(state.b, velocity_gradient) - 2.0 * sym_product(vp, rates.first, vp)
        b3_rate = convect(state.a, l_p) - 2.0 * sym_product(v3, rates.second, v3)
        return ModelState(b3_rate, bp_rate)

    def extra_stress(self, state: ModelState) -> SymTensor3:
        return self.params.mu3 * state.a + self.params.mu_p * state.b

    def moduli(self) -> Tuple[float, float]:
        return (self.params.mu3, self.params.mu_p)

    def viscosities(self) -> Tuple[float, float]:
        return (self.params.eta1, self.params.eta2)
