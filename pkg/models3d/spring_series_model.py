"""
Model 2: a spring in series with a dashpot that is parallel to a Maxwell
branch (network arrangement (b)).

State (B₂, B₃). B₃ maps the intermediate configuration κ_G to the current
one; B₂ lives on κ_G and is convected with L_G = D_G (zero spin).
"""
from typing import Tuple

import numpy as np

from tensor_core import SymTensor3, spd_sqrt, dev, convect, sym_product
from .model_interface import ConstitutiveModelInterface
from .params import Model2Params
from .state import ModelState, InternalRates


class SpringSeriesModel(ConstitutiveModelInterface):
    """Three-dimensional model reducing to arrangement (b)."""

    model_id = 2
    params_type = Model2Params
    state_labels = ("B2", "B3")
    rate_labels = ("D1", "DG")

    def internal_rates(self, state: ModelState) -> InternalRates:
        p = self.params
        b2, b3 = state.a, state.b
        d1 = dev(b2) * (p.mu2 / p.eta1)
        d_g = dev(p.mu3 * b3 - p.mu2 * b2) * (1.0 / p.eta_g)
        return InternalRates(d1, d_g)

    def state_rate(self, state: ModelState, velocity_gradient: np.ndarray) -> ModelState:
        rates = self.internal_rates(state)
        d1, d_g = rates.first, rates.second
        v2 = spd_sqrt(state.a).matrix
        v3 = spd_sqrt(state.b).matrix
        b3_rate = convect(state.b, velocity_gradient) - 2.0 * sym_product(v3, d_g, v3)
        b2_rate = convect(state.a, d_g.matrix) - 2.0 * sym_product(v2, d1, v2)
        return ModelState(b2_rate, b3_rate)

    def extra_stress(self, state: ModelState) -> SymTensor3:
        return self.params.mu3 * state.b

    def moduli(self) -> Tuple[float, float]:
        return (self.params.mu2, self.params.mu3)

    def viscosities(self) -> Tuple[float, float]:
        return (self.params.eta1, self.params.eta_g)
