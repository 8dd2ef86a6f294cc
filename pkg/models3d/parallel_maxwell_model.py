"""
Model 4: two upper-convected Maxwell branches in parallel (network
arrangement (d)).
"""
from typing import Tuple

import numpy as np

from tensor_core import SymTensor3, spd_sqrt, dev, convect, sym_product
from .model_interface import ConstitutiveModelInterface
from .params import Model4Params
from .state import ModelState, InternalRates


class ParallelMaxwellModel(ConstitutiveModelInterface):
    """Three-dimensional model reducing to arrangement (d)."""

    model_id = 4
    params_type = Model4Params
    state_labels = ("B2", "B4")
    rate_labels = ("D1", "D3")

    def internal_rates(self, state: ModelState) -> InternalRates:
        p = self.params
        return InternalRates(dev(state.a) * (p.mu2 / p.eta1),
                             dev(state.b) * (p.mu4 / p.eta3))

    def state_rate(self, state: ModelState, velocity_gradient: np.ndarray) -> ModelState:
        rates = self.internal_rates(state)
        v2 = spd_sqrt(state.a).matrix
        v4 = spd_sqrt(state.b).matrix
        b2_rate = convect(state.a, velocity_gradient) - 2.0 * sym_product(v2, rates.first, v2)
        b4_rate = convect(state.b, velocity_gradient) - 2.0 * sym_product(v4, rates.second, v4)
        return ModelState(b2_rate, b4_rate)

    def extra_stress(self, state: ModelState) -> SymTensor3:
        return self.params.mu2 * state.a + self.params.mu4 * state.b

    def moduli(self) -> Tuple[float, float]:
        return (self.params.mu2, self.params.mu4)

    def viscosities(self) -> Tuple[float, float]:
        return (self.params.eta1, self.params.eta3)
