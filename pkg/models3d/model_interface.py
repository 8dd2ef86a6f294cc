"""
Constitutive model interface.
This module follows the Interface Segregation Principle by defining
a focused interface for closed state-space constitutive models.
"""
from abc import ABC, abstractmethod
from typing import ClassVar, Tuple, Type

import numpy as np

from exceptions import ConfigError
from tensor_core import SymTensor3
from .params import MaterialParams
from .state import ModelState, InternalRates


class ConstitutiveModelInterface(ABC):
    """
    Abstract interface for the natural-configuration models.

    A model owns its material parameters; the state is passed in, so one
    model instance can be shared by concurrent simulations.
    """

    model_id: ClassVar[int] = 0
    params_type: ClassVar[Type[MaterialParams]] = MaterialParams
    state_labels: ClassVar[Tuple[str, str]] = ("a", "b")
    rate_labels: ClassVar[Tuple[str, str]] = ("first", "second")

    def __init__(self, params: MaterialParams):
        """
        Initialize the model.

        Args:
            params: Parameters of the matching ``params_type``

        Raises:
            ConfigError: If the parameter set belongs to another model
        """
        if not isinstance(params, self.params_type):
            raise ConfigError(
                f"model {self.model_id} needs {self.params_type.__name__}, got {type(params).__name__}")
        self.params = params

    @abstractmethod
    def internal_rates(self, state: ModelState) -> InternalRates:
        """
        Stretching tensors of the natural configurations.

        Args:
            state: Current configuration tensors (SPD)

        Returns:
            InternalRates: Trace-free rates with multipliers eliminated
        """
        pass

    @abstractmethod
    def state_rate(self, state: ModelState, velocity_gradient: np.ndarray) -> ModelState:
        """
        Time derivative of the configuration tensors.

        Args:
            state: Current configuration tensors (SPD)
            velocity_gradient: Macroscopic velocity gradient L

        Returns:
            ModelState: (ȧ, ḃ), each symmetric
        """
        pass

    @abstractmethod
    def extra_stress(self, state: ModelState) -> SymTensor3:
        """
        Stress without the indeterminate reaction pressure.

        Args:
            state: Current configuration tensors

        Returns:
            SymTensor3: Extra stress S
        """
        pass

    @abstractmethod
    def moduli(self) -> Tuple[float, float]:
        """Shear moduli paired with (state.a, state.b) in the stored energy."""
        pass

    @abstractmethod
    def viscosities(self) -> Tuple[float, float]:
        """Viscosities paired with (rates.first, rates.second) in the dissipation."""
        pass

    def stored_energy(self, state: ModelState) -> float:
        """
        Neo-Hookean stored energy per unit volume (ρ = 1).

        Returns:
            float: Σ (μ/2)(tr B − 3) over the two configuration tensors
        """
        mu_a, mu_b = self.moduli()
        return 0.5 * mu_a * (state.a.trace() - 3.0) + 0.5 * mu_b * (state.b.trace() - 3.0)

    def dissipation_rate(self, rates: InternalRates) -> float:
        """
        Quadratic rate of dissipation.

        Returns:
            float: η_a‖D_a‖² + η_b‖D_b‖² (non-negative)
        """
        eta_a, eta_b = self.viscosities()
        return eta_a * rates.first.dot(rates.first) + eta_b * rates.second.dot(rates.second)
