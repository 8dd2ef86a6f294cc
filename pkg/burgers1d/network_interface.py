"""
Element network interface.
This module follows the Interface Segregation Principle by defining
a focused interface for one-dimensional spring-dashpot arrangements.
"""
from abc import ABC, abstractmethod
from typing import ClassVar, Dict, List, Tuple, Type

import numpy as np

from exceptions import ConfigError
from models3d.params import MaterialParams


class ElementNetworkInterface(ABC):
    """
    Abstract interface for a spring-dashpot arrangement.

    Springs obey σ = 2με and dashpots σ = ηε̇. The integrated state is the
    vector of dashpot strains (``state_names``); every other element
    strain and the stress follow algebraically from it and from either
    the total strain or the applied stress.
    """

    arrangement: ClassVar[str] = ""
    model_id: ClassVar[int] = 0
    params_type: ClassVar[Type[MaterialParams]] = MaterialParams
    state_names: ClassVar[Tuple[str, ...]] = ()

    def __init__(self, params: MaterialParams):
        """
        Initialize the network.

        Args:
            params: Parameters of the 3D model this arrangement reduces from

        Raises:
            ConfigError: If the parameters belong to another model
            NonPositiveParameterError: If a modulus is zero
        """
        if not isinstance(params, self.params_type):
            raise ConfigError(
                f"arrangement ({self.arrangement}) needs {self.params_type.__name__}, got {type(params).__name__}")
        self.params = params.require_positive()

    @abstractmethod
    def element_strains(self, eps: float, state: np.ndarray) -> Dict[str, float]:
        """
        Strain of every element and of every composite block.

        Args:
            eps: Total strain
            state: Integrated dashpot strains

        Returns:
            Dict[str, float]: Strains keyed by element name
        """
        pass

    @abstractmethod
    def stress(self, eps: float, state: np.ndarray) -> float:
        """Stress carried by the network at total strain ``eps``."""
        pass

    @abstractmethod
    def state_rate(self, eps: float, state: np.ndarray) -> np.ndarray:
        """Rates of the dashpot strains at total strain ``eps``."""
        pass

    @abstractmethod
    def strain_under_stress(self, sigma: float, state: np.ndarray) -> float:
        """Total strain at which the network carries ``sigma``."""
        pass

    @abstractmethod
    def partition_residuals(self, eps: float, strains: Dict[str, float]) -> List[float]:
        """
        Residuals of the strain-addition rules (zero when consistent).

        Args:
            eps: Total strain
            strains: Output of ``element_strains``
        """
        pass

    def initial_state(self) -> np.ndarray:
        """Virgin network: every dashpot unstrained."""
        return np.zeros(len(self.state_names))
