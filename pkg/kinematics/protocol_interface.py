"""
Flow protocol interface.
This module follows the Interface Segregation Principle by defining
a focused interface for prescribed deformation histories.
"""
from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np

Drive1D = Tuple[float, float, float]
"""(ε, ε̇, ε̈) at one instant."""

SHEAR = "shear"
UNIAXIAL = "uniaxial"


class FlowProtocol(ABC):
    """
    Analytic, isochoric deformation history.

    Implementations supply the velocity gradient L(t) driving a 3D
    simulation and the matched scalar strain drive of the 1D Burgers law.
    Everything is closed-form; nothing is differentiated numerically.
    """

    compare_mode: str = SHEAR

    @abstractmethod
    def velocity_gradient(self, t: float) -> np.ndarray:
        """
        Velocity gradient at time t.

        Args:
            t: Time (t ≥ 0)

        Returns:
            np.ndarray: Trace-free (3, 3) array
        """
        pass

    @abstractmethod
    def drive_1d(self, t: float) -> Drive1D:
        """
        Matched one-dimensional strain drive.

        Args:
            t: Time (t ≥ 0)

        Returns:
            Drive1D: (ε, ε̇, ε̈)
        """
        pass

    @abstractmethod
    def scaled(self, factor: float) -> "FlowProtocol":
        """
        Copy with the strain magnitude multiplied by ``factor``.

        Args:
            factor: Positive scale applied to the rate or amplitude

        Returns:
            FlowProtocol: Scaled protocol of the same kind
        """
        pass

    @abstractmethod
    def to_spec(self) -> str:
        """Protocol in command-line syntax, e.g. ``shear:rate=1.0``."""
        pass

    def __str__(self) -> str:
        return self.to_spec()
