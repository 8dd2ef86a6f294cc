"""
Symmetric second-order tensors in three dimensions.

Only the six independent components are stored, so every value of this
type is symmetric by construction. Full 3x3 tensors (velocity gradients,
stretch factors) are plain ``numpy`` arrays of shape (3, 3).
"""
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from exceptions import NonFiniteTensorError

Tensor3 = np.ndarray
"""A full 3x3 tensor, shape (3, 3)."""


@dataclass(frozen=True)
class SymTensor3:
    """A symmetric 3x3 tensor stored as (a11, a22, a33, a12, a13, a23)."""
    a11: float
    a22: float
    a33: float
    a12: float
    a13: float
    a23: float

    def __post_init__(self):
        if not all(math.isfinite(c) for c in (self.a11, self.a22, self.a33,
                                              self.a12, self.a13, self.a23)):
            raise NonFiniteTensorError(f"non-finite tensor component in {self.components()}")

    @classmethod
    def from_matrix(cls, m: Tensor3) -> "SymTensor3":
        """
        Build from a 3x3 array, taking its symmetric part.

        Args:
            m: Array of shape (3, 3)

        Returns:
            SymTensor3: sym(m)
        """
        m = np.asarray(m, dtype=float)
        return cls(float(m[0, 0]), float(m[1, 1]), float(m[2, 2]),
                   0.5 * float(m[0, 1] + m[1, 0]),
                   0.5 * float(m[0, 2] + m[2, 0]),
                   0.5 * float(m[1, 2] + m[2, 1]))

    @classmethod
    def from_components(cls, values: Iterable[float]) -> "SymTensor3":
        """Build from six components in (11, 22, 33, 12, 13, 23) order."""
        return cls(*(float(v) for v in values))

    @classmethod
    def identity(cls) -> "SymTensor3":
        return cls(1.0, 1.0, 1.0, 0.0, 0.0, 0.0)

    @classmethod
    def zero(cls) -> "SymTensor3":
        return cls(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    @classmethod
    def diag(cls, d1: float, d2: float, d3: float) -> "SymTensor3":
        return cls(d1, d2, d3, 0.0, 0.0, 0.0)

    @property
    def matrix(self) -> Tensor3:
        """The tensor as a symmetric (3, 3) array."""
        return np.array([[self.a11, self.a12, self.a13],
                         [self.a12, self.a22, self.a23],
                         [self.a13, self.a23, self.a33]])

    def components(self) -> np.ndarray:
        """Six components in (11, 22, 33, 12, 13, 23) order."""
        return np.array([self.a11, self.a22, self.a33, self.a12, self.a13, self.a23])

    def trace(self) -> float:
        return self.a11 + self.a22 + self.a33

    def dot(self, other: "SymTensor3") -> float:
        """Double contraction A·B = tr(A Bᵀ)."""
        return (self.a11 * other.a11 + self.a22 * other.a22 + self.a33 * other.a33
                + 2.0 * (self.a12 * other.a12 + self.a13 * other.a13 + self.a23 * other.a23))

    def __add__(self, other: "SymTensor3") -> "SymTensor3":
        return SymTensor3.from_components(self.components() + other.components())

    def __sub__(self, other: "SymTensor3") -> "SymTensor3":
        return SymTensor3.from_components(self.components() - other.components())

    def __mul__(self, scalar: float) -> "SymTensor3":
        return SymTensor3.from_components(float(scalar) * self.components())

    __rmul__ = __mul__

    def __neg__(self) -> "SymTensor3":
        return self * -1.0
