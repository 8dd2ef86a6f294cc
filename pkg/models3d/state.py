"""
State containers of the 3D models.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from tensor_core import SymTensor3, rotate, Tensor3


@dataclass(frozen=True)
class ModelState:
    """
    The pair of configuration tensors of a model (or their rates).

    Which tensors ``a`` and ``b`` hold is model specific: (B₃, B_p) for
    model 1, (B₂, B₃) for models 2 and 3, (B₂, B₄) for model 4.
    """
    a: SymTensor3
    b: SymTensor3

    @classmethod
    def virgin(cls) -> "ModelState":
        """Stress-free initial state: both tensors equal to I."""
        return cls(SymTensor3.identity(), SymTensor3.identity())

    @classmethod
    def from_vector(cls, y: np.ndarray) -> "ModelState":
        return cls(SymTensor3.from_components(y[:6]), SymTensor3.from_components(y[6:]))

    def to_vector(self) -> np.ndarray:
        return np.concatenate([self.a.components(), self.b.components()])

    def tensors(self) -> Tuple[SymTensor3, SymTensor3]:
        return (self.a, self.b)

    def rotated(self, q: Tensor3) -> "ModelState":
        """State with both tensors mapped to Q·B·Qᵀ."""
        return ModelState(rotate(self.a, q), rotate(self.b, q))


@dataclass(frozen=True)
class InternalRates:
    """
    Trace-free stretching tensors of the natural configurations.

    (D₁, D₂) for models 1 and 3, (D₁, D_G) for model 2, (D₁, D₃) for
    model 4; units 1/time.
    """
    first: SymTensor3
    second: SymTensor3

    def tensors(self) -> Tuple[SymTensor3, SymTensor3]:
        return (self.first, self.second)
