"""Symmetric 3x3 tensor algebra."""
from .sym_tensor import SymTensor3, Tensor3
from .operations import (
    Invariants,
    SPD_FLOOR,
    SINGULAR_FLOOR,
    spd_sqrt,
    smallest_eigenvalue,
    dev,
    determinant,
    frobenius_norm,
    invariants_of,
    inverse,
    convect,
    sym_product,
    symmetric_part,
    rotate,
)

__all__ = [
    'SymTensor3', 'Tensor3', 'Invariants', 'SPD_FLOOR', 'SINGULAR_FLOOR',
    'spd_sqrt', 'smallest_eigenvalue', 'dev', 'determinant', 'frobenius_norm',
    'invariants_of', 'inverse', 'convect', 'sym_product', 'symmetric_part', 'rotate',
]
