"""
Tensor algebra used by every constitutive model.

All operations are pure functions of their arguments.
"""
import math
from typing import NamedTuple

import numpy as np

from exceptions import NotSPDError, SingularTensorError
from .sym_tensor import SymTensor3, Tensor3

SPD_FLOOR = 1e-12
SINGULAR_FLOOR = 1e-14


class Invariants(NamedTuple):
    """Scalar invariants returned by ``invariants_of``."""
    trace: float
    determinant: float
    frobenius_norm: float


def spd_sqrt(a: SymTensor3) -> SymTensor3:
    """
    Unique symmetric positive definite square root.

    Uses the symmetric eigendecomposition a = Q diag(w) Qᵀ, so nearly
    repeated eigenvalues are handled exactly.

    Args:
        a: Symmetric positive definite tensor

    Returns:
        SymTensor3: V with V·V = a

    Raises:
        NotSPDError: If the smallest eigenvalue is not above ``SPD_FLOOR``
    """
    w, q = np.linalg.eigh(a.matrix)
    if w[0] <= SPD_FLOOR:
        raise NotSPDError(float(w[0]))
    return SymTensor3.from_matrix((q * np.sqrt(w)) @ q.T)


def smallest_eigenvalue(a: SymTensor3) -> float:
    return float(np.linalg.eigvalsh(a.matrix)[0])


def dev(a: SymTensor3) -> SymTensor3:
    """Deviatoric part a − (tr a / 3) I."""
    p = a.trace() / 3.0
    return SymTensor3(a.a11 - p, a.a22 - p, a.a33 - p, a.a12, a.a13, a.a23)


def determinant(a: SymTensor3) -> float:
    """Determinant by cofactor expansion along the first row."""
    return (a.a11 * (a.a22 * a.a33 - a.a23 * a.a23)
            - a.a12 * (a.a12 * a.a33 - a.a23 * a.a13)
            + a.a13 * (a.a12 * a.a23 - a.a22 * a.a13))


def frobenius_norm(a: SymTensor3) -> float:
    return math.sqrt(a.dot(a))


def invariants_of(a: SymTensor3) -> Invariants:
    """
    Trace, determinant and Frobenius norm.

    Args:
        a: Symmetric tensor

    Returns:
        Invariants: (trace, determinant, frobenius_norm)
    """
    return Invariants(a.trace(), determinant(a), frobenius_norm(a))


def inverse(a: Tensor3) -> Tensor3:
    """
    Inverse of a full 3x3 tensor.

    Raises:
        SingularTensorError: If |det a| is not above ``SINGULAR_FLOOR``
    """
    a = np.asarray(a, dtype=float)
    det = float(np.linalg.det(a))
    if not abs(det) > SINGULAR_FLOOR:
        raise SingularTensorError(det)
    return np.linalg.inv(a)


def convect(a: SymTensor3, lam: Tensor3) -> SymTensor3:
    """
    Convective term lam·a + a·lamᵀ.

    The Oldroyd (upper-convected) rate of ``a`` under the velocity gradient
    ``lam`` is ȧ − convect(a, lam).
    """
    m = np.asarray(lam, dtype=float) @ a.matrix
    return SymTensor3.from_matrix(m + m.T)


def sym_product(left: Tensor3, middle: SymTensor3, right: Tensor3) -> SymTensor3:
    """Symmetric part of left·middle·right."""
    return SymTensor3.from_matrix(left @ middle.matrix @ right)


def symmetric_part(m: Tensor3) -> SymTensor3:
    """sym(m) = (m + mᵀ)/2."""
    return SymTensor3.from_matrix(m)


def rotate(a: SymTensor3, q: Tensor3) -> SymTensor3:
    """Q a Qᵀ."""
    return SymTensor3.from_matrix(q @ a.matrix @ q.T)
