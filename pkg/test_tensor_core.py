"""
Tests for the symmetric tensor algebra.
"""
import numpy as np
import pytest

from exceptions import NonFiniteTensorError, NotSPDError, SingularTensorError
from tensor_core import (
    SymTensor3,
    convect,
    determinant,
    dev,
    frobenius_norm,
    invariants_of,
    inverse,
    rotate,
    smallest_eigenvalue,
    spd_sqrt,
)


def random_spd(rng) -> SymTensor3:
    m = rng.normal(size=(3, 3))
    return SymTensor3.from_matrix(m @ m.T + np.eye(3))


def random_rotation(rng) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def test_spd_sqrt_of_diagonal():
    """Square root of a diagonal tensor is taken entry by entry."""
    v = spd_sqrt(SymTensor3.diag(4.0, 9.0, 16.0))
    np.testing.assert_allclose(v.matrix, np.diag([2.0, 3.0, 4.0]), atol=1e-14)


def test_spd_sqrt_squares_back():
    """V·V reproduces random SPD tensors and V is itself SPD."""
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = random_spd(rng)
        v = spd_sqrt(a)
        np.testing.assert_allclose(v.matrix @ v.matrix, a.matrix, rtol=1e-12, atol=1e-12)
        assert smallest_eigenvalue(v) > 0.0


def test_spd_sqrt_nearly_repeated_eigenvalues():
    a = SymTensor3.from_matrix(np.eye(3) + 1e-13 * np.array([[1.0, 0.5, 0.0], [0.5, 0.0, 0.0], [0.0, 0.0, 0.0]]))
    v = spd_sqrt(a)
    np.testing.assert_allclose(v.matrix @ v.matrix, a.matrix, atol=1e-14)


def test_spd_sqrt_rejects_indefinite():
    with pytest.raises(NotSPDError) as excinfo:
        spd_sqrt(SymTensor3.diag(1.0, -1.0, 1.0))
    assert excinfo.value.min_eigenvalue == pytest.approx(-1.0)


def test_dev_is_trace_free():
    rng = np.random.default_rng(11)
    a = random_spd(rng)
    assert abs(dev(a).trace()) <= 1e-13 * frobenius_norm(a)
    assert frobenius_norm(dev(SymTensor3.identity())) == 0.0


def test_determinant_matches_numpy():
    rng = np.random.default_rng(3)
    for _ in range(20):
        a = random_spd(rng)
        assert determinant(a) == pytest.approx(np.linalg.det(a.matrix), rel=1e-12)


def test_inverse_of_singular_tensor():
    with pytest.raises(SingularTensorError):
        inverse(np.zeros((3, 3)))


def test_convect_identity():
    """convect(I, L) = L + Lᵀ."""
    lg = np.array([[0.0, 2.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    np.testing.assert_allclose(convect(SymTensor3.identity(), lg).matrix, lg + lg.T)


def test_rotation_preserves_invariants():
    rng = np.random.default_rng(5)
    a = random_spd(rng)
    b = rotate(a, random_rotation(rng))
    np.testing.assert_allclose(invariants_of(b), invariants_of(a), rtol=1e-12)


def test_arithmetic_and_components():
    a = SymTensor3(1.0, 2.0, 3.0, 0.1, 0.2, 0.3)
    b = 2.0 * a - a
    assert b == a
    np.testing.assert_allclose((a + a).components(), 2.0 * a.components())
    assert a.dot(SymTensor3.identity()) == pytest.approx(6.0)
    assert (-a).a12 == -0.1


def test_from_matrix_symmetrizes():
    m = np.array([[1.0, 2.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    assert SymTensor3.from_matrix(m).a12 == 1.0


def test_non_finite_components_rejected():
    with pytest.raises(NonFiniteTensorError):
        SymTensor3(1.0, float("nan"), 1.0, 0.0, 0.0, 0.0)


def test_spd_sqrt_commutes_with_rotation():
    """sqrt(Q a Qᵀ) = Q sqrt(a) Qᵀ."""
    rng = np.random.default_rng(13)
    for _ in range(50):
        a = random_spd(rng)
        q = random_rotation(rng)
        scale = frobenius_norm(a)
        np.testing.assert_allclose(spd_sqrt(rotate(a, q)).matrix, rotate(spd_sqrt(a), q).matrix,
                                   rtol=1e-11, atol=1e-11 * scale)


def test_spd_sqrt_determinant():
    rng = np.random.default_rng(17)
    for _ in range(50):
        a = random_spd(rng)
        assert determinant(spd_sqrt(a)) ** 2 == pytest.approx(determinant(a), rel=1e-10)


def test_dev_is_idempotent():
    rng = np.random.default_rng(19)
    for _ in range(20):
        a = random_spd(rng)
        np.testing.assert_allclose(dev(dev(a)).matrix, dev(a).matrix, rtol=1e-14, atol=1e-14 * frobenius_norm(a))


def test_inverse_of_spd_tensor():
    rng = np.random.default_rng(23)
    for _ in range(50):
        a = random_spd(rng).matrix
        np.testing.assert_allclose(a @ inverse(a), np.eye(3), atol=1e-12)


@pytest.mark.parametrize("a,expected", [
    (SymTensor3.identity(), (3.0, 1.0, np.sqrt(3.0))),
    (SymTensor3.diag(2.0, 1.0, 1.0), (4.0, 2.0, np.sqrt(6.0))),
])
def test_invariants_examples(a, expected):
    inv = invariants_of(a)
    assert (inv.trace, inv.determinant, inv.frobenius_norm) == pytest.approx(expected, rel=1e-15)


def test_convect_without_flow_vanishes():
    rng = np.random.default_rng(29)
    a = random_spd(rng)
    assert convect(a, np.zeros((3, 3))) == SymTensor3.zero()
