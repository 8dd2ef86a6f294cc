"""
Tests for the 3D natural-configuration models and their simulation.
"""
import math

import numpy as np
import pytest

from exceptions import ConfigError, StepFailure
from kinematics import FlowProtocol, RampStepShear, RestProtocol, SimpleShear
from models3d import (
    MODELS,
    Model1Params,
    Model2Params,
    Model3Params,
    Model4Params,
    ModelState,
    InternalRates,
    create_model,
    dissipation_rate,
    extra_stress,
    internal_rates,
    simulate,
    state_rate,
    stored_energy,
    stress_history,
)
from processing import SignalProcessor
from tensor_core import SymTensor3, determinant, dev, frobenius_norm, rotate

UNIT_PARAMS = {
    1: Model1Params(mu3=1.0, mu_p=1.0, eta1=1.0, eta2=1.0),
    2: Model2Params(mu2=1.0, mu3=1.0, eta1=1.0, eta_g=1.0),
    3: Model3Params(mu2=1.0, mu3=1.0, eta1=1.0, eta2=1.0),
    4: Model4Params(mu2=1.0, mu4=1.0, eta1=1.0, eta3=1.0),
}
ALL_MODELS = sorted(UNIT_PARAMS)


def unimodular_spd(rng, spread: float = 0.2) -> SymTensor3:
    """Random SPD tensor with unit determinant."""
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    a, b = rng.uniform(-spread, spread, size=2)
    return SymTensor3.from_matrix(q @ np.diag(np.exp([a, b, -a - b])) @ q.T)


def random_rotation(rng) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


class RotatedProtocol(FlowProtocol):
    """Velocity gradient Q·L·Qᵀ of another protocol."""

    def __init__(self, base: FlowProtocol, q: np.ndarray):
        self.base = base
        self.q = q

    def velocity_gradient(self, t):
        return self.q @ self.base.velocity_gradient(t) @ self.q.T

    def drive_1d(self, t):
        return self.base.drive_1d(t)

    def scaled(self, factor):
        return RotatedProtocol(self.base.scaled(factor), self.q)

    def to_spec(self):
        return f"rotated {self.base.to_spec()}"


@pytest.mark.parametrize("model", ALL_MODELS)
def test_rest_is_fixed_point(model):
    """Identity state under L = 0 has zero rate."""
    rate = state_rate(model, UNIT_PARAMS[model], ModelState.virgin(), np.zeros((3, 3)))
    assert frobenius_norm(rate.a) <= 1e-14
    assert frobenius_norm(rate.b) <= 1e-14
    rates = internal_rates(model, UNIT_PARAMS[model], ModelState.virgin())
    assert dissipation_rate(model, UNIT_PARAMS[model], rates) <= 1e-28


@pytest.mark.parametrize("model", ALL_MODELS)
def test_internal_rates_are_trace_free(model):
    rng = np.random.default_rng(100 + model)
    for _ in range(20):
        state = ModelState(unimodular_spd(rng), unimodular_spd(rng))
        for rate in internal_rates(model, UNIT_PARAMS[model], state).tensors():
            assert abs(rate.trace()) <= 1e-13 * max(frobenius_norm(rate), 1.0)


@pytest.mark.parametrize("model", ALL_MODELS)
def test_state_rate_is_symmetric_and_isochoric(model):
    """d(det B)/dt = det B · tr(B⁻¹Ḃ) vanishes under every closure."""
    rng = np.random.default_rng(200 + model)
    lg = rng.normal(size=(3, 3))
    lg -= np.trace(lg) / 3.0 * np.eye(3)
    state = ModelState(unimodular_spd(rng), unimodular_spd(rng))
    rate = state_rate(model, UNIT_PARAMS[model], state, lg)
    for b, b_rate in zip(state.tensors(), rate.tensors()):
        assert np.trace(np.linalg.solve(b.matrix, b_rate.matrix)) == pytest.approx(0.0, abs=1e-12)


def test_model4_rate_example():
    params = Model4Params(mu2=1.0, mu4=1.0, eta1=2.0, eta3=1.0)
    state = ModelState(SymTensor3.diag(1 + 2e-3, 1 - 1e-3, 1 - 1e-3), SymTensor3.identity())
    d1 = internal_rates(4, params, state).first
    np.testing.assert_allclose(d1.components(), [1e-3, -5e-4, -5e-4, 0.0, 0.0, 0.0], atol=1e-14)


def test_model2_equal_tensors_cancel():
    params = Model2Params(mu2=1.0, mu3=1.0, eta1=2.0, eta_g=3.0)
    b = unimodular_spd(np.random.default_rng(1))
    rates = internal_rates(2, params, ModelState(b, b))
    assert frobenius_norm(rates.second) == pytest.approx(0.0, abs=1e-15)
    np.testing.assert_allclose(rates.first.components(), (dev(b) * 0.5).components(), atol=1e-15)


def test_model4_linearised_relaxation_rate():
    """Ḃ₂ ≈ −(2μ₂/η₁)β for B₂ = I + β, β small and trace-free."""
    params = Model4Params(mu2=1.5, mu4=1.0, eta1=2.0, eta3=1.0)
    beta = SymTensor3(5e-5, -3e-5, -2e-5, 4e-5, 0.0, 1e-5)
    state = ModelState(SymTensor3.identity() + beta, SymTensor3.identity())
    rate = state_rate(4, params, state, np.zeros((3, 3)))
    expected = beta * (-2.0 * params.mu2 / params.eta1)
    assert frobenius_norm(rate.a - expected) <= 1e-3 * frobenius_norm(expected)
    assert frobenius_norm(rate.b) == 0.0


def test_extra_stress_examples():
    rest = ModelState.virgin()
    m1 = Model1Params(mu3=1.5, mu_p=0.5, eta1=1.0, eta2=1.0)
    assert extra_stress(1, m1, rest) == SymTensor3.identity() * 2.0

    m4 = Model4Params(mu2=1.0, mu4=1.0, eta1=1.0, eta3=1.0)
    b = SymTensor3.diag(2.0, 1.0, 0.5)
    assert extra_stress(4, m4, ModelState(b, b)) == SymTensor3.diag(4.0, 2.0, 1.0)

    m2 = Model2Params(mu2=1.0, mu3=2.0, eta1=1.0, eta_g=1.0)
    b3 = SymTensor3(1.0, 1.0, 1.0, 0.1, 0.0, 0.0)
    assert extra_stress(2, m2, ModelState(SymTensor3.identity(), b3)).a12 == pytest.approx(0.2)


def test_stored_energy_and_dissipation_examples():
    params = Model4Params(mu2=1.0, mu4=2.0, eta1=2.0, eta3=1.0)
    state = ModelState(SymTensor3.diag(1.2, 1.0, 1.0), SymTensor3.diag(1.1, 1.0, 1.0))
    assert stored_energy(4, params, state) == pytest.approx(0.2)
    assert stored_energy(4, params, ModelState.virgin()) == 0.0

    a = math.sqrt(0.125)
    rates = InternalRates(SymTensor3.diag(a, -a, 0.0), SymTensor3.zero())
    assert dissipation_rate(4, params, rates) == pytest.approx(0.5)


def test_wrong_parameter_set_rejected():
    with pytest.raises(ConfigError):
        create_model(1, UNIT_PARAMS[2])
    with pytest.raises(ConfigError):
        create_model(5, UNIT_PARAMS[1])
    assert set(MODELS) == {1, 2, 3, 4}


@pytest.mark.parametrize("model", ALL_MODELS)
def test_rest_protocol_records_are_constant(model):
    records = simulate(model, UNIT_PARAMS[model], RestProtocol(), t_end=0.5, dt=0.01, record_every=10)
    assert len(records) == 6
    mu_total = sum(create_model(model, UNIT_PARAMS[model]).moduli()) if model in (1, 4) else 1.0
    for r in records:
        np.testing.assert_allclose(r.stress.components(), [mu_total] * 3 + [0.0] * 3, atol=1e-14)
        assert r.xi <= 1e-28
        assert abs(r.n1) <= 1e-14 and abs(r.n2) <= 1e-14


@pytest.mark.parametrize("model", ALL_MODELS)
def test_conservation_along_shear_start_up(model):
    """det B stays 1, ξ ≥ 0, and S·D − ψ̇ = ξ along the trajectory."""
    dt = 1e-3
    records = simulate(model, UNIT_PARAMS[model], SimpleShear(rate=1.0), t_end=10.0, dt=dt)
    assert max(max(abs(r.det_a - 1.0), abs(r.det_b - 1.0)) for r in records) <= 1e-6
    assert min(r.xi for r in records) >= 0.0

    psi = np.array([r.psi for r in records])
    power = np.array([r.stress_power for r in records])
    xi = np.array([r.xi for r in records])
    psi_rate = SignalProcessor.centered_difference(psi, dt)
    residual = power[1:-1] - psi_rate - xi[1:-1]
    assert np.max(np.abs(residual)) <= 1e-4 * np.max(np.abs(power))


@pytest.mark.parametrize("model", ALL_MODELS)
def test_rotational_equivariance(model):
    rng = np.random.default_rng(300 + model)
    q = random_rotation(rng)
    start = ModelState(unimodular_spd(rng, 0.1), unimodular_spd(rng, 0.1))
    base = SimpleShear(rate=0.7)
    plain = simulate(model, UNIT_PARAMS[model], base, t_end=1.0, dt=0.01, record_every=10,
                     initial_state=start)
    turned = simulate(model, UNIT_PARAMS[model], RotatedProtocol(base, q), t_end=1.0, dt=0.01,
                      record_every=10, initial_state=start.rotated(q))
    for r, r_rot in zip(plain, turned):
        np.testing.assert_allclose(r_rot.stress.matrix, rotate(r.stress, q).matrix, atol=1e-9)


def test_model1_without_mu3_matches_single_mode_model4():
    m1 = Model1Params(mu3=0.0, mu_p=1.3, eta1=0.8, eta2=1.0)
    m4 = Model4Params(mu2=1.3, mu4=0.0, eta1=0.8, eta3=1.0)
    protocol = SimpleShear(rate=1.0)
    s1 = stress_history(simulate(1, m1, protocol, t_end=2.0, dt=5e-3))
    s4 = stress_history(simulate(4, m4, protocol, t_end=2.0, dt=5e-3))
    assert np.max(np.abs(s1 - s4)) <= 1e-9


def test_model2_without_mu2_matches_single_mode_model4():
    m2 = Model2Params(mu2=0.0, mu3=0.9, eta1=1.0, eta_g=1.7)
    m4 = Model4Params(mu2=0.9, mu4=0.0, eta1=1.7, eta3=1.0)
    protocol = SimpleShear(rate=1.0)
    s2 = stress_history(simulate(2, m2, protocol, t_end=2.0, dt=5e-3))
    s4 = stress_history(simulate(4, m4, protocol, t_end=2.0, dt=5e-3))
    assert np.max(np.abs(s2 - s4)) <= 1e-9


def test_single_mode_relaxation_after_step():
    """S₁₂ decays as exp(−2μ₂t/η₁) once the ramp is over."""
    params = Model4Params(mu2=1.0, mu4=0.0, eta1=2.0, eta3=1.0)
    records = simulate(4, params, RampStepShear(gamma=1e-4, ramp=1e-2), t_end=2.0, dt=1e-3)
    t = np.array([r.t for r in records])
    s12 = np.array([r.stress.a12 for r in records])
    after = t >= 0.05
    t0 = t[after][0]
    expected = s12[after][0] * np.exp(-2.0 * params.mu2 * (t[after] - t0) / params.eta1)
    np.testing.assert_allclose(s12[after], expected, rtol=1e-3)


@pytest.mark.parametrize("model", ALL_MODELS)
def test_rk4_convergence_order(model):
    """Self-convergence on shear start-up: observed order ≥ 3.5."""
    def end_state(dt):
        r = simulate(model, UNIT_PARAMS[model], SimpleShear(rate=1.0), t_end=1.0, dt=dt)[-1]
        return np.append(r.stress.components(), r.psi)

    coarse, medium, fine = end_state(0.02), end_state(0.01), end_state(0.005)
    order = math.log2(np.linalg.norm(coarse - medium) / np.linalg.norm(medium - fine))
    assert order >= 3.5


def test_traceless_normalisation():
    records = simulate(1, UNIT_PARAMS[1], SimpleShear(rate=1.0), t_end=0.1, dt=0.01,
                       stress_normalization="traceless")
    extra = simulate(1, UNIT_PARAMS[1], SimpleShear(rate=1.0), t_end=0.1, dt=0.01)
    for r, e in zip(records, extra):
        assert abs(r.stress.trace()) <= 1e-12
        assert r.stress.a12 == e.stress.a12
        assert r.n1 == e.n1


def test_unstable_step_reports_failure():
    params = Model4Params(mu2=1.0, mu4=1.0, eta1=0.01, eta3=0.01)
    with pytest.raises(StepFailure) as excinfo:
        simulate(4, params, SimpleShear(rate=1.0), t_end=5.0, dt=0.1)
    assert "smaller dt" in str(excinfo.value)
    assert excinfo.value.exit_code == 3


def test_state_vector_packing():
    rng = np.random.default_rng(9)
    state = ModelState(unimodular_spd(rng), unimodular_spd(rng))
    again = ModelState.from_vector(state.to_vector())
    assert again == state
    assert determinant(again.a) == pytest.approx(1.0)
