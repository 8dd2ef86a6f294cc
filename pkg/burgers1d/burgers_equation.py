"""
The one-dimensional Burgers law σ + p₁σ̇ + p₂σ̈ = q₁ε̇ + q₂ε̈.

Strain-driven integration, stress-driven creep, and the analytic
frequency- and time-domain responses.
"""
import logging
import math
from typing import Callable, Optional, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P

from kinematics import FlowProtocol, Drive1D
from models import BurgersCoeffs, BurgersSeries, CreepSeries
from processing import RK4Integrator

logger = logging.getLogger(__name__)

StrainDrive = Callable[[float], Drive1D]
DriveLike = Union[FlowProtocol, StrainDrive]


def as_drive(drive: DriveLike) -> StrainDrive:
    """Accept a protocol or a plain t ↦ (ε, ε̇, ε̈) callable."""
    if isinstance(drive, FlowProtocol):
        return drive.drive_1d
    return drive


def equation_order(coeffs: BurgersCoeffs) -> int:
    """Differential order in σ: 2, 1 (Maxwell-like) or 0 (pure dashpot)."""
    if coeffs.p2 > 0.0:
        return 2
    if coeffs.p1 > 0.0:
        return 1
    return 0


def virgin_initial_conditions(coeffs: BurgersCoeffs, drive0: Drive1D) -> Tuple[float, float]:
    """
    (σ, σ̇) just after t = 0 for a body at rest before t = 0.

    A drive whose ε or ε̇ is nonzero at 0⁺ jumps there; matching the
    impulsive terms of the law gives p₂[σ] = q₂[ε] and
    p₂[σ̇] + p₁[σ] = q₂[ε̇] + q₁[ε].

    Args:
        coeffs: Burgers coefficients with p₂ > 0 (first-order laws use
            p₁[σ] = q₂[ε̇] + q₁[ε] and return σ̇ = 0)
        drive0: (ε, ε̇, ε̈) at 0⁺

    Returns:
        Tuple[float, float]: σ(0⁺), σ̇(0⁺)
    """
    eps0, eps_rate0, _ = drive0
    order = equation_order(coeffs)
    if order == 2:
        sigma0 = coeffs.q2 * eps0 / coeffs.p2
        sigma_rate0 = (coeffs.q2 * eps_rate0 + coeffs.q1 * eps0 - coeffs.p1 * sigma0) / coeffs.p2
        return sigma0, sigma_rate0
    if order == 1:
        return (coeffs.q2 * eps_rate0 + coeffs.q1 * eps0) / coeffs.p1, 0.0
    return coeffs.q1 * eps_rate0, 0.0


def integrate_burgers(coeffs: BurgersCoeffs, drive: DriveLike, t_end: float, dt: float,
                      init: Optional[Tuple[float, float]] = None,
                      record_every: int = 1) -> BurgersSeries:
    """
    Integrate the Burgers law under a prescribed strain history.

    The second-order law runs as a first-order system in (σ, σ̇) with RK4.
    Maxwell-like coefficients (p₂ = 0) integrate σ alone, and a pure
    dashpot (p₁ = p₂ = 0) is evaluated algebraically.

    Virgin-start convention: the body is at rest before t = 0, so without
    ``init`` the run starts from the jump conditions of
    ``virgin_initial_conditions`` rather than from (0, 0). A drive with
    ε(0⁺) = ε̇(0⁺) = 0 starts from (0, 0) either way.

    Args:
        coeffs: Burgers coefficients
        drive: Protocol or callable t ↦ (ε, ε̇, ε̈)
        t_end: Final time
        dt: Step size
        init: (σ₀, σ̇₀); virgin jump conditions when None
        record_every: Record stride in steps

    Returns:
        BurgersSeries: Recorded t, ε, σ
    """
    if record_every < 1:
        raise ValueError(f"record_every must be at least 1, got {record_every}")
    strain = as_drive(drive)
    p1, p2, q1, q2 = coeffs.as_tuple()
    order = equation_order(coeffs)
    if init is None:
        init = virgin_initial_conditions(coeffs, strain(0.0))

    def forcing(t: float) -> float:
        _, eps_rate, eps_acc = strain(t)
        return q1 * eps_rate + q2 * eps_acc

    if order == 2:
        def rhs(t: float, y: np.ndarray) -> np.ndarray:
            return np.array([y[1], (forcing(t) - y[0] - p1 * y[1]) / p2])
        y0 = np.array(init, dtype=float)
    elif order == 1:
        def rhs(t: float, y: np.ndarray) -> np.ndarray:
            return np.array([(forcing(t) - y[0]) / p1])
        y0 = np.array([init[0]], dtype=float)
    else:
        def rhs(t: float, y: np.ndarray) -> np.ndarray:
            return np.zeros(1)
        y0 = np.zeros(1)

    t_rec, eps_rec, sigma_rec = [], [], []

    def on_step(k: int, t: float, y: np.ndarray) -> None:
        if k % record_every:
            return
        eps, eps_rate, _ = strain(t)
        t_rec.append(t)
        eps_rec.append(eps)
        sigma_rec.append(y[0] if order else q1 * eps_rate)

    logger.debug("Burgers law %s of order %d: t_end=%g dt=%g", coeffs, order, t_end, dt)
    RK4Integrator.integrate(rhs, y0, t_end, dt, callback=on_step)
    return BurgersSeries(np.array(t_rec), np.array(eps_rec), np.array(sigma_rec))


def creep_response(coeffs: BurgersCoeffs, sigma0: float, t_end: float, dt: float,
                   record_every: int = 1) -> CreepSeries:
    """
    Strain under a constant stress σ₀ applied at t = 0.

    For t > 0 the law reduces to q₁ε̇ + q₂ε̈ = σ₀. The start values are the
    high-s limit of σ₀/s·(1 + p₁s + p₂s²)/(q₁s + q₂s²):
    ε(0⁺) = σ₀p₂/q₂ and ε̇(0⁺) = σ₀(p₁q₂ − q₁p₂)/q₂².

    Args:
        coeffs: Burgers coefficients with q₁ > 0
        sigma0: Applied stress
        t_end: Final time
        dt: Step size
        record_every: Record stride in steps

    Returns:
        CreepSeries: Recorded t, ε, ε̇
    """
    p1, p2, q1, q2 = coeffs.as_tuple()
    if not q1 > 0.0:
        raise ValueError("creep needs a positive long-time viscosity q1")
    if q2 > 0.0:
        y0 = np.array([sigma0 * p2 / q2, sigma0 * (p1 * q2 - q1 * p2) / (q2 * q2)])

        def rhs(t: float, y: np.ndarray) -> np.ndarray:
            return np.array([y[1], (sigma0 - q1 * y[1]) / q2])
    else:
        # Maxwell-like: elastic jump p₁σ₀/q₁, then steady flow.
        y0 = np.array([sigma0 * p1 / q1, sigma0 / q1])

        def rhs(t: float, y: np.ndarray) -> np.ndarray:
            return np.array([y[1], 0.0])

    t_rec, eps_rec, rate_rec = [], [], []

    def on_step(k: int, t: float, y: np.ndarray) -> None:
        if k % record_every == 0:
            t_rec.append(t)
            eps_rec.append(y[0])
            rate_rec.append(y[1])

    RK4Integrator.integrate(rhs, y0, t_end, dt, callback=on_step)
    return CreepSeries(np.array(t_rec), np.array(eps_rec), np.array(rate_rec), sigma0)


def complex_modulus(coeffs: BurgersCoeffs, omega):
    """
    Storage and loss moduli G′(ω), G″(ω).

    G*(iω) = (q₁iω + q₂(iω)²) / (1 + p₁iω + p₂(iω)²).

    Args:
        coeffs: Burgers coefficients
        omega: Angular frequency (> 0), scalar or array

    Returns:
        (G′, G″) as floats for scalar input, arrays otherwise
    """
    omega_arr = np.asarray(omega, dtype=float)
    if np.any(omega_arr <= 0.0):
        raise ValueError("omega must be positive")
    s = 1j * omega_arr
    g = P.polyval(s, [0.0, coeffs.q1, coeffs.q2]) / P.polyval(s, [1.0, coeffs.p1, coeffs.p2])
    if g.ndim == 0:
        return float(g.real), float(g.imag)
    return g.real, g.imag


def relaxation_times(coeffs: BurgersCoeffs) -> Tuple[float, float]:
    """
    Relaxation times (τ_fast, τ_slow) = −1/roots of 1 + p₁s + p₂s².

    Maxwell-like laws have the single time p₁, returned twice; a pure
    dashpot returns (0, 0).
    """
    order = equation_order(coeffs)
    if order == 0:
        return 0.0, 0.0
    if order == 1:
        return coeffs.p1, coeffs.p1
    # Vieta form; a double root stays exactly double
    root = math.sqrt(max(coeffs.discriminant, 0.0))
    return 2.0 * coeffs.p2 / (coeffs.p1 + root), 0.5 * (coeffs.p1 + root)


def relaxation_modulus(coeffs: BurgersCoeffs, t):
    """
    Stress response G(t) to a unit strain step at t = 0.

    Partial fractions of (q₁ + q₂s)/(1 + p₁s + p₂s²); G(0⁺) = q₂/p₂.

    Args:
        coeffs: Burgers coefficients of a real relaxation spectrum
        t: Time (≥ 0), scalar or array

    Returns:
        G(t), same shape as ``t``
    """
    t_arr = np.asarray(t, dtype=float)
    p1, p2, q1, q2 = coeffs.as_tuple()
    order = equation_order(coeffs)
    if order == 0:
        raise ValueError("a pure dashpot has no finite relaxation modulus")
    if order == 1:
        g = (q1 / p1) * np.exp(-t_arr / p1)
    else:
        tau_fast, tau_slow = relaxation_times(coeffs)
        r1, r2 = -1.0 / tau_fast, -1.0 / tau_slow
        if math.isclose(r1, r2, rel_tol=1e-9):
            r = 0.5 * (r1 + r2)
            g = np.exp(r * t_arr) * (q2 + (q1 + q2 * r) * t_arr) / p2
        else:
            g = ((q1 + q2 * r1) * np.exp(r1 * t_arr) - (q1 + q2 * r2) * np.exp(r2 * t_arr)) / (p2 * (r1 - r2))
    return float(g) if g.ndim == 0 else g
