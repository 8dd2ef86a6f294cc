"""
Fixed-step explicit time integration.

This module follows the Single Responsibility Principle by focusing
solely on advancing first-order systems y' = f(t, y) in time.
"""
from typing import Callable, Optional

import numpy as np

RightHandSide = Callable[[float, np.ndarray], np.ndarray]
StepCallback = Callable[[int, float, np.ndarray], None]


class RK4Integrator:
    """
    Classical fourth-order Runge-Kutta with a fixed step.

    The state is a flat ``numpy`` vector; callers pack and unpack their own
    structured states.
    """

    @staticmethod
    def step(rhs: RightHandSide, t: float, y: np.ndarray, dt: float) -> np.ndarray:
        """
        Advance one step.

        Args:
            rhs: Right-hand side f(t, y)
            t: Current time
            y: Current state vector
            dt: Step size

        Returns:
            np.ndarray: State at t + dt
        """
        k1 = rhs(t, y)
        k2 = rhs(t + 0.5 * dt, y + 0.5 * dt * k1)
        k3 = rhs(t + 0.5 * dt, y + 0.5 * dt * k2)
        k4 = rhs(t + dt, y + dt * k3)
        return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    @staticmethod
    def step_count(t_end: float, dt: float) -> int:
        """
        Number of steps covering [0, t_end].

        Raises:
            ValueError: If dt is not positive or t_end is negative
        """
        if not dt > 0.0:
            raise ValueError(f"dt must be positive, got {dt}")
        if t_end < 0.0:
            raise ValueError(f"t_end must be non-negative, got {t_end}")
        return int(round(t_end / dt))

    @classmethod
    def integrate(cls, rhs: RightHandSide, y0: np.ndarray, t_end: float, dt: float,
                  callback: Optional[StepCallback] = None) -> np.ndarray:
        """
        Integrate from t = 0 to t_end.

        Args:
            rhs: Right-hand side f(t, y)
            y0: Initial state
            t_end: Final time (rounded to a whole number of steps)
            dt: Step size
            callback: Called as callback(k, t_k, y_k) for k = 0..n_steps

        Returns:
            np.ndarray: Final state
        """
        n_steps = cls.step_count(t_end, dt)
        y = np.array(y0, dtype=float)
        if callback is not None:
            callback(0, 0.0, y)
        for k in range(n_steps):
            # t from the step index, so long runs do not accumulate rounding in t.
            y = cls.step(rhs, k * dt, y, dt)
            if callback is not None:
                callback(k + 1, (k + 1) * dt, y)
        return y
