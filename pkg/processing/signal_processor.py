"""
Signal utilities for recorded time series.
This module follows the Single Responsibility Principle by focusing
on post-processing of sampled responses.
"""
from typing import NamedTuple

import numpy as np


class SinusoidFit(NamedTuple):
    """y ≈ in_phase·sin(ωt) + quadrature·cos(ωt) + offset."""
    in_phase: float
    quadrature: float
    offset: float

    @property
    def amplitude(self) -> float:
        return float(np.hypot(self.in_phase, self.quadrature))


class SignalProcessor:
    """Post-processing of sampled time series."""

    @staticmethod
    def fit_sinusoid(t: np.ndarray, y: np.ndarray, omega: float) -> SinusoidFit:
        """
        Linear least-squares fit of a sinusoid at a known frequency.

        Args:
            t: Sample times
            y: Samples
            omega: Angular frequency

        Returns:
            SinusoidFit: In-phase, quadrature and constant coefficients
        """
        t = np.asarray(t, dtype=float)
        basis = np.column_stack([np.sin(omega * t), np.cos(omega * t), np.ones_like(t)])
        coeffs, *_ = np.linalg.lstsq(basis, np.asarray(y, dtype=float), rcond=None)
        return SinusoidFit(float(coeffs[0]), float(coeffs[1]), float(coeffs[2]))

    @staticmethod
    def centered_difference(y: np.ndarray, h: float) -> np.ndarray:
        """
        Second-order centered derivative on interior samples.

        Returns:
            np.ndarray: (y[k+1] − y[k−1]) / 2h for k = 1..n−2
        """
        y = np.asarray(y, dtype=float)
        return (y[2:] - y[:-2]) / (2.0 * h)

    @staticmethod
    def max_relative_deviation(reference: np.ndarray, candidate: np.ndarray) -> float:
        """
        max|candidate − reference| / max|reference|.

        Both all-zero gives 0.
        """
        reference = np.asarray(reference, dtype=float)
        candidate = np.asarray(candidate, dtype=float)
        scale = float(np.max(np.abs(reference))) if reference.size else 0.0
        diff = float(np.max(np.abs(candidate - reference))) if reference.size else 0.0
        if scale == 0.0:
            return 0.0 if diff == 0.0 else float('inf')
        return diff / scale

    @staticmethod
    def settled_start(t: np.ndarray, y: np.ndarray, omega: float,
                      discard_fraction: float = 0.8, tolerance: float = 1e-4) -> int:
        """
        Index from which an oscillatory response is treated as steady.

        Scans whole forcing periods and returns the start of the first pair of
        consecutive periods whose fitted amplitudes differ by less than
        ``tolerance`` (relative), or the index after ``discard_fraction`` of the
        run, whichever comes first.

        Args:
            t: Uniform sample times
            y: Samples
            omega: Forcing angular frequency
            discard_fraction: Fallback fraction of the run to drop
            tolerance: Relative cycle-to-cycle amplitude change counted as settled

        Returns:
            int: First index of the steady window
        """
        t = np.asarray(t, dtype=float)
        fallback = int(discard_fraction * len(t))
        if len(t) < 3:
            return 0
        dt = t[1] - t[0]
        per_cycle = int(round(2.0 * np.pi / omega / dt))
        if per_cycle < 4:
            return fallback
        previous = None
        for start in range(0, fallback, per_cycle):
            stop = start + per_cycle
            if stop > len(t):
                break
            amplitude = SignalProcessor.fit_sinusoid(t[start:stop], y[start:stop], omega).amplitude
            if previous is not None and previous > 0.0:
                if abs(amplitude - previous) / previous < tolerance:
                    return start - per_cycle
            previous = amplitude
        return fallback
