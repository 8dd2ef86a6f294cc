"""
Rational transfer functions σ/ε of element networks in the transform
variable s, and their reduction to Burgers coefficients.
"""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from exceptions import NotBurgersFormError
from models import BurgersCoeffs
from .network_expr import NetworkExpr, Spring, Dashpot, Series, Parallel

logger = logging.getLogger(__name__)


def _trim(coeffs: np.ndarray) -> np.ndarray:
    """Drop exactly-zero high-order coefficients, keeping at least one."""
    return P.polytrim(np.asarray(coeffs, dtype=float), tol=0)


def _low_order_zeros(coeffs: np.ndarray) -> int:
    nonzero = np.flatnonzero(coeffs)
    return int(nonzero[0]) if nonzero.size else len(coeffs)


@dataclass(frozen=True, eq=False)
class RationalTF:
    """
    numerator(s) / denominator(s), coefficients in ascending powers of s.

    Instances are always reduced: trailing zeros trimmed, common factors
    of s cancelled, and the denominator scaled to a unit constant term
    when that term is nonzero.
    """
    numerator: np.ndarray
    denominator: np.ndarray

    @classmethod
    def reduced(cls, numerator, denominator) -> "RationalTF":
        num = _trim(numerator)
        den = _trim(denominator)
        if not np.any(den):
            raise ZeroDivisionError("transfer function with zero denominator")
        shift = min(_low_order_zeros(num), _low_order_zeros(den))
        if shift and np.any(num):
            num, den = num[shift:], den[shift:]
        if den[0] != 0.0:
            num, den = num / den[0], den / den[0]
        return cls(num, den)

    @classmethod
    def constant(cls, value: float) -> "RationalTF":
        return cls.reduced([value], [1.0])

    def __add__(self, other: "RationalTF") -> "RationalTF":
        return RationalTF.reduced(
            P.polyadd(P.polymul(self.numerator, other.denominator),
                      P.polymul(other.numerator, self.denominator)),
            P.polymul(self.denominator, other.denominator))

    def harmonic(self, other: "RationalTF") -> "RationalTF":
        """G with 1/G = 1/self + 1/other."""
        return RationalTF.reduced(
            P.polymul(self.numerator, other.numerator),
            P.polyadd(P.polymul(self.numerator, other.denominator),
                      P.polymul(other.numerator, self.denominator)))

    def evaluate(self, s):
        """Value at (complex) s."""
        return P.polyval(s, self.numerator) / P.polyval(s, self.denominator)

    @property
    def order(self) -> Tuple[int, int]:
        """(numerator degree, denominator degree)."""
        return len(self.numerator) - 1, len(self.denominator) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalTF):
            return NotImplemented
        return (np.array_equal(self.numerator, other.numerator)
                and np.array_equal(self.denominator, other.denominator))

    def __str__(self) -> str:
        return f"({_poly_text(self.numerator)}) / ({_poly_text(self.denominator)})"


def _poly_text(coeffs: np.ndarray) -> str:
    terms = []
    for power, c in enumerate(coeffs):
        if c == 0.0 and len(coeffs) > 1:
            continue
        terms.append(repr(float(c)) + ("" if power == 0 else "*s" if power == 1 else f"*s^{power}"))
    return " + ".join(terms)


def transfer_function(expr: NetworkExpr) -> RationalTF:
    """
    Transfer function of a network.

    Spring(μ) gives 2μ and Dashpot(η) gives ηs; parallel children add,
    series children combine harmonically.
    """
    if isinstance(expr, Spring):
        return RationalTF.constant(2.0 * expr.mu)
    if isinstance(expr, Dashpot):
        return RationalTF.reduced([0.0, expr.eta], [1.0])
    if isinstance(expr, (Series, Parallel)):
        tfs = [transfer_function(c) for c in expr.children]
        result = tfs[0]
        for tf in tfs[1:]:
            result = result.harmonic(tf) if isinstance(expr, Series) else result + tf
        return result
    raise TypeError(f"not a network expression: {expr!r}")


def to_burgers(tf: RationalTF) -> BurgersCoeffs:
    """
    Read Burgers coefficients off (q₁s + q₂s²) / (1 + p₁s + p₂s²).

    Maxwell-like networks come back with p₂ = q₂ = 0.

    Raises:
        NotBurgersFormError: If the numerator has a constant term, either
            polynomial exceeds second order, or a coefficient is negative
    """
    num, den = tf.numerator, tf.denominator
    if num[0] != 0.0:
        logger.info("rejected %s: %s", tf, NotBurgersFormError.SOLID_LIKE)
        raise NotBurgersFormError(NotBurgersFormError.SOLID_LIKE, f"numerator constant {num[0]!r}")
    if len(num) > 3 or len(den) > 3:
        logger.info("rejected %s: %s", tf, NotBurgersFormError.ORDER_TOO_HIGH)
        raise NotBurgersFormError(NotBurgersFormError.ORDER_TOO_HIGH,
                                  f"degrees {tf.order[0]}/{tf.order[1]}")
    q = np.zeros(3)
    p = np.zeros(3)
    q[:len(num)] = num
    p[:len(den)] = den
    if np.any(q < 0.0) or np.any(p < 0.0):
        logger.info("rejected %s: %s", tf, NotBurgersFormError.NEGATIVE_COEFFICIENT)
        raise NotBurgersFormError(NotBurgersFormError.NEGATIVE_COEFFICIENT, str(tf))
    return BurgersCoeffs(p1=float(p[1]), p2=float(p[2]), q1=float(q[1]), q2=float(q[2]))
