"""
Error hierarchy for the rheology laboratory.

Every domain error carries the process exit code the command-line front
end reports for it: 1 usage/parse error, 2 domain rejection, 3 numerical
failure.
"""
from typing import Optional


class RheoLabError(Exception):
    """Base class for all rheolab errors."""

    exit_code: int = 1


class ConfigError(RheoLabError):
    """Invalid scenario, flag or configuration file."""

    exit_code = 1


class NetworkSyntaxError(RheoLabError):
    """
    Malformed spring-dashpot network text.

    Args:
        position: Zero-based character offset of the offending token
        expected: Description of what the parser expected there
        text: The full input text (used to render a caret line)
    """

    exit_code = 1

    def __init__(self, position: int, expected: str, text: str = ""):
        self.position = position
        self.expected = expected
        self.text = text
        super().__init__(f"syntax error at position {position}: expected {expected}")

    def caret_report(self) -> str:
        """Return the input text with a caret under the error position."""
        if not self.text:
            return str(self)
        return f"{self.text}\n{' ' * self.position}^\n{self}"


class NonPositiveParameterError(RheoLabError):
    """A spring modulus or dashpot viscosity is zero, negative or not finite."""

    exit_code = 1


class NotSPDError(RheoLabError):
    """A configuration tensor lost positive definiteness."""

    exit_code = 2

    def __init__(self, min_eigenvalue: float):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(f"tensor is not SPD (smallest eigenvalue {min_eigenvalue:.3e})")


class SingularTensorError(RheoLabError):
    """A tensor could not be inverted."""

    exit_code = 2

    def __init__(self, determinant: float):
        self.determinant = determinant
        super().__init__(f"tensor is singular (det = {determinant:.3e})")


class NonFiniteTensorError(RheoLabError):
    """A tensor component became NaN or infinite."""

    exit_code = 3


class NotBurgersFormError(RheoLabError):
    """
    A transfer function does not have the Burgers form.

    Args:
        reason: One of ``REASONS``
        detail: Optional human-readable detail
    """

    exit_code = 2
    SOLID_LIKE = "solid-like constant term"
    ORDER_TOO_HIGH = "order > 2"
    NEGATIVE_COEFFICIENT = "negative coefficient"
    REASONS = (SOLID_LIKE, ORDER_TOO_HIGH, NEGATIVE_COEFFICIENT)

    def __init__(self, reason: str, detail: Optional[str] = None):
        if reason not in self.REASONS:
            raise ValueError(f"unknown NotBurgersForm reason: {reason}")
        self.reason = reason
        message = f"not of Burgers form: {reason}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class StepFailure(RheoLabError):
    """
    Time integration left the admissible state space.

    Args:
        t: Time at which the failure was detected
        diagnostics: What was violated
    """

    exit_code = 3

    def __init__(self, t: float, diagnostics: str):
        self.t = t
        self.diagnostics = diagnostics
        super().__init__(f"integration failed at t = {t:.6g}: {diagnostics}; try a smaller dt")
