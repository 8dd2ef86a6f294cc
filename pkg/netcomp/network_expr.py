"""
Syntax tree of spring-dashpot networks and its printer.
"""
import math
from dataclasses import dataclass
from typing import Tuple, Union

from exceptions import NonPositiveParameterError


def _positive_float(name: str, value: float) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise NonPositiveParameterError(f"{name} must be positive and finite, got {value}")
    return value


@dataclass(frozen=True)
class Spring:
    """Linear spring, σ = 2με."""
    mu: float

    def __post_init__(self):
        # plain float, so printing gives parseable text
        object.__setattr__(self, "mu", _positive_float("mu", self.mu))


@dataclass(frozen=True)
class Dashpot:
    """Linear dashpot, σ = ηε̇."""
    eta: float

    def __post_init__(self):
        object.__setattr__(self, "eta", _positive_float("eta", self.eta))


@dataclass(frozen=True)
class Series:
    """Children share the stress; strains add."""
    children: Tuple["NetworkExpr", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("series needs at least two children")


@dataclass(frozen=True)
class Parallel:
    """Children share the strain; stresses add."""
    children: Tuple["NetworkExpr", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("parallel needs at least two children")


NetworkExpr = Union[Spring, Dashpot, Series, Parallel]


def series(*children: NetworkExpr) -> Series:
    return Series(tuple(children))


def parallel(*children: NetworkExpr) -> Parallel:
    return Parallel(tuple(children))


def format_network(expr: NetworkExpr) -> str:
    """
    Print a network in the concrete syntax accepted by ``parse``.

    Numbers use ``repr`` so parsing the output gives back an equal tree.
    """
    if isinstance(expr, Spring):
        return f"spring(mu={float(expr.mu)!r})"
    if isinstance(expr, Dashpot):
        return f"dashpot(eta={float(expr.eta)!r})"
    if isinstance(expr, Series):
        return "series(" + ", ".join(format_network(c) for c in expr.children) + ")"
    if isinstance(expr, Parallel):
        return "parallel(" + ", ".join(format_network(c) for c in expr.children) + ")"
    raise TypeError(f"not a network expression: {expr!r}")


def element_count(expr: NetworkExpr) -> int:
    """Number of springs and dashpots in the tree."""
    if isinstance(expr, (Spring, Dashpot)):
        return 1
    return sum(element_count(c) for c in expr.children)
