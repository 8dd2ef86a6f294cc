"""
Command implementations.

Each command takes a validated ``Scenario`` and returns its rows or report;
writing and exit codes are left to the application layer.
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from burgers1d import (
    coeffs_from_model,
    complex_modulus,
    integrate_burgers,
    relaxation_times,
)
from config import ConfigManager
from exceptions import ConfigError, NotBurgersFormError
from kinematics import OscillatoryShear, UNIAXIAL
from models import BurgersCoeffs, SimRecord
from models3d import simulate
from netcomp import RationalTF, canonical_network, compile_network, format_network, to_burgers
from processing import SignalProcessor
from .scenario import Scenario

logger = logging.getLogger(__name__)

UNIAXIAL_FACTOR = 1.5


@dataclass
class CompileReport:
    """Outcome of compiling one network."""
    text: str
    canonical_text: str
    transfer: RationalTF
    coeffs: Optional[BurgersCoeffs]
    relaxation_times: Optional[Tuple[float, float]] = None
    rejection: Optional[NotBurgersFormError] = None

    def lines(self) -> List[str]:
        out = [f"network: {self.canonical_text}",
               f"numerator: {' '.join(repr(float(c)) for c in self.transfer.numerator)}",
               f"denominator: {' '.join(repr(float(c)) for c in self.transfer.denominator)}"]
        if self.coeffs is not None:
            c = self.coeffs
            out.append(f"burgers: p1={c.p1!r} p2={c.p2!r} q1={c.q1!r} q2={c.q2!r}")
        if self.relaxation_times is not None:
            out.append(f"relaxation_times: {self.relaxation_times[0]!r} {self.relaxation_times[1]!r}")
        return out


@dataclass
class CompareReport:
    """3D-versus-1D deviation over one run."""
    mode: str
    max_relative_deviation: float
    samples: int

    def lines(self) -> List[str]:
        return [f"mode: {self.mode}",
                f"samples: {self.samples}",
                f"max_relative_deviation: {self.max_relative_deviation!r}"]


def scenario_coeffs(scenario: Scenario) -> BurgersCoeffs:
    """
    Burgers coefficients from a network text when given, else from the model map.

    Raises:
        NotBurgersFormError: If the network does not reduce to the Burgers law
    """
    if scenario.network:
        _, tf = compile_network(scenario.network)
        return to_burgers(tf)
    return coeffs_from_model(scenario.model or 0, scenario.material_params())


def cmd_simulate3d(scenario: Scenario, config_manager: Optional[ConfigManager] = None) -> List[SimRecord]:
    """3D simulation records of the scenario's model and protocol."""
    if scenario.model is None:
        raise ConfigError("simulate3d needs --model")
    tolerances = (config_manager or ConfigManager()).get_tolerances()
    return simulate(scenario.model, scenario.material_params(), scenario.flow_protocol(),
                    scenario.t_end, scenario.dt, record_every=scenario.record_every,
                    stress_normalization=scenario.stress_normalization,
                    det_tolerance=tolerances.get("det_drift", 1e-3),
                    det_warning=tolerances.get("det_warning", 1e-6))


def simulate3d_rows(records: List[SimRecord]) -> List[Tuple[float, ...]]:
    return [r.csv_values() for r in records]


def cmd_simulate1d(scenario: Scenario) -> List[Tuple[float, float, float]]:
    """Rows (t, ε, σ) of the Burgers law under the scenario's drive."""
    coeffs = scenario_coeffs(scenario)
    series = integrate_burgers(coeffs, scenario.flow_protocol(), scenario.t_end, scenario.dt,
                               record_every=scenario.record_every)
    return list(zip(series.t.tolist(), series.eps.tolist(), series.sigma.tolist()))


def cmd_compile(text: str) -> CompileReport:
    """
    Parse a network and reduce it.

    A network that is not of Burgers form is reported through
    ``rejection`` so the transfer function can still be shown.

    Raises:
        NetworkSyntaxError: On malformed text
    """
    expr, tf = compile_network(text)
    report = CompileReport(text, format_network(expr), tf, None)
    try:
        report.coeffs = to_burgers(tf)
    except NotBurgersFormError as e:
        report.rejection = e
        return report
    report.relaxation_times = relaxation_times(report.coeffs)
    return report


def cmd_compare(scenario: Scenario) -> CompareReport:
    """
    Run the 3D model and its mapped Burgers law on the same drive.

    Shear compares S₁₂ with σ (ε = γ/2); uniaxial compares N₁ with 3σ/2
    (ε = axial strain). ``amplitude`` scales the protocol's strain.
    """
    if scenario.model is None:
        raise ConfigError("compare needs --model")
    params = scenario.material_params()
    protocol = scenario.flow_protocol().scaled(scenario.amplitude)
    records = simulate(scenario.model, params, protocol, scenario.t_end, scenario.dt,
                       record_every=scenario.record_every)
    series = integrate_burgers(coeffs_from_model(scenario.model, params), protocol,
                               scenario.t_end, scenario.dt, record_every=scenario.record_every)
    if protocol.compare_mode == UNIAXIAL:
        observed = np.array([r.n1 for r in records])
        predicted = UNIAXIAL_FACTOR * series.sigma
    else:
        observed = np.array([r.stress.a12 for r in records])
        predicted = series.sigma
    deviation = SignalProcessor.max_relative_deviation(predicted, observed)
    logger.info("compare model %d under %s: deviation %.3e", scenario.model, protocol, deviation)
    return CompareReport(protocol.compare_mode, deviation, len(records))


def verify_modulus(model: int, scenario: Scenario, omega: float, coeffs: BurgersCoeffs,
                   settings: Dict[str, float]) -> Tuple[float, float]:
    """
    G′, G″ at ``omega`` extracted from a 3D oscillatory-shear simulation.

    The run covers at least ``cycles`` forcing periods and is long enough
    that the discarded lead-in spans ``transient_times`` slow relaxation
    times. The transient is dropped with ``SignalProcessor.settled_start``
    and S₁₂ is fitted against ε = γ/2.
    """
    gamma0 = float(settings["amplitude"])
    discard = float(settings["discard_fraction"])
    period = 2.0 * math.pi / omega
    tau_fast, tau_slow = relaxation_times(coeffs)
    dt = period / int(settings["steps_per_cycle"])
    if tau_fast > 0.0:
        dt = min(dt, tau_fast / float(settings["steps_per_tau"]))
    span = max(int(settings["cycles"]) * period, float(settings["transient_times"]) * tau_slow / discard)
    n_steps = int(math.ceil(math.ceil(span / period) * period / dt))
    protocol = OscillatoryShear(gamma0=gamma0, omega=omega)
    logger.info("verifying omega=%g with %d steps of %g", omega, n_steps, dt)
    records = simulate(model, scenario.material_params(), protocol, n_steps * dt, dt)
    t = np.array([r.t for r in records])
    s12 = np.array([r.stress.a12 for r in records])
    start = SignalProcessor.settled_start(t, s12, omega, discard_fraction=discard,
                                          tolerance=float(settings["settle_tolerance"]))
    fit = SignalProcessor.fit_sinusoid(t[start:], s12[start:], omega)
    eps0 = 0.5 * gamma0
    return fit.in_phase / eps0, fit.quadrature / eps0


def cmd_moduli(scenario: Scenario, config_manager: Optional[ConfigManager] = None) -> Tuple[List[str], List[tuple]]:
    """
    Analytic storage and loss moduli on the scenario's ω grid.

    With ``verify`` each row also carries the moduli extracted from a 3D
    simulation and their relative deviations.

    Returns:
        Tuple[List[str], List[tuple]]: CSV header and rows; the ω column
        repeats the input text
    """
    coeffs = scenario_coeffs(scenario)
    omegas = scenario.omegas()
    header = ["omega", "Gp", "Gpp"]
    if scenario.verify:
        if scenario.model is None or scenario.network:
            raise ConfigError("--verify needs --model (a network has no 3D counterpart)")
        header += ["Gp_sim", "Gpp_sim", "dev_Gp", "dev_Gpp"]
        settings = (config_manager or ConfigManager()).get_verification_config()

    rows = []
    for text, omega in zip(scenario.omega, omegas):
        gp, gpp = complex_modulus(coeffs, omega)
        row: tuple = (text, gp, gpp)
        if scenario.verify:
            gp_sim, gpp_sim = verify_modulus(scenario.model, scenario, omega, coeffs, settings)
            row += (gp_sim, gpp_sim, _relative(gp_sim, gp), _relative(gpp_sim, gpp))
        rows.append(row)
    return header, rows


def _relative(value: float, reference: float) -> float:
    if reference == 0.0:
        return abs(value)
    return abs(value - reference) / abs(reference)


def canonical_text(model: int, scenario: Scenario) -> str:
    """Concrete syntax of the model's canonical network."""
    return format_network(canonical_network(model, scenario.material_params()))
