"""
Direct integration of element networks.

The dashpot strains are integrated; the stress is never differentiated,
so these runs are independent of the Burgers-law integration.
"""
import logging
from typing import List

import numpy as np

from models import CreepSeries, ElementState, NetworkSeries
from models3d.params import MaterialParams
from processing import RK4Integrator
from .burgers_equation import DriveLike, as_drive
from .element_networks import create_network

logger = logging.getLogger(__name__)


def element_network_sim(arrangement: str, params: MaterialParams, drive: DriveLike,
                        t_end: float, dt: float, record_every: int = 1) -> NetworkSeries:
    """
    Strain-driven response of a network from a virgin state.

    Args:
        arrangement: "a", "b", "c" or "d"
        params: Parameters of the matching 3D model
        drive: Protocol or callable t ↦ (ε, ε̇, ε̈); only ε is used
        t_end: Final time
        dt: Step size
        record_every: Record stride in steps

    Returns:
        NetworkSeries: σ(t) and every element strain at each record
    """
    network = create_network(arrangement, params)
    strain = as_drive(drive)

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return network.state_rate(strain(t)[0], y)

    t_rec: List[float] = []
    eps_rec: List[float] = []
    sigma_rec: List[float] = []
    states: List[ElementState] = []

    def on_step(k: int, t: float, y: np.ndarray) -> None:
        if k % record_every:
            return
        eps = strain(t)[0]
        sigma = network.stress(eps, y)
        t_rec.append(t)
        eps_rec.append(eps)
        sigma_rec.append(sigma)
        states.append(ElementState(network.element_strains(eps, y), sigma))

    logger.debug("network (%s): t_end=%g dt=%g", network.arrangement, t_end, dt)
    RK4Integrator.integrate(rhs, network.initial_state(), t_end, dt, callback=on_step)
    return NetworkSeries(network.arrangement, np.array(t_rec), np.array(eps_rec), np.array(sigma_rec), states)


def element_network_creep(arrangement: str, params: MaterialParams, sigma0: float,
                          t_end: float, dt: float, record_every: int = 1) -> CreepSeries:
    """
    Stress-driven response of a network under constant σ₀ applied at t = 0.

    The springs respond instantly; the total strain is recovered from σ₀
    and the dashpot strains at every instant.

    Returns:
        CreepSeries: ε(t) and ε̇(t)
    """
    network = create_network(arrangement, params)

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return network.state_rate(network.strain_under_stress(sigma0, y), y)

    t_rec: List[float] = []
    eps_rec: List[float] = []
    rate_rec: List[float] = []

    def on_step(k: int, t: float, y: np.ndarray) -> None:
        if k % record_every:
            return
        # ε̇ by the chain rule: σ fixed, so only the dashpot strains move.
        rates = rhs(t, y)
        rate = network.strain_under_stress(sigma0, y + rates) - network.strain_under_stress(sigma0, y)
        t_rec.append(t)
        eps_rec.append(network.strain_under_stress(sigma0, y))
        rate_rec.append(rate)

    RK4Integrator.integrate(rhs, network.initial_state(), t_end, dt, callback=on_step)
    return CreepSeries(np.array(t_rec), np.array(eps_rec), np.array(rate_rec), sigma0)
