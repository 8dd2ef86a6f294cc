"""One-dimensional Burgers law, its coefficient maps and element-network oracles."""
from models import BurgersCoeffs, BurgersSeries, CreepSeries, ElementState, NetworkSeries
from processing import SignalProcessor, SinusoidFit
from .coefficient_maps import coeffs_from_model
from .burgers_equation import (
    StrainDrive,
    as_drive,
    equation_order,
    virgin_initial_conditions,
    integrate_burgers,
    creep_response,
    complex_modulus,
    relaxation_times,
    relaxation_modulus,
)
from .network_interface import ElementNetworkInterface
from .element_networks import (
    ArrangementA,
    ArrangementB,
    ArrangementC,
    ArrangementD,
    ARRANGEMENTS,
    ARRANGEMENT_FOR_MODEL,
    create_network,
)
from .network_simulator import element_network_sim, element_network_creep

fit_sinusoid = SignalProcessor.fit_sinusoid

__all__ = [
    'BurgersCoeffs', 'BurgersSeries', 'CreepSeries', 'ElementState', 'NetworkSeries', 'SinusoidFit',
    'coeffs_from_model', 'StrainDrive', 'as_drive', 'equation_order', 'virgin_initial_conditions',
    'integrate_burgers', 'creep_response', 'complex_modulus', 'relaxation_times', 'relaxation_modulus',
    'ElementNetworkInterface', 'ArrangementA', 'ArrangementB', 'ArrangementC', 'ArrangementD',
    'ARRANGEMENTS', 'ARRANGEMENT_FOR_MODEL', 'create_network',
    'element_network_sim', 'element_network_creep', 'fit_sinusoid',
]
