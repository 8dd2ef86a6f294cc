"""
Three-dimensional natural-configuration models.

The module-level functions take ``(model, params, ...)`` so callers can work
with plain model ids; the classes underneath hold the parameters.
"""
from typing import List, Optional

import numpy as np

from kinematics import FlowProtocol
from models import SimRecord
from tensor_core import SymTensor3
from .params import (
    MaterialParams,
    Model1Params,
    Model2Params,
    Model3Params,
    Model4Params,
    PARAMS_BY_MODEL,
    params_for,
    parse_inline_params,
)
from .state import ModelState, InternalRates
from .model_interface import ConstitutiveModelInterface
from .dashpot_series_model import DashpotSeriesModel
from .spring_series_model import SpringSeriesModel
from .series_chain_model import SeriesChainModel
from .parallel_maxwell_model import ParallelMaxwellModel
from .factory import MODELS, create_model
from .simulator import Simulator, STRESS_NORMALIZATIONS, stress_history
from . import simulator as _simulator


def internal_rates(model: int, params: MaterialParams, state: ModelState) -> InternalRates:
    """Internal stretching tensors of ``state``."""
    return create_model(model, params).internal_rates(state)


def state_rate(model: int, params: MaterialParams, state: ModelState, velocity_gradient: np.ndarray) -> ModelState:
    """Time derivative of ``state`` under the velocity gradient L."""
    return create_model(model, params).state_rate(state, velocity_gradient)


def extra_stress(model: int, params: MaterialParams, state: ModelState) -> SymTensor3:
    return create_model(model, params).extra_stress(state)


def stored_energy(model: int, params: MaterialParams, state: ModelState) -> float:
    return create_model(model, params).stored_energy(state)


def dissipation_rate(model: int, params: MaterialParams, rates: InternalRates) -> float:
    return create_model(model, params).dissipation_rate(rates)


def simulate(model: int, params: MaterialParams, protocol: FlowProtocol, t_end: float, dt: float,
             record_every: int = 1, initial_state: Optional[ModelState] = None,
             stress_normalization: str = "extra",
             det_tolerance: float = _simulator.DEFAULT_DET_TOLERANCE,
             det_warning: float = _simulator.DEFAULT_DET_WARNING) -> List[SimRecord]:
    """
    Integrate model ``model`` under ``protocol`` from a virgin state.

    Raises:
        StepFailure: If a state tensor loses positive definiteness or
            |det B − 1| exceeds ``det_tolerance`` at a record
    """
    return _simulator.simulate(create_model(model, params), protocol, t_end, dt,
                               record_every=record_every, initial_state=initial_state,
                               stress_normalization=stress_normalization,
                               det_tolerance=det_tolerance, det_warning=det_warning)


__all__ = [
    'MaterialParams', 'Model1Params', 'Model2Params', 'Model3Params', 'Model4Params',
    'PARAMS_BY_MODEL', 'params_for', 'parse_inline_params',
    'ModelState', 'InternalRates', 'ConstitutiveModelInterface',
    'DashpotSeriesModel', 'SpringSeriesModel', 'SeriesChainModel', 'ParallelMaxwellModel',
    'MODELS', 'create_model', 'Simulator', 'STRESS_NORMALIZATIONS', 'stress_history',
    'internal_rates', 'state_rate', 'extra_stress', 'stored_energy', 'dissipation_rate', 'simulate',
]
