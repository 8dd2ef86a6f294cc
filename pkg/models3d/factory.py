"""
Model registry.
"""
from typing import Dict, Type

from exceptions import ConfigError
from .model_interface import ConstitutiveModelInterface
from .params import MaterialParams
from .dashpot_series_model import DashpotSeriesModel
from .spring_series_model import SpringSeriesModel
from .series_chain_model import SeriesChainModel
from .parallel_maxwell_model import ParallelMaxwellModel

MODELS: Dict[int, Type[ConstitutiveModelInterface]] = {
    1: DashpotSeriesModel,
    2: SpringSeriesModel,
    3: SeriesChainModel,
    4: ParallelMaxwellModel,
}


def create_model(model: int, params: MaterialParams) -> ConstitutiveModelInterface:
    """
    Instantiate model 1-4 with its parameters.

    Raises:
        ConfigError: On unknown ids or mismatched parameter sets
    """
    if model not in MODELS:
        raise ConfigError(f"model must be one of 1, 2, 3, 4 (got {model})")
    return MODELS[model](params)
