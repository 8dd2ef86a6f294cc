"""
Closed-form maps from 3D material parameters to Burgers coefficients.

Each map is the small-strain reduction of the corresponding 3D model; all
four differ, in particular q₁ = η₁ + η_G for model 2 while models 1 and 3
give q₁ = η₁.
"""
from typing import Callable, Dict

from exceptions import ConfigError
from models import BurgersCoeffs
from models3d.params import (
    MaterialParams,
    Model1Params,
    Model2Params,
    Model3Params,
    Model4Params,
)


def _model1(p: Model1Params) -> BurgersCoeffs:
    return BurgersCoeffs(
        p1=p.eta2 / (2.0 * p.mu_p) + p.eta2 / (2.0 * p.mu3) + p.eta1 / (2.0 * p.mu_p),
        p2=p.eta1 * p.eta2 / (4.0 * p.mu_p * p.mu3),
        q1=p.eta1,
        q2=p.eta1 * p.eta2 * (p.mu_p + p.mu3) / (2.0 * p.mu_p * p.mu3),
    )


def _model2(p: Model2Params) -> BurgersCoeffs:
    return BurgersCoeffs(
        p1=p.eta1 / (2.0 * p.mu2) + p.eta1 / (2.0 * p.mu3) + p.eta_g / (2.0 * p.mu3),
        p2=p.eta1 * p.eta_g / (4.0 * p.mu2 * p.mu3),
        q1=p.eta1 + p.eta_g,
        q2=p.eta1 * p.eta_g / (2.0 * p.mu2),
    )


def _model3(p: Model3Params) -> BurgersCoeffs:
    return BurgersCoeffs(
        p1=p.eta1 / (2.0 * p.mu2) + p.eta2 / (2.0 * p.mu2) + p.eta1 / (2.0 * p.mu3),
        p2=p.eta1 * p.eta2 / (4.0 * p.mu2 * p.mu3),
        q1=p.eta1,
        q2=p.eta1 * p.eta2 / (2.0 * p.mu2),
    )


def _model4(p: Model4Params) -> BurgersCoeffs:
    # p₂ over 4μ₂μ₄: the only dimensionally consistent reading for two Maxwell branches.
    return BurgersCoeffs(
        p1=p.eta1 / (2.0 * p.mu2) + p.eta3 / (2.0 * p.mu4),
        p2=p.eta1 * p.eta3 / (4.0 * p.mu2 * p.mu4),
        q1=p.eta1 + p.eta3,
        q2=p.eta1 * p.eta3 * (p.mu2 + p.mu4) / (2.0 * p.mu2 * p.mu4),
    )


_MAPS: Dict[int, Callable[..., BurgersCoeffs]] = {1: _model1, 2: _model2, 3: _model3, 4: _model4}


def coeffs_from_model(model: int, params: MaterialParams) -> BurgersCoeffs:
    """
    Burgers coefficients of a 3D model.

    Args:
        model: Model id 1-4
        params: Parameters of that model, all strictly positive

    Returns:
        BurgersCoeffs: (p₁, p₂, q₁, q₂)

    Raises:
        ConfigError: If the id is unknown or does not match ``params``
        NonPositiveParameterError: If a modulus is zero
    """
    if model not in _MAPS:
        raise ConfigError(f"model must be one of 1, 2, 3, 4 (got {model})")
    if params.model_id != model:
        raise ConfigError(f"parameters of model {params.model_id} given for model {model}")
    return _MAPS[model](params.require_positive())
