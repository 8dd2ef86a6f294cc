"""
Canonical element networks of the four 3D models.
"""
from exceptions import ConfigError
from models3d.params import MaterialParams
from .network_expr import NetworkExpr, Spring, Dashpot, series, parallel


def canonical_network(model: int, params: MaterialParams) -> NetworkExpr:
    """
    Spring-dashpot network whose transfer function is model ``model``'s
    Burgers law.

    Args:
        model: Model id 1-4
        params: Parameters of that model, all strictly positive

    Returns:
        NetworkExpr: Arrangement (a), (b), (c) or (d)

    Raises:
        ConfigError: If the id is unknown or does not match ``params``
    """
    if model not in (1, 2, 3, 4):
        raise ConfigError(f"model must be one of 1, 2, 3, 4 (got {model})")
    if params.model_id != model:
        raise ConfigError(f"parameters of model {params.model_id} given for model {model}")
    p = params.require_positive()
    if model == 1:
        return series(Dashpot(p.eta1), parallel(Spring(p.mu_p), series(Spring(p.mu3), Dashpot(p.eta2))))
    if model == 2:
        return series(Spring(p.mu3), parallel(Dashpot(p.eta_g), series(Spring(p.mu2), Dashpot(p.eta1))))
    if model == 3:
        return series(Spring(p.mu3), parallel(Spring(p.mu2), Dashpot(p.eta2)), Dashpot(p.eta1))
    return parallel(series(Spring(p.mu2), Dashpot(p.eta1)), series(Spring(p.mu4), Dashpot(p.eta3)))
