"""Processing module initialization: time integration and signal post-processing."""
from .time_integrator import RK4Integrator
from .signal_processor import SignalProcessor, SinusoidFit

__all__ = ['RK4Integrator', 'SignalProcessor', 'SinusoidFit']
