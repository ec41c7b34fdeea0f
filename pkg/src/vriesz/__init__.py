"""Particle solver and estimate-verification suite for the Vlasov-Riesz system."""

from .params import ModelParams, riesz_constant
from .state import Frame, GridField, ParticleEnsemble, Space

__version__ = "0.1.0"

__all__ = [
    "Frame",
    "GridField",
    "ModelParams",
    "ParticleEnsemble",
    "Space",
    "riesz_constant",
    "__version__",
]
