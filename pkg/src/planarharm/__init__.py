"""Exact planar harmonic polynomials for the type-B Dunkl Laplacian."""

from .dunkl import Reflection, apply_reflection, dunkl_T, laplacian_B
from .exactalg import MultiPoly, Params, Rational, rat
from .harmonic import HarmonicLabel, build_harmonic
from .special import norm_squared

__all__ = [
    "HarmonicLabel",
    "MultiPoly",
    "Params",
    "Rational",
    "Reflection",
    "apply_reflection",
    "build_harmonic",
    "dunkl_T",
    "laplacian_B",
    "norm_squared",
    "rat",
]
