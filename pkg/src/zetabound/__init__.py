"""Rigorous enclosures of |zeta(1/2+it)| and explicit bounds of the form A t^(1/6) log t."""

from .interval import CInterval, DomainError, RInterval, cabs
from .kernels import active as kernel_backend
from .zeta_eval import EMParams, Method, RSParams, ZetaEnclosure, abs_zeta_half, em_zeta, rs_abs_zeta

__all__ = [
    "CInterval",
    "DomainError",
    "EMParams",
    "Method",
    "RInterval",
    "RSParams",
    "ZetaEnclosure",
    "abs_zeta_half",
    "cabs",
    "em_zeta",
    "kernel_backend",
    "rs_abs_zeta",
]

__version__ = "0.1.0"
