"""Rigorous enclosures of zeta on and near the critical line.

Two evaluators are available:

* Euler-Maclaurin summation, valid wherever Re(s) > 0 and s != 1,
* the Riemann-Siegel formula with Gabcke's explicit remainder, for t >= 200.

``abs_zeta_half`` chooses between them for |zeta(1/2+it)|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import kernels
from ._tables import GABCKE_T_MIN
from .interval import TWO_PI, CInterval, DomainError, RInterval, as_interval, cabs, sqrt

DEFAULT_EM_K = 10
DEFAULT_EM_TOL = 1e-12
DEFAULT_RS_TERMS = 2
MAX_EM_N = 1 << 24


class PoleError(DomainError):
    """The s-interval contains the pole at s = 1."""


class ParameterError(ValueError):
    """Evaluation parameters are outside the range where the error bound holds."""


class Method(str, Enum):
    EM = "EM"
    RS = "RS"


@dataclass(frozen=True)
class EMParams:
    """Euler-Maclaurin truncation: main sum length N, Bernoulli terms K.

    If ``tol`` is set, N is doubled until the remainder bound is at most
    ``tol`` (or N would exceed 2^24).
    """

    N: int
    K: int = DEFAULT_EM_K
    tol: float | None = None

    def __post_init__(self):
        if self.N < 2:
            raise ParameterError(f"N must be >= 2, got {self.N}")
        if not 1 <= self.K <= 60:
            raise ParameterError(f"K must be in [1, 60], got {self.K}")

    @classmethod
    def auto(cls, t_hi: float, K: int = DEFAULT_EM_K, tol: float = DEFAULT_EM_TOL) -> "EMParams":
        """Default N = max(10, ceil(1.5 |t|)) with doubling to reach ``tol``."""
        return cls(max(10, math.ceil(1.5 * abs(t_hi))), K, tol)


@dataclass(frozen=True)
class RSParams:
    """Number of Riemann-Siegel correction terms beyond C_0 (0..4)."""

    terms: int = DEFAULT_RS_TERMS

    def __post_init__(self):
        if not 0 <= self.terms <= 4:
            raise ParameterError(f"terms must be in [0, 4], got {self.terms}")


@dataclass(frozen=True)
class ZetaEnclosure:
    """|zeta(1/2+it)| lies in ``value`` for every t in ``t_range``."""

    t_range: RInterval
    value: RInterval
    method: Method


def _to_cinterval(s) -> CInterval:
    if isinstance(s, CInterval):
        return s
    if isinstance(s, complex):
        return CInterval(RInterval(s.real), RInterval(s.imag))
    return CInterval(as_interval(s), RInterval(0.0))


def em_zeta(s, p: EMParams | None = None, backend: str | None = None) -> CInterval:
    """Enclosure of zeta(s) valid for every s in the rectangle ``s``.

    Requires Re(s) within (0, 2] and 1 outside the rectangle.
    """
    s = _to_cinterval(s)
    if s.re.contains(1.0) and s.im.contains(0.0):
        raise PoleError("s interval contains the pole s = 1")
    if not (s.re.lo > 0.0 and s.re.hi <= 2.0):
        raise DomainError(f"Re(s) must lie in (0, 2], got {s.re}")
    if p is None:
        p = EMParams.auto(s.im.mag())
    kern = kernels.get_backend(backend)
    N = p.N
    while True:
        re_lo, re_hi, im_lo, im_hi, rem = kern.em_zeta_box(s.re.lo, s.re.hi, s.im.lo, s.im.hi, N, p.K)
        if not math.isfinite(rem):
            raise ParameterError(f"Euler-Maclaurin tail bound is not finite for N={N}, K={p.K}")
        if p.tol is None or rem <= p.tol:
            break
        if 2 * N > MAX_EM_N:
            raise ParameterError(f"tolerance {p.tol} not reached with N <= {MAX_EM_N}")
        N *= 2
    return CInterval(RInterval(re_lo, re_hi), RInterval(im_lo, im_hi))


def main_sum_length(t: RInterval) -> tuple[int, int]:
    """Bounds on floor(sqrt(t/2pi)) over t."""
    a = sqrt(t / TWO_PI)
    return math.floor(a.lo), math.floor(a.hi)


def rs_abs_zeta(t, p: RSParams | None = None, backend: str | None = None) -> RInterval:
    """|Z(t)| = |zeta(1/2+it)| enclosure for all t in ``t`` via Riemann-Siegel.

    Needs t >= 200 and a constant main-sum length over the interval.
    """
    t = as_interval(t)
    p = p or RSParams()
    if t.lo < GABCKE_T_MIN:
        raise DomainError(f"Riemann-Siegel remainder bound needs t >= {GABCKE_T_MIN}, got {t}")
    n_lo, n_hi = main_sum_length(t)
    if n_lo != n_hi:
        raise ParameterError(f"main-sum length changes inside {t} ({n_lo} -> {n_hi})")
    z_lo, z_hi = kernels.get_backend(backend).rs_z_box(t.lo, t.hi, p.terms)
    return abs(RInterval(z_lo, z_hi))


def rs_applicable(t: RInterval) -> bool:
    if t.lo < GABCKE_T_MIN:
        return False
    n_lo, n_hi = main_sum_length(t)
    return n_lo == n_hi


def abs_zeta_half(
    t,
    rs: RSParams | None = None,
    em_k: int = DEFAULT_EM_K,
    em_tol: float = DEFAULT_EM_TOL,
    backend: str | None = None,
) -> ZetaEnclosure:
    """Enclosure of |zeta(1/2+it)| over ``t``.

    Riemann-Siegel is used when t.lo >= 200 and floor(sqrt(t/2pi)) is constant
    on the interval; otherwise Euler-Maclaurin.
    """
    t = as_interval(t)
    if t.lo < 0.1:
        raise DomainError(f"t must be >= 0.1, got {t}")
    if rs_applicable(t):
        return ZetaEnclosure(t, rs_abs_zeta(t, rs, backend), Method.RS)
    s = CInterval(RInterval(0.5), t)
    z = em_zeta(s, EMParams.auto(t.hi, em_k, em_tol), backend)
    return ZetaEnclosure(t, cabs(z), Method.EM)
