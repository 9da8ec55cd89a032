"""Pure-Python versions of the hot kernels.

Same signatures and algorithms as the compiled ``_ckernels`` module; used when
the extension is not built, or on request (``ZETABOUND_PURE_PYTHON=1``).
All functions take and return plain floats so both backends are
interchangeable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._tables import (
    GABCKE_D,
    GABCKE_T_MIN,
    RS_CORRECTIONS,
    STIRLING_TERMS,
    bernoulli,
    em_coefficients,
    stirling_coefficients,
)
from .interval import (
    HALF_PI,
    PI,
    TWO_PI,
    CInterval,
    RInterval,
    atan,
    cabs,
    cexp_i,
    cos,
    exp,
    log,
    sinc,
    sinc_derivative,
    sqrt,
)

NAME = "python"

_ONE = RInterval(1.0)
_ZERO = RInterval(0.0)


@lru_cache(maxsize=None)
def _em_coeffs(K: int) -> tuple[RInterval, ...]:
    return tuple(RInterval.exact(c) for c in em_coefficients(K + 1))


@lru_cache(maxsize=1 << 16)
def _log_n(n: int) -> RInterval:
    return log(RInterval(float(n)))


def _npow_neg(n: int, s: CInterval) -> CInterval:
    ln = _log_n(n)
    return cexp_i(-(s.im * ln)) * exp(-(s.re * ln))


def em_zeta_box(sre_lo: float, sre_hi: float, sim_lo: float, sim_hi: float, N: int, K: int):
    """Euler-Maclaurin enclosure of zeta(s) over a rectangle of s.

    Returns ``(re_lo, re_hi, im_lo, im_hi, remainder)``; the remainder bound
    is already folded into the enclosure and returned for tolerance control.
    The caller guarantees ``1`` is not in the rectangle, Re(s) > 0, N >= 2.
    """
    s = CInterval(RInterval(sre_lo, sre_hi), RInterval(sim_lo, sim_hi))
    acc = CInterval(_ONE, _ZERO)
    for n in range(2, N):
        acc = acc + _npow_neg(n, s)
    nn = RInterval(float(N))
    ns = _npow_neg(N, s)
    acc = acc + ns * nn / (s - 1.0) + ns * 0.5

    coeffs = _em_coeffs(K)
    inv_n2 = _ONE / nn.sqr()
    poch = s  # s(s+1)...(s+2k-2)
    tail = ns / nn  # N^(-s-2k+1)
    for k in range(1, K + 1):
        acc = acc + poch * tail * coeffs[k - 1]
        poch = poch * (s + float(2 * k - 1)) * (s + float(2 * k))
        tail = tail * inv_n2
    # |R_K| <= |s+2K+1| / (Re s + 2K + 1) * |T_{K+1}|
    first_omitted = cabs(poch) * cabs(tail) * abs(coeffs[K])
    factor = cabs(s + float(2 * K + 1)) / (s.re + float(2 * K + 1))
    rem = (first_omitted * factor).hi
    box = RInterval(-rem, rem)
    acc = CInterval(acc.re + box, acc.im + box)
    return acc.re.lo, acc.re.hi, acc.im.lo, acc.im.hi, rem


@lru_cache(maxsize=None)
def _stirling() -> tuple[tuple[RInterval, ...], RInterval]:
    coeffs = tuple(RInterval.exact(c) for c in stirling_coefficients(STIRLING_TERMS))
    m = STIRLING_TERMS + 1
    nxt = abs(bernoulli(2 * m)) / (2 * m * (2 * m - 1)) * 2**m
    return coeffs, RInterval.exact(nxt)


def theta_interval(T: RInterval) -> RInterval:
    """Riemann-Siegel theta over an interval of t (t >= 10).

    theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi, with the Stirling
    series truncated after STIRLING_TERMS terms.
    """
    coeffs, nxt = _stirling()
    z = CInterval(RInterval(0.25), T * 0.5)
    absz2 = T.sqr() * 0.25 + 0.0625
    log_absz = log(absz2) * 0.5
    arg_z = HALF_PI - atan(_ONE / (T * 2.0))
    val = T * 0.5 * (log_absz - 1.0 - log(PI)) - arg_z * 0.25
    inv = CInterval(_ONE, _ZERO) / z
    inv2 = inv * inv
    w = inv
    for c in coeffs:
        val = val + w.im * c
        w = w * inv2
    absz = sqrt(absz2)
    rem = (nxt / RInterval(absz.lo) ** (2 * STIRLING_TERMS + 1)).hi
    return val + RInterval(-rem, rem)


def theta_box(t_lo: float, t_hi: float):
    v = theta_interval(RInterval(t_lo, t_hi))
    return v.lo, v.hi


# -- Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) and its derivatives ---
#
# With u = p - 1/2 the quotient has no removable singularities:
#   Psi = sinc(2 pi (u^2 - 1/16)) / (pi sinc(pi (1/4 - u)) sinc(pi (1/4 + u)))
# and every sinc argument stays inside [-pi, pi] for |u| <= 1/2 + small.
# Derivatives come from truncated Taylor arithmetic over interval coefficients.


def _jmul(a: list[RInterval], b: list[RInterval], order: int) -> list[RInterval]:
    out = []
    for m in range(order + 1):
        acc = _ZERO
        for i in range(m + 1):
            acc = acc + a[i] * b[m - i]
        out.append(acc)
    return out


def _jdiv(a: list[RInterval], b: list[RInterval], order: int) -> list[RInterval]:
    q: list[RInterval] = []
    for m in range(order + 1):
        acc = a[m]
        for i in range(1, m + 1):
            acc = acc - b[i] * q[m - i]
        q.append(acc / b[0])
    return q


def _sinc_jet(x0: RInterval, delta: list[RInterval], order: int) -> list[RInterval]:
    """Jet of sinc(x0 + delta(h)) where delta has zero constant term."""
    out = [sinc(x0)] + [_ZERO] * order
    power = [_ONE] + [_ZERO] * order
    for k in range(1, order + 1):
        power = _jmul(power, delta, order)
        ck = sinc_derivative(x0, k) / float(math.factorial(k))
        for m in range(k, order + 1):
            out[m] = out[m] + ck * power[m]
    return out


def psi_derivatives(P: RInterval, order: int) -> list[RInterval]:
    """Enclosures of Psi^(m)(p) for m = 0..order, for all p in P."""
    u = P - 0.5
    g0 = (u.sqr() - 0.0625) * TWO_PI
    pad = [_ZERO] * (order + 1)
    g = ([_ZERO, u * (PI * 4.0), TWO_PI] + pad)[: order + 1]
    a0 = (RInterval(0.25) - u) * PI
    b0 = (RInterval(0.25) + u) * PI
    num = _sinc_jet(g0, g, order)
    sa = _sinc_jet(a0, ([_ZERO, -PI] + pad)[: order + 1], order)
    sb = _sinc_jet(b0, ([_ZERO, PI] + pad)[: order + 1], order)
    den = [c * PI for c in _jmul(sa, sb, order)]
    q = _jdiv(num, den, order)
    return [q[m] * float(math.factorial(m)) for m in range(order + 1)]


_MAX_ORDER = (0, 3, 6, 9, 12)


@lru_cache(maxsize=None)
def _pi_powers() -> tuple[RInterval, ...]:
    return tuple(PI ** k for k in range(9))


def rs_corrections(P: RInterval, terms: int) -> list[RInterval]:
    """C_0(p)..C_terms(p) enclosures."""
    d = psi_derivatives(P, _MAX_ORDER[terms])
    pis = _pi_powers()
    out = []
    for j in range(terms + 1):
        acc = _ZERO
        for order, coef, pw in RS_CORRECTIONS[j]:
            acc = acc + d[order] * RInterval.exact(coef) / pis[pw]
        out.append(acc)
    return out


def rs_z_box(t_lo: float, t_hi: float, terms: int):
    """Riemann-Siegel enclosure of Z(t) for t in [t_lo, t_hi], t_lo >= 200.

    Raises ValueError if floor(sqrt(t/2pi)) is not provably constant.
    """
    T = RInterval(t_lo, t_hi)
    a = sqrt(T / TWO_PI)
    N = math.floor(a.lo)
    if math.floor(a.hi) != N:
        raise ValueError("main-sum length changes inside the t interval")
    th = theta_interval(T)
    main = _ZERO
    for n in range(1, N + 1):
        phase = th - T * _log_n(n)
        main = main + cos(phase) / sqrt(RInterval(float(n)))
    main = main * 2.0
    P = a - float(N)
    X = T / TWO_PI
    scale = exp(log(X) * -0.25)
    r = _ONE / sqrt(X)
    corr = _ZERO
    rpow = _ONE
    for c in rs_corrections(P, terms):
        corr = corr + c * rpow
        rpow = rpow * r
    if N % 2 == 0:
        corr = -corr
    d = RInterval.exact(GABCKE_D[terms])
    rem = (d * exp(log(RInterval(t_lo)) * RInterval.exact(Fraction(-(2 * terms + 3), 4)))).hi
    z = main + scale * corr + RInterval(-rem, rem)
    return z.lo, z.hi


def em_default_n(t_hi: float) -> int:
    return max(10, math.ceil(1.5 * abs(t_hi)))


def abs_zeta_piece(a: float, b: float, terms: int, em_k: int, em_tol: float):
    """``(lo, hi, method)`` for |zeta(1/2+it)| on [a, b]; method 1 is RS."""
    if a >= GABCKE_T_MIN:
        try:
            z_lo, z_hi = rs_z_box(a, b, terms)
        except ValueError:
            pass
        else:
            m = abs(RInterval(z_lo, z_hi))
            return m.lo, m.hi, 1
    N = em_default_n(b)
    while True:
        re_lo, re_hi, im_lo, im_hi, rem = em_zeta_box(0.5, 0.5, a, b, N, em_k)
        if rem <= em_tol or N > (1 << 24):
            break
        N *= 2
    m = cabs(CInterval(RInterval(re_lo, re_hi), RInterval(im_lo, im_hi)))
    return m.lo, m.hi, 0


def abs_zeta_grid(edges, terms: int, em_k: int, em_tol: float):
    """Enclosures on [edges[i], edges[i+1]]; same contract as the compiled kernel."""
    if not 0 <= terms <= 4:
        raise ValueError("terms must be in [0, 4]")
    n = len(edges) - 1
    lo = np.empty(n)
    hi = np.empty(n)
    method = np.empty(n, dtype=np.int8)
    for i in range(n):
        lo[i], hi[i], method[i] = abs_zeta_piece(float(edges[i]), float(edges[i + 1]), terms, em_k, em_tol)
    return lo, hi, method


_SIXTH = RInterval.exact(Fraction(1, 6))


def _threshold(a: float, c: float) -> RInterval:
    la = log(RInterval(a))
    return RInterval(c) * exp(la * _SIXTH) * la


def threshold_lo(a, c_lo: float):
    """Lower bounds of c * a^(1/6) * log(a) for a >= 1, c_lo >= 0."""
    return np.array([_threshold(float(x), c_lo).lo for x in a])


def threshold_hi(a, c_hi: float):
    """Upper bounds of c * a^(1/6) * log(a) for a >= 1, c_hi >= 0."""
    return np.array([_threshold(float(x), c_hi).hi for x in a])
