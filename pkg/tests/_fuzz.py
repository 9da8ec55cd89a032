"""Containment fuzzing for the interval layer.

Random intervals and random points inside them; the exact (Fraction) or
high-precision image of the points must lie in the interval result.
Elementary functions are checked against numpy long double first and
against mpmath at 40 digits when the long double value is too close to an
endpoint to decide.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import mpmath
import numpy as np

from zetabound import interval as iv
from zetabound.interval import RInterval

LD_REL = 2.0**-58  # generous error allowance for long double libm


def rand_float(rng: random.Random, emin: int = -20, emax: int = 20, positive: bool = False) -> float:
    x = math.ldexp(rng.random() + 0.5, rng.randint(emin, emax))
    if not positive and rng.random() < 0.5:
        x = -x
    return x


def rand_interval(rng: random.Random, **kw) -> tuple[RInterval, float]:
    """A random interval and a random point inside it."""
    a = rand_float(rng, **kw)
    if rng.random() < 0.4:
        return RInterval(a), a
    b = a + rand_float(rng, kw.get("emin", -20), kw.get("emax", 20), positive=True) * rng.random()
    if math.isinf(b):
        b = a
    lo, hi = min(a, b), max(a, b)
    r = rng.random()
    x = lo if r < 0.1 else hi if r < 0.2 else min(hi, max(lo, lo + (hi - lo) * rng.random()))
    return RInterval(lo, hi), x


_EXACT = {
    "add": (lambda a, b: a + b, lambda x, y: x + y),
    "sub": (lambda a, b: a - b, lambda x, y: x - y),
    "mul": (lambda a, b: a * b, lambda x, y: x * y),
    "div": (lambda a, b: a / b, lambda x, y: x / y),
}


def _frac_or_inf(v: float):
    return v if math.isinf(v) else Fraction(v)


def fuzz_arith(op: str, trials: int, seed: int = 0) -> tuple[int, int]:
    """(failures, width violations for point inputs)."""
    f_iv, f_exact = _EXACT[op]
    rng = random.Random(seed)
    failures = wide = 0
    done = 0
    while done < trials:
        # one trial in ten probes underflow and overflow
        kw = {"emin": -1070, "emax": 1020} if rng.random() < 0.1 else {}
        a, x = rand_interval(rng, **kw)
        b, y = rand_interval(rng, **kw)
        if op == "div" and b.contains(0.0):
            continue
        r = f_iv(a, b)
        exact = f_exact(Fraction(x), Fraction(y))
        if not (_frac_or_inf(r.lo) <= exact <= _frac_or_inf(r.hi)):
            failures += 1
        if a.is_point() and b.is_point() and math.isfinite(r.hi) and math.isfinite(r.lo):
            mag = max(abs(r.lo), abs(r.hi))
            if r.hi - r.lo > 4 * math.ulp(mag):
                wide += 1
        done += 1
    return failures, wide


def _domain(fn: str, rng: random.Random) -> tuple[RInterval, float]:
    if fn == "exp":
        return rand_interval(rng, emin=-30, emax=9)
    if fn in ("log", "sqrt"):
        return rand_interval(rng, emin=-60, emax=60, positive=True)
    if fn in ("sin", "cos"):
        return rand_interval(rng, emin=-20, emax=20)
    if fn == "atan":
        return rand_interval(rng, emin=-30, emax=30)
    raise ValueError(fn)


_IV = {"exp": iv.exp, "log": iv.log, "sqrt": iv.sqrt, "sin": iv.sin, "cos": iv.cos, "atan": iv.atan}
_LD = {"exp": np.exp, "log": np.log, "sqrt": np.sqrt, "sin": np.sin, "cos": np.cos, "atan": np.arctan}
_MP = {"exp": mpmath.exp, "log": mpmath.log, "sqrt": mpmath.sqrt, "sin": mpmath.sin, "cos": mpmath.cos, "atan": mpmath.atan}


def _check_ld(points, lo, hi, values, mp_fn) -> int:
    lo = np.array(lo)
    hi = np.array(hi)
    tol = np.abs(values) * LD_REL + np.longdouble(2.0) ** -16000
    sure_in = (lo.astype(np.longdouble) <= values - tol) & (values + tol <= hi.astype(np.longdouble))
    # exact endpoint values (e.g. exp(0) = 1) are allowed to touch the bound
    failures = 0
    with mpmath.workdps(40):
        for i in np.flatnonzero(~sure_in):
            v = mp_fn(points[i])
            if not (mpmath.mpf(lo[i]) <= v <= mpmath.mpf(hi[i])):
                failures += 1
    return failures


def fuzz_elementary(fn: str, trials: int, seed: int = 0) -> int:
    rng = random.Random(seed)
    pts, los, his = [], [], []
    f = _IV[fn]
    for _ in range(trials):
        a, x = _domain(fn, rng)
        r = f(a)
        pts.append(x)
        los.append(r.lo)
        his.append(r.hi)
    values = _LD[fn](np.array(pts, dtype=np.longdouble))
    return _check_ld(pts, los, his, values, lambda x: _MP[fn](mpmath.mpf(x)))


def fuzz_pow(trials: int, seed: int = 0) -> int:
    """x^y for x > 0 and real y."""
    rng = random.Random(seed)
    xs, ys, los, his = [], [], [], []
    for _ in range(trials):
        a, x = rand_interval(rng, emin=-10, emax=10, positive=True)
        b, y = rand_interval(rng, emin=-6, emax=2)
        r = iv.pow_(a, b)
        xs.append(x)
        ys.append(y)
        los.append(r.lo)
        his.append(r.hi)
    values = np.power(np.array(xs, dtype=np.longdouble), np.array(ys, dtype=np.longdouble))
    pairs = list(zip(xs, ys))
    return _check_ld(pairs, los, his, values, lambda p: mpmath.power(mpmath.mpf(p[0]), mpmath.mpf(p[1])))


def fuzz_cabs(trials: int, seed: int = 0) -> int:
    rng = random.Random(seed)
    xs, ys, los, his = [], [], [], []
    for _ in range(trials):
        a, x = rand_interval(rng)
        b, y = rand_interval(rng)
        r = iv.cabs(iv.CInterval(a, b))
        xs.append(x)
        ys.append(y)
        los.append(r.lo)
        his.append(r.hi)
    values = np.hypot(np.array(xs, dtype=np.longdouble), np.array(ys, dtype=np.longdouble))
    pairs = list(zip(xs, ys))
    return _check_ld(pairs, los, his, values, lambda p: mpmath.hypot(mpmath.mpf(p[0]), mpmath.mpf(p[1])))
