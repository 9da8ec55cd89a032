"""Exponential sums and explicit estimates for them.

Sums of e^{2 pi i f(n)} are enclosed term by term. The bounds implemented
are the van der Corput second-derivative estimate, Weyl differencing, the
weighted moment bounds used with the shift modulus M, and the approximate
functional equation bound for |zeta(1/2+it)|. The ``*_battery`` functions
check each bound against direct summation on randomized inputs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .interval import (
    PI,
    TWO_PI,
    CInterval,
    DomainError,
    RInterval,
    as_interval,
    cabs,
    cexp_i,
    exp,
    log,
    sin,
    sqrt,
)

LEMMA3_C1 = Fraction("1.53")
LEMMA3_C2 = Fraction("3.23")
LEMMA3_T_MIN = 100


@dataclass(frozen=True)
class PhaseFn:
    """A phase f with 1/W <= |f''(x)| <= 1/V on the summation range.

    ``eval`` maps an interval of x to an enclosure of f over it. ``d2`` is
    optional; when given it encloses f'' and is used to certify (V, W).
    """

    eval: Callable[[RInterval], RInterval]
    V: float
    W: float
    d2: Callable[[RInterval], RInterval] | None = None

    def __post_init__(self):
        if not self.V < self.W:
            raise DomainError(f"need V < W, got V={self.V}, W={self.W}")
        if not self.W > 1:
            raise DomainError(f"need W > 1, got W={self.W}")

    def certify(self, x: RInterval) -> bool:
        """Rigorously check 1/W <= |f''| <= 1/V on x (needs ``d2``)."""
        if self.d2 is None:
            return False
        d = abs(self.d2(x))
        return d.lo >= (1.0 / RInterval(self.W)).hi and d.hi <= (1.0 / RInterval(self.V)).lo


@dataclass(frozen=True)
class SumRange:
    """Summation n = N+1..N+L, prefix length K, Weyl modulus M and shift m."""

    N: int
    L: int
    K: int = 1
    M: int = 1
    m: int = 1

    def __post_init__(self):
        if self.L < 1:
            raise DomainError(f"L must be >= 1, got {self.L}")
        if not 1 <= self.K <= self.L:
            raise DomainError(f"K must be in [1, L], got {self.K}")
        if self.M < 1:
            raise DomainError(f"M must be >= 1, got {self.M}")


def _unit(f: Callable[[RInterval], RInterval], n: int) -> CInterval:
    return cexp_i(f(RInterval(float(n))) * TWO_PI)


def direct_sum(f: PhaseFn | Callable[[RInterval], RInterval], r: SumRange) -> CInterval:
    """Enclosure of sum_{n=N+1}^{N+L} e^{2 pi i f(n)}."""
    fn = f.eval if isinstance(f, PhaseFn) else f
    acc = CInterval(RInterval(0.0), RInterval(0.0))
    for n in range(r.N + 1, r.N + r.L + 1):
        acc = acc + _unit(fn, n)
    return acc


def partial_sums(f: PhaseFn | Callable[[RInterval], RInterval], N: int, L: int) -> list[CInterval]:
    """Enclosures of every prefix sum_{n=N+1}^{N+K}, K = 1..L."""
    fn = f.eval if isinstance(f, PhaseFn) else f
    out = []
    acc = CInterval(RInterval(0.0), RInterval(0.0))
    for n in range(N + 1, N + L + 1):
        acc = acc + _unit(fn, n)
        out.append(acc)
    return out


def max_partial_abs(f: PhaseFn | Callable[[RInterval], RInterval], N: int, L: int) -> RInterval:
    """Enclosure of max over K <= L of |sum_{n=N+1}^{N+K} e^{2 pi i f(n)}|."""
    best = RInterval(0.0)
    for s in partial_sums(f, N, L):
        a = cabs(s)
        best = RInterval(max(best.lo, a.lo), max(best.hi, a.hi))
    return best


def shifted(f: Callable[[RInterval], RInterval], m: int) -> Callable[[RInterval], RInterval]:
    """The differenced phase x -> f(x + m) - f(x)."""
    return lambda x: f(x + float(m)) - f(x)


_SQRT_2_OVER_PI = sqrt(RInterval(2.0) / PI)


def lemma1_bound(L: int, V, W) -> RInterval:
    """((L-1)/V + 1) (2 sqrt(2/pi) W^(1/2) + 2) + 1."""
    V = as_interval(V)
    W = as_interval(W)
    if not W.lo > 1:
        raise DomainError(f"second-derivative test needs W > 1, got W={W}")
    if not V.hi < W.lo:
        raise DomainError(f"second-derivative test needs V < W, got V={V}, W={W}")
    if L < 1:
        raise DomainError(f"L must be >= 1, got {L}")
    first = RInterval(float(L - 1)) / V + 1.0
    second = _SQRT_2_OVER_PI * sqrt(W) * 2.0 + 2.0
    return first * second + 1.0


def lemma2_bound(r: SumRange, inner_max: Mapping[int, float] | Callable[[int], object]) -> RInterval:
    """L(L+M-1)/M + (2(L+M-1)/M) sum_{m<M} (1 - m/M) inner_max(m).

    Bounds |sum|^2; ``inner_max(m)`` must bound max_{K<=L} |Sigma_{m,K}|.
    """
    M = r.M
    if M < 1:
        raise DomainError(f"M must be >= 1, got {M}")
    get = inner_max.__getitem__ if isinstance(inner_max, Mapping) else inner_max
    L = RInterval(float(r.L))
    Mi = RInterval(float(M))
    span = RInterval(float(r.L + M - 1))
    total = L * span / Mi
    acc = RInterval(0.0)
    for m in range(1, M):
        weight = RInterval.exact(Fraction(M - m, M))
        acc = acc + weight * as_interval(get(m))
    return total + span * 2.0 / Mi * acc


_FOUR_FIFTEENTHS = RInterval.exact(Fraction(4, 15))
_FOUR_THIRDS = RInterval.exact(Fraction(4, 3))


def weighted_moment_bounds(M: int) -> tuple[RInterval, RInterval]:
    """Enclosures of (4/15) M^(3/2) and (4/3) M^(1/2)."""
    if M < 1:
        raise DomainError(f"M must be >= 1, got {M}")
    rm = sqrt(RInterval(float(M)))
    return _FOUR_FIFTEENTHS * rm * float(M), _FOUR_THIRDS * rm


def weighted_moments(M: int) -> tuple[RInterval, RInterval]:
    """Enclosures of sum_{m<M} (1 - m/M) m^(1/2) and of the same with m^(-1/2)."""
    plus = RInterval(0.0)
    minus = RInterval(0.0)
    for m in range(1, M):
        w = RInterval.exact(Fraction(M - m, M))
        r = sqrt(RInterval(float(m)))
        plus = plus + w * r
        minus = minus + w / r
    return plus, minus


def weighted_moments_upto(M_max: int):
    """Yield ``(M, plus, minus)`` for M = 1..M_max in linear total time.

    Uses sum (1 - m/M) m^a = S_a(M-1) - S_{a+1}(M-1)/M with running power sums.
    """
    s_half = RInterval(0.0)  # m^(1/2)
    s_three_halves = RInterval(0.0)  # m^(3/2)
    s_minus_half = RInterval(0.0)  # m^(-1/2)
    for M in range(1, M_max + 1):
        Mi = RInterval(float(M))
        plus = s_half - s_three_halves / Mi
        minus = s_minus_half - s_half / Mi
        yield M, RInterval(max(plus.lo, 0.0), plus.hi), RInterval(max(minus.lo, 0.0), minus.hi)
        r = sqrt(Mi)
        s_half = s_half + r
        s_three_halves = s_three_halves + r * Mi
        s_minus_half = s_minus_half + 1.0 / r


def _main_sum(t: RInterval, length: int) -> RInterval:
    acc = CInterval(RInterval(0.0), RInterval(0.0))
    for n in range(1, length + 1):
        ln = log(RInterval(float(n)))
        acc = acc + cexp_i(-(t * ln)) * exp(ln * -0.5)
    return cabs(acc)


def lemma3_rhs(t) -> RInterval:
    """2 |sum_{n <= sqrt(t/2pi)} n^(-1/2-it)| + 1.53 t^(-1/4) + 3.23 t^(-3/4).

    The error terms are evaluated at the same t as the sum. When the sum
    length is not constant over t, the hull over both lengths is returned.
    """
    t = as_interval(t)
    if t.lo < LEMMA3_T_MIN:
        raise DomainError(f"approximate functional equation needs t >= {LEMMA3_T_MIN}, got {t}")
    a = sqrt(t / TWO_PI)
    lengths = range(math.floor(a.lo), math.floor(a.hi) + 1)
    main = None
    for n in lengths:
        v = _main_sum(t, n)
        main = v if main is None else main.hull(v)
    lt = log(t)
    err = RInterval.exact(LEMMA3_C1) * exp(lt * -0.25) + RInterval.exact(LEMMA3_C2) * exp(lt * -0.75)
    return main * 2.0 + err


# -- randomized domination checks -------------------------------------------


@dataclass(frozen=True)
class BatteryResult:
    """Outcome of a domination battery.

    ``certified`` trials were decided by interval arithmetic alone
    (bound.lo >= value.hi); the rest were not refuted by the intervals and were
    settled by a 50-digit point evaluation.
    """

    name: str
    trials: int
    failures: list
    certified: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures and self.trials > 0

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.name}: {status} trials={self.trials} certified={self.certified} "
            f"failures={len(self.failures)}"
        )


def _judge(bound: RInterval, value: RInterval, point_check: Callable[[], bool]) -> tuple[bool, bool]:
    """(ok, certified) for the claim bound >= value."""
    if bound.lo >= value.hi:
        return True, True
    if bound.hi < value.lo:
        return False, False
    return point_check(), False


def _mp_abs_sum(phase, N: int, L: int):
    import mpmath

    acc = mpmath.mpc(0)
    for n in range(N + 1, N + L + 1):
        acc += mpmath.expjpi(2 * phase(mpmath.mpf(n)))
    return abs(acc)


@dataclass(frozen=True)
class _Quadratic:
    """f(x) = c x^2 + d x + e sin(w x); f'' = 2c - e w^2 sin(w x)."""

    c: float
    d: float
    e: float
    w: float

    def interval(self, x: RInterval) -> RInterval:
        return RInterval(self.c) * x.sqr() + RInterval(self.d) * x + RInterval(self.e) * sin(RInterval(self.w) * x)

    def second(self, x: RInterval) -> RInterval:
        return RInterval(self.c) * 2.0 - RInterval(self.e) * RInterval(self.w).sqr() * sin(RInterval(self.w) * x)

    def mp(self, x):
        import mpmath

        c, d, e, w = (mpmath.mpf(v) for v in (self.c, self.d, self.e, self.w))
        return c * x * x + d * x + e * mpmath.sin(w * x)


def random_quadratic_phase(rng: random.Random) -> tuple[PhaseFn, _Quadratic]:
    """A random phase whose second derivative has a certified range.

    Returns the phase and its parameters (for high-precision evaluation).
    """
    c = rng.uniform(1e-4, 0.4)
    d = rng.uniform(-1.0, 1.0)
    w = rng.uniform(0.1, 2.0)
    e = rng.uniform(0.0, 0.9) * 2 * c / (w * w)
    q = _Quadratic(c, d, e, w)
    C, E, Wf = RInterval(c), RInterval(e), RInterval(w)
    # |sin| <= 1 gives 2c - e w^2 <= |f''| <= 2c + e w^2
    W = (1.0 / (C * 2.0 - E * Wf.sqr())).hi
    V = (1.0 / (C * 2.0 + E * Wf.sqr())).lo
    return PhaseFn(q.interval, V, W, q.second), q


def lemma1_battery(trials: int = 1000, seed: int = 1, max_len: int = 200) -> BatteryResult:
    """Second-derivative test bound versus direct sums for random phases.

    A trial counts only if (V, W) is certified over [N+1, N+L].
    """
    import mpmath

    rng = random.Random(seed)
    failures = []
    certified = done = 0
    while done < trials:
        N = rng.randrange(0, 10_000)
        L = rng.randrange(1, max_len + 1)
        try:
            f, q = random_quadratic_phase(rng)
        except DomainError:
            continue  # W <= 1 or V >= W: hypothesis not met
        if not f.certify(RInterval(float(N + 1), float(N + L))):
            continue
        s = cabs(direct_sum(f, SumRange(N, L)))
        b = lemma1_bound(L, f.V, f.W)

        def point() -> bool:
            with mpmath.workdps(50):
                vv, ww = mpmath.mpf(f.V), mpmath.mpf(f.W)
                rhs = ((L - 1) / vv + 1) * (2 * mpmath.sqrt(2 / mpmath.pi) * mpmath.sqrt(ww) + 2) + 1
                return rhs >= _mp_abs_sum(q.mp, N, L)

        ok, cert = _judge(b, s, point)
        certified += cert
        if not ok:
            failures.append((N, L, f.V, f.W, s, b))
        done += 1
    return BatteryResult("lemma1", done, failures, certified)


@dataclass(frozen=True)
class _Mixed:
    """f(x) = c x^2/7 + d sqrt(x) + g log(x)."""

    c: float
    d: float
    g: float

    def interval(self, x: RInterval) -> RInterval:
        return RInterval(self.c) * x.sqr() / 7.0 + RInterval(self.d) * sqrt(x) + RInterval(self.g) * log(x)

    def mp(self, x):
        import mpmath

        c, d, g = (mpmath.mpf(v) for v in (self.c, self.d, self.g))
        return c * x * x / 7 + d * mpmath.sqrt(x) + g * mpmath.log(x)


def _mp_max_partial(phase, m: int, N: int, L: int):
    import mpmath

    acc = mpmath.mpc(0)
    best = mpmath.mpf(0)
    for n in range(N + 1, N + L + 1):
        acc += mpmath.expjpi(2 * (phase(mpmath.mpf(n + m)) - phase(mpmath.mpf(n))))
        best = max(best, abs(acc))
    return best


def lemma2_battery(max_len: int = 20, seed: int = 2) -> BatteryResult:
    """Weyl differencing bound versus |sum|^2 for every L <= max_len, M <= L."""
    import mpmath

    rng = random.Random(seed)
    failures = []
    trials = certified = 0
    for L in range(1, max_len + 1):
        for M in range(1, L + 1):
            N = rng.randrange(0, 1000)
            q = _Mixed(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0, 1))
            s2 = cabs(direct_sum(q.interval, SumRange(N, L))).sqr()
            inner = {m: max_partial_abs(shifted(q.interval, m), N, L).hi for m in range(1, M)}
            b = lemma2_bound(SumRange(N, L, 1, M), inner)

            def point() -> bool:
                with mpmath.workdps(50):
                    acc = mpmath.mpf(L) * (L + M - 1) / M
                    for m in range(1, M):
                        acc += 2 * mpmath.mpf(L + M - 1) / M * (1 - mpmath.mpf(m) / M) * _mp_max_partial(q.mp, m, N, L)
                    return acc >= _mp_abs_sum(q.mp, N, L) ** 2

            ok, cert = _judge(b, s2, point)
            certified += cert
            if not ok:
                failures.append((N, L, M, s2, b))
            trials += 1
    return BatteryResult("lemma2", trials, failures, certified)


def lemma3_battery(samples: int = 50, seed: int = 3, t_max: float = 1e5) -> BatteryResult:
    """Approximate functional equation bound versus |zeta(1/2+it)| enclosures."""
    from .zeta_eval import abs_zeta_half

    rng = random.Random(seed)
    failures = []
    certified = 0
    lo, hi = math.log(LEMMA3_T_MIN), math.log(t_max)
    for _ in range(samples):
        t = RInterval(math.exp(rng.uniform(lo, hi)))
        rhs = lemma3_rhs(t)
        z = abs_zeta_half(t).value
        if not rhs.hi >= z.lo:
            failures.append((t, rhs, z))
        certified += rhs.lo >= z.hi
    return BatteryResult("lemma3", samples, failures, certified)


def moments_battery(M_max: int = 10_000) -> BatteryResult:
    """Weighted moment bounds versus the exact weighted sums, M = 1..M_max."""
    failures = []
    for M, plus, minus in weighted_moments_upto(M_max):
        b_plus, b_minus = weighted_moment_bounds(M)
        if not (plus.hi <= b_plus.lo and minus.hi <= b_minus.lo):
            failures.append((M, plus, minus, b_plus, b_minus))
    return BatteryResult("moments", M_max, failures, M_max - len(failures))
