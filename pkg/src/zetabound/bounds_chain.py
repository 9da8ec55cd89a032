"""Explicit constants for |zeta(1/2+it)| <= D1 t^(1/6) log t + ... for t >= t0.

Given (k, theta, A0, t0) the chain Y0, A1..A8, B1..B4, C1..C5, D1..D5 is
computed in interval arithmetic. ``verify_large_t`` turns the five-term bound
into a certified constant for the ratio to t^(1/6) log t on [t0, inf).
``check_block_bound`` and ``partial_summation_check`` compare the
intermediate estimates with directly summed exponential sums.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path

from .interval import (
    PI,
    TWO_PI,
    CInterval,
    RInterval,
    as_interval,
    cabs,
    cexp_i,
    exp,
    log,
    sqrt,
)

# Halved error constants of the approximate functional equation, as they
# enter D5.
D5_C1 = Fraction("0.77")
D5_C2 = Fraction("1.62")

_ONE = RInterval(1.0)
_THIRD = RInterval.exact(Fraction(1, 3))
_SIXTH = RInterval.exact(Fraction(1, 6))
_TWELFTH = RInterval.exact(Fraction(1, 12))


def _exact(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x)
    return Fraction(str(x).strip())


def fraction_text(x: Fraction) -> str:
    """Shortest exact text: a terminating decimal when possible, else p/q."""
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    places = max(twos, fives)
    scaled = x * 10**places
    digits = str(abs(scaled.numerator)).rjust(places + 1, "0")
    sign = "-" if x < 0 else ""
    text = digits if places == 0 else f"{digits[:-places]}.{digits[-places:]}".rstrip("0").rstrip(".")
    return sign + text


@dataclass(frozen=True)
class BoundParams:
    """The parameters (k, theta, A0, t0), held as exact rationals."""

    k: Fraction
    theta: Fraction
    a0: Fraction
    t0: Fraction

    def __init__(self, k, theta, a0, t0):
        object.__setattr__(self, "k", _exact(k))
        object.__setattr__(self, "theta", _exact(theta))
        object.__setattr__(self, "a0", _exact(a0))
        object.__setattr__(self, "t0", _exact(t0))

    def intervals(self) -> tuple[RInterval, RInterval, RInterval, RInterval]:
        return tuple(RInterval.exact(v) for v in (self.k, self.theta, self.a0, self.t0))

    def to_text(self) -> str:
        return "".join(f"{name} = {fraction_text(getattr(self, attr))}\n" for name, attr in _KEYS)

    @classmethod
    def from_text(cls, text: str) -> "BoundParams":
        values: dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip().lower()
            if not sep or key not in dict(_KEYS):
                raise ValueError(f"line {lineno}: expected 'key = value' with key in k, theta, a0, t0")
            values[dict(_KEYS)[key]] = value.strip()
        missing = [name for name, attr in _KEYS if attr not in values]
        if missing:
            raise ValueError(f"missing parameter(s): {', '.join(missing)}")
        return cls(**values)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text())

    @classmethod
    def load(cls, path: str | Path) -> "BoundParams":
        return cls.from_text(Path(path).read_text())


_KEYS = (("k", "k"), ("theta", "theta"), ("a0", "a0"), ("t0", "t0"))

PAPER_PARAMS = BoundParams("1.16", "7.5", "3.37", "5.867e9")


@dataclass(frozen=True)
class Condition:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class FeasibilityReport:
    conditions: tuple[Condition, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def failed(self) -> list[Condition]:
        return [c for c in self.conditions if not c.passed]

    def __str__(self) -> str:
        return "\n".join(f"{'ok  ' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in self.conditions)


def con1_threshold(a0) -> RInterval:
    """A0^6 (2 pi)^3; t0 must exceed this for the long sum to be non-empty."""
    return as_interval(a0) ** 6 * TWO_PI ** 3


def feasibility(p: BoundParams) -> FeasibilityReport:
    """Side conditions of the derivation, each checked rigorously."""
    k, theta, a0, t0 = p.intervals()
    conds = [
        Condition("k > 1", k.lo > 1.0, f"k = {k}"),
        Condition("theta > 0", theta.lo > 0.0, f"theta = {theta}"),
        Condition("A0 > 0", a0.lo > 0.0, f"A0 = {a0}"),
        Condition("k*theta >= 1", (k * theta).lo >= 1.0, f"k*theta = {k * theta}"),
    ]
    if conds[2].passed:
        thr = con1_threshold(a0)
        conds.append(Condition("t0 > A0^6 (2pi)^3", t0.lo > thr.hi, f"A0^6 (2pi)^3 = {thr}, t0 = {t0}"))
    else:
        conds.append(Condition("t0 > A0^6 (2pi)^3", False, "A0 not positive"))
    if conds[0].passed:
        sk = sqrt(k)
        conds.append(Condition("log k > 0", log(k).lo > 0.0, f"log k = {log(k)}"))
        conds.append(Condition("sqrt(k) - 1 > 0", (sk - 1.0).lo > 0.0, f"sqrt(k) - 1 = {sk - 1.0}"))
    return FeasibilityReport(tuple(conds))


class InfeasibleParams(ValueError):
    def __init__(self, report: FeasibilityReport):
        self.report = report
        names = ", ".join(c.name for c in report.failed())
        super().__init__(f"infeasible parameters: {names}")


@dataclass(frozen=True)
class ConstantsChain:
    Y0: RInterval
    A1: RInterval
    A2: RInterval
    A3: RInterval
    A4: RInterval
    A5: RInterval
    A6: RInterval
    A7: RInterval
    A8: RInterval
    B1: RInterval
    B2: RInterval
    B3: RInterval
    B4: RInterval
    C1: RInterval
    C2: RInterval
    C3: RInterval
    C4: RInterval
    C5: RInterval
    D1: RInterval
    D2: RInterval
    D3: RInterval
    D4: RInterval
    D5: RInterval
    params: BoundParams | None = field(default=None, compare=False)

    @property
    def D(self) -> tuple[RInterval, ...]:
        return (self.D1, self.D2, self.D3, self.D4, self.D5)

    def items(self):
        for f in fields(self):
            if f.name != "params":
                yield f.name, getattr(self, f.name)

    def format(self, digits: int = 10) -> str:
        return "\n".join(f"{name} = {value.format(digits)}" for name, value in self.items())


def compute_chain(p: BoundParams) -> ConstantsChain:
    """All derived constants as enclosures; C3 and C5 keep their sign."""
    report = feasibility(p)
    if not report.passed:
        raise InfeasibleParams(report)
    k, theta, a0, t0 = p.intervals()
    t0_third = exp(log(t0) * _THIRD)
    sqrt2 = sqrt(RInterval(2.0))
    sqrt_a0 = sqrt(a0)
    km1 = k - 1.0
    a0t = a0 * t0_third  # A0 t0^(1/3)

    Y0 = _ONE + theta / a0t
    A1 = sqrt2 * 2.0 * km1 * k.sqr() * Y0 / (PI * sqrt_a0)
    A2 = km1 * k.sqr() * 2.0 / (PI * a0.sqr())
    A3 = sqrt2 * 2.0 * a0 * sqrt_a0 * Y0
    u = _ONE / (km1 * a0t)  # 1/((k-1) A0 t0^(1/3))
    v = theta * k / (km1 * a0t)  # theta k/((k-1) A0 t0^(1/3))
    A4 = km1.sqr() * a0.sqr() / (k.sqr() * theta) * (_ONE + u) * (_ONE + v)
    A5 = km1 * a0 * 2.0 / k * (_ONE + u + v)
    g = _ONE + _ONE / (k * theta)
    A6 = RInterval.exact(Fraction(4, 15)) * A1 * sqrt(theta) * sqrt(g)
    A7 = A2 * theta / 6.0 * g
    A8 = A3 * 4.0 / (sqrt(theta) * 3.0)

    B1 = A4 + A5 * A6
    B2 = A5 * A7
    B3 = A5 * 1.5
    B4 = A5 * A8

    logk = log(k)
    sk = sqrt(k)
    inv_sk = _ONE / sk
    two_pi_quarter = exp(log(TWO_PI) * 0.25)
    log_a0_2pi = log(a0 * sqrt(TWO_PI))
    sB1, sB2, sB3, sB4 = sqrt(B1), sqrt(B2), sqrt(B3), sqrt(B4)
    C1 = sB1 / (logk * 6.0)
    C2 = sB1 * (_ONE - log_a0_2pi / logk) + sB2 * inv_sk / (_ONE - inv_sk)
    C3 = sB4 * k / (sqrt_a0 * two_pi_quarter * (sk - 1.0)) - sB2 * sqrt_a0 * two_pi_quarter / (k * (_ONE - inv_sk))
    C4 = sB3 / (logk * 6.0)
    C5 = sB3 * (_ONE - log_a0_2pi / logk) - sB4 * sk / (sk - 1.0)

    r = sqrt(k / a0)
    D1 = C1 * r * 2.0
    D2 = (sqrt_a0 * 2.0 + C2 * r) * 2.0
    D3 = C3 * r * 2.0
    D4 = C4 * r * 2.0
    lt0 = log(t0)
    D5 = (
        C5 * r
        - 1.0
        + RInterval.exact(D5_C1) * exp(lt0 * -0.25)
        + RInterval.exact(D5_C2) * exp(lt0 * -0.75)
    ) * 2.0
    return ConstantsChain(
        Y0, A1, A2, A3, A4, A5, A6, A7, A8, B1, B2, B3, B4, C1, C2, C3, C4, C5, D1, D2, D3, D4, D5, params=p
    )


def chain_from_d(D1, D2=0, D3=0, D4=0, D5=0) -> ConstantsChain:
    """A chain carrying only D1..D5 (other slots empty), for ratio checks."""
    z = RInterval(0.0)
    d = [as_interval(x) for x in (D1, D2, D3, D4, D5)]
    return ConstantsChain(*([z] * 18), *d)


def _powers(t: RInterval) -> tuple[RInterval, RInterval, RInterval]:
    lt = log(t)
    return lt, exp(lt * _SIXTH), exp(lt * _TWELFTH)


def theorem_bound_at(c: ConstantsChain, t) -> RInterval:
    """D1 t^(1/6) log t + D2 t^(1/6) + D3 t^(1/12) + D4 log t + D5."""
    t = as_interval(t)
    if t.lo < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    lt, t6, t12 = _powers(t)
    return c.D1 * t6 * lt + c.D2 * t6 + c.D3 * t12 + c.D4 * lt + c.D5


@dataclass(frozen=True)
class RatioTerm:
    name: str
    coefficient: RInterval
    factor_at_t0: RInterval
    contribution: float  # rigorous upper bound of the term's supremum on [t0, inf)


@dataclass(frozen=True)
class LargeTReport:
    target: float
    t0: RInterval
    terms: tuple[RatioTerm, ...]
    sup_bound: float
    feasibility: FeasibilityReport | None = None

    @property
    def passed(self) -> bool:
        return self.sup_bound <= self.target and (self.feasibility is None or self.feasibility.passed)

    def format(self, digits: int = 10) -> str:
        lines = [f"t0 = {self.t0.format(digits)}"]
        for term in self.terms:
            lines.append(
                f"{term.name}: coefficient {term.coefficient.format(digits)}, "
                f"sup contribution <= {term.contribution:.{digits}g}"
            )
        lines.append(f"sup_(t>=t0) bound/(t^(1/6) log t) <= {self.sup_bound:.{digits}g}")
        lines.append(f"target {self.target:.{digits}g}: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def ratio_sup_bound(c: ConstantsChain, t0, target: float = math.inf) -> LargeTReport:
    """Certified upper bound of the five-term bound over t^(1/6) log t, t >= t0.

    The ratio is D1 + D2/log t + D3/(t^(1/12) log t) + D4/t^(1/6) + D5/(t^(1/6) log t).
    Every factor multiplying D2..D5 is positive and decreasing for t > 1, so a
    positive coefficient contributes at most its value at t0 and a negative
    one at most 0.
    """
    t0 = as_interval(t0)
    if t0.lo <= 1.0:
        raise ValueError("t0 must exceed 1 for the monotonicity argument")
    lt, t6, t12 = _powers(t0)
    factors = (
        ("D1", c.D1, _ONE),
        ("D2/log t", c.D2, _ONE / lt),
        ("D3/(t^(1/12) log t)", c.D3, _ONE / (t12 * lt)),
        ("D4/t^(1/6)", c.D4, _ONE / t6),
        ("D5/(t^(1/6) log t)", c.D5, _ONE / (t6 * lt)),
    )
    terms = []
    total = RInterval(0.0)
    for i, (name, coef, fac) in enumerate(factors):
        if i == 0:
            contrib = coef.hi
        elif coef.hi <= 0.0:
            contrib = 0.0
        else:
            contrib = (RInterval(coef.hi) * RInterval(fac.hi)).hi
        terms.append(RatioTerm(name, coef, fac, contrib))
        total = total + RInterval(contrib)
    return LargeTReport(float(target), t0, tuple(terms), total.hi)


def verify_large_t(p: BoundParams, target) -> LargeTReport:
    """Certify sup_{t >= t0} bound(t)/(t^(1/6) log t) <= target."""
    report = feasibility(p)
    target = float(as_interval(target).lo)  # conservative reading of the target
    if not report.passed:
        return LargeTReport(target, RInterval.exact(p.t0), (), math.inf, report)
    c = compute_chain(p)
    r = ratio_sup_bound(c, RInterval.exact(p.t0), target)
    return LargeTReport(target, r.t0, r.terms, r.sup_bound, report)


# -- dyadic blocks ------------------------------------------------------------


@dataclass(frozen=True)
class DyadicBlock:
    j: int
    X: RInterval  # A0 k^j t^(1/3)
    N_prev: int
    N: int
    M: int  # floor(k^j theta) + 1

    @property
    def L_max(self) -> int:
        return self.N - self.N_prev


def _floor_certain(x: RInterval) -> int:
    lo, hi = math.floor(x.lo), math.floor(x.hi)
    if lo != hi:
        raise ArithmeticError(f"integer part of {x} is not determined")
    return lo


def _floor_cbrt(q: Fraction) -> int:
    """floor(q^(1/3)) for rational q >= 0, exactly."""
    n = math.floor(float(q) ** (1.0 / 3.0))
    while n > 0 and Fraction(n) ** 3 > q:
        n -= 1
    while Fraction(n + 1) ** 3 <= q:
        n += 1
    return n


def dyadic_blocks(p: BoundParams, t) -> list[DyadicBlock]:
    """Blocks j = 1..J: N_{j-1} < N_j and X_{j-1} < sqrt(t/2pi).

    N_j = floor(A0 k^j t^(1/3)) and M are computed exactly from the rational
    parameters and t.
    """
    k, _, a0, _ = p.intervals()
    t_exact = _exact(t)
    t = RInterval.exact(t_exact)
    x0 = a0 * exp(log(t) * _THIRD)
    limit = sqrt(t / TWO_PI)
    blocks = []
    x_prev = x0
    n_prev = _floor_cbrt(p.a0**3 * t_exact)
    j = 0
    while True:
        if x_prev.lo >= limit.hi:
            break
        if not x_prev.hi < limit.lo:
            raise ArithmeticError(f"cannot decide X_{j} < sqrt(t/2pi) at t = {t}")
        j += 1
        x = x0 * k**j
        n = _floor_cbrt(p.a0**3 * p.k ** (3 * j) * t_exact)
        if n <= n_prev:
            break
        blocks.append(DyadicBlock(j, x, n_prev, n, math.floor(p.k**j * p.theta) + 1))
        x_prev, n_prev = x, n
    return blocks


def j_upper_bound(p: BoundParams, t) -> RInterval:
    """(log(t)/6 - log(A0 sqrt(2pi)))/log k + 1."""
    k, _, a0, _ = p.intervals()
    t = as_interval(t)
    return (log(t) * _SIXTH - log(a0 * sqrt(TWO_PI))) / log(k) + 1.0


def block_sum_max(t: RInterval, N_prev: int, L: int) -> RInterval:
    """Enclosure of max over l <= L of |sum_{n=N_prev+1}^{N_prev+l} e^{-it log n}|."""
    acc = CInterval(RInterval(0.0), RInterval(0.0))
    best_lo = best_hi = 0.0
    for n in range(N_prev + 1, N_prev + L + 1):
        acc = acc + cexp_i(-(t * log(RInterval(float(n)))))
        a = cabs(acc)
        best_lo = max(best_lo, a.lo)
        best_hi = max(best_hi, a.hi)
    return RInterval(best_lo, best_hi)


@dataclass(frozen=True)
class BlockCheck:
    block: DyadicBlock
    s_squared: RInterval
    bound: RInterval

    @property
    def passed(self) -> bool:
        return self.s_squared.hi <= self.bound.lo


@dataclass(frozen=True)
class BlockReport:
    t: RInterval
    checks: tuple[BlockCheck, ...]
    j_bound: RInterval | None = None
    skipped: str = ""

    @property
    def passed(self) -> bool:
        j_ok = self.j_bound is None or not self.checks or len(self.checks) <= self.j_bound.hi
        return all(c.passed for c in self.checks) and j_ok

    def format(self, digits: int = 8) -> str:
        if self.skipped:
            return f"t = {self.t}: {self.skipped}"
        lines = []
        for c in self.checks:
            b = c.block
            lines.append(
                f"t = {self.t} j = {b.j} N = ({b.N_prev}, {b.N}] M = {b.M}: "
                f"|S_j|^2 <= {c.s_squared.hi:.{digits}g} vs bound {c.bound.lo:.{digits}g} "
                f"{'ok' if c.passed else 'FAIL'}"
            )
        return "\n".join(lines)


def block_bound_form(c: ConstantsChain, k: RInterval, t: RInterval, j: int) -> RInterval:
    """B1 k^j t^(2/3) + B2 t^(2/3) + B3 k^j t^(1/3) + B4 k^(2j) t^(1/3)."""
    t3 = exp(log(t) * _THIRD)
    t23 = t3.sqr()
    kj = k ** j
    return c.B1 * kj * t23 + c.B2 * t23 + c.B3 * kj * t3 + c.B4 * kj.sqr() * t3


def _local_params(p: BoundParams, t) -> BoundParams:
    # the chain constants are valid for t >= t0; evaluate them with t0 = t
    return BoundParams(p.k, p.theta, p.a0, _exact(t))


def check_block_bound(p: BoundParams, t, j: int | None = None) -> BlockReport:
    """Direct |S_j|^2 against the B-form at a single t, for block j or all blocks.

    The chain is recomputed with t0 = t, the smallest t0 for which the
    estimate is claimed at this t.
    """
    t_int = RInterval.exact(_exact(t))
    lp = _local_params(p, t)
    if not feasibility(lp).passed:
        return BlockReport(t_int, (), None, "no valid blocks (t <= A0^6 (2pi)^3)")
    chain = compute_chain(lp)
    k = RInterval.exact(p.k)
    blocks = dyadic_blocks(p, _exact(t))
    if j is not None:
        blocks = [b for b in blocks if b.j == j]
        if not blocks:
            return BlockReport(t_int, (), None, f"block {j} is empty or beyond J")
    checks = []
    for b in blocks:
        s = block_sum_max(t_int, b.N_prev, b.L_max).sqr()
        checks.append(BlockCheck(b, s, block_bound_form(chain, k, t_int, b.j)))
    return BlockReport(t_int, tuple(checks), j_upper_bound(p, t_int))


@dataclass(frozen=True)
class PartialSummationCheck:
    t: RInterval
    direct: RInterval
    bound: RInterval

    @property
    def passed(self) -> bool:
        return self.direct.hi <= self.bound.lo


def partial_summation_check(p: BoundParams, t) -> PartialSummationCheck:
    """|sum_{A0 t^(1/3) < n <= sqrt(t/2pi)} n^(-1/2-it)| versus sum_j X_{j-1}^(-1/2) max_L |S_j|."""
    t_exact = _exact(t)
    t = RInterval.exact(t_exact)
    k, _, a0, _ = p.intervals()
    blocks = dyadic_blocks(p, t_exact)
    n_end = _floor_certain(sqrt(t / TWO_PI))
    n_start = _floor_cbrt(p.a0**3 * _exact(t.lo)) + 1
    acc = CInterval(RInterval(0.0), RInterval(0.0))
    for n in range(n_start, n_end + 1):
        ln = log(RInterval(float(n)))
        acc = acc + cexp_i(-(t * ln)) * exp(ln * -0.5)
    bound = RInterval(0.0)
    x_prev = a0 * exp(log(t) * _THIRD)
    for b in blocks:
        bound = bound + block_sum_max(t, b.N_prev, b.L_max) / sqrt(x_prev)
        x_prev = b.X
    return PartialSummationCheck(t, cabs(acc), bound)


def trivial_sum_check(x: float) -> tuple[RInterval, RInterval]:
    """(sum_{n <= x} n^(-1/2), 2 sqrt(x) - 1), both enclosed."""
    acc = RInterval(0.0)
    for n in range(1, math.floor(x) + 1):
        acc = acc + _ONE / sqrt(RInterval(float(n)))
    return acc, sqrt(RInterval(x)) * 2.0 - 1.0


# -- parameter search -----------------------------------------------------------


@dataclass(frozen=True)
class OptimizeResult:
    params: BoundParams
    constant: float
    evaluated: int
    target: float | None = None

    @property
    def passed(self) -> bool:
        """True when no target was given or the certified constant meets it."""
        return self.target is None or self.constant <= self.target


class NoFeasiblePoint(ValueError):
    pass


def _objective(point: tuple[Fraction, Fraction, Fraction], t0: Fraction) -> float:
    k, theta, a0 = point
    r = verify_large_t(BoundParams(k, theta, a0, t0), math.inf)
    return r.sup_bound


def _axis(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    if lo == hi or n <= 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _round_fraction(x: Fraction, digits: int) -> Fraction:
    scale = 10**digits
    return Fraction(round(x * scale), scale)


def optimize_params(
    box: dict[str, tuple],
    t0,
    target=None,
    grid: int = 7,
    rounds: int = 4,
    digits: int = 6,
    workers: int = 1,
) -> OptimizeResult:
    """Grid search with local refinement minimizing the certified constant.

    ``box`` maps "k", "theta", "a0" to (lo, hi). Each round evaluates a
    ``grid``^3 lattice, then shrinks the box around the best point. Candidate
    points are rounded to ``digits`` decimals so the result is a short
    decimal; ties go to the lexicographically smallest (k, theta, a0).
    """
    t0 = _exact(t0)
    ranges = []
    for key in ("k", "theta", "a0"):
        lo, hi = (_exact(v) for v in box[key])
        if lo > hi:
            raise ValueError(f"empty range for {key}: {lo} > {hi}")
        ranges.append((lo, hi))
    seen: dict[tuple, float] = {}
    best: tuple[float, tuple] | None = None
    for _ in range(rounds):
        axes = [sorted({_round_fraction(v, digits) for v in _axis(lo, hi, grid)}) for lo, hi in ranges]
        axes = [[v for v in ax if lo <= v <= hi] or [lo] for ax, (lo, hi) in zip(axes, ranges)]
        todo = [pt for pt in itertools.product(*axes) if pt not in seen]
        for pt, val in zip(todo, _evaluate_all(todo, t0, workers)):
            seen[pt] = val
        for pt in itertools.product(*axes):
            cand = (seen[pt], pt)
            if math.isfinite(cand[0]) and (best is None or cand < best):
                best = cand
        if best is None:
            break
        ranges = [
            (max(lo, c - (hi - lo) / (grid - 1 if grid > 1 else 1)), min(hi, c + (hi - lo) / (grid - 1 if grid > 1 else 1)))
            for c, (lo, hi) in zip(best[1], ranges)
        ]
    if best is None:
        raise NoFeasiblePoint("no feasible parameter point in the box")
    k, theta, a0 = best[1]
    goal = None if target is None else float(as_interval(_exact(target)).lo)
    return OptimizeResult(BoundParams(k, theta, a0, t0), best[0], len(seen), goal)


def _evaluate_all(points, t0: Fraction, workers: int) -> list[float]:
    if workers <= 1 or len(points) < 2:
        return [_objective(pt, t0) for pt in points]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_objective, points, [t0] * len(points), chunksize=8))
