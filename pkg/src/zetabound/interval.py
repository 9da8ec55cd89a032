"""Directed-rounding real and complex interval arithmetic.

Endpoints are IEEE doubles. Every primitive is computed in round-to-nearest
and then pushed outward with ``math.nextafter``: one step for the correctly
rounded operations (``+ - * /`` and ``sqrt``), ``TRANSCENDENTAL_ULPS`` steps
for libm functions (exp, log, sin, cos, atan). The latter relies on the
documented accuracy of glibc's libm (max error <= 1 ulp on x86-64 for these
functions); two steps leave a one-ulp cushion on top of that.

Unbounded results are represented by infinite endpoints, never by raising.
Domain violations (log of a non-positive interval, ...) raise
:class:`DomainError`.
"""

from __future__ import annotations

import math
import os
from decimal import Decimal
from fractions import Fraction
from numbers import Real
from typing import Union

INF = math.inf
TRANSCENDENTAL_ULPS = 2


class DomainError(ValueError):
    """An elementary function was applied outside its domain."""


def _working_precision() -> int:
    raw = os.environ.get("ZETA_BOUND_PRECISION")
    if raw is None:
        return 53
    bits = int(raw)
    if not 24 <= bits <= 53:
        raise ValueError(f"ZETA_BOUND_PRECISION must be in [24, 53], got {bits}")
    return bits


# Results of elementary functions are widened to this relative granularity
# when the working precision is set below the native 53 bits.
PRECISION = _working_precision()
_SAFETY_REL = 0.0 if PRECISION == 53 else 2.0 ** (1 - PRECISION)

_nextafter = math.nextafter


def down(x: float, steps: int = 1) -> float:
    for _ in range(steps):
        x = _nextafter(x, -INF)
    return x


def up(x: float, steps: int = 1) -> float:
    for _ in range(steps):
        x = _nextafter(x, INF)
    return x


def _tdown(x: float) -> float:
    x = down(x, TRANSCENDENTAL_ULPS)
    if _SAFETY_REL:
        x = down(x - abs(x) * _SAFETY_REL)
    return x


def _tup(x: float) -> float:
    x = up(x, TRANSCENDENTAL_ULPS)
    if _SAFETY_REL:
        x = up(x + abs(x) * _SAFETY_REL)
    return x


def _frac_bounds(q: Fraction) -> tuple[float, float]:
    f = float(q)  # correctly rounded
    exact = Fraction(f)
    if exact == q:
        return f, f
    if exact < q:
        return f, up(f)
    return down(f), f


Number = Union[int, float, Fraction, Decimal, str]


class RInterval:
    """Closed real interval ``[lo, hi]`` with double endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float | None = None):
        lo = float(lo)
        hi = lo if hi is None else float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("NaN endpoint")
        if lo > hi:
            raise ValueError(f"empty interval [{lo!r}, {hi!r}]")
        self.lo = lo
        self.hi = hi

    # -- construction -----------------------------------------------------
    @classmethod
    def exact(cls, x: Number) -> "RInterval":
        """Tightest enclosure of the exact value of ``x``.

        Strings and Decimals are read as exact decimals, so ``"0.1"`` gives
        the two doubles around one tenth rather than the double nearest it.
        """
        if isinstance(x, RInterval):
            return x
        if isinstance(x, float):
            return cls(x, x)
        if isinstance(x, str):
            x = Decimal(x.strip())
        if isinstance(x, Decimal):
            if not x.is_finite():
                v = float(x)
                return cls(v, v)
            x = Fraction(x)
        if isinstance(x, int):
            x = Fraction(x)
        if isinstance(x, Fraction):
            return cls(*_frac_bounds(x))
        if isinstance(x, Real):
            return cls.exact(Fraction(x))
        raise TypeError(f"cannot convert {type(x).__name__} to RInterval")

    @classmethod
    def hull_of(cls, *xs: "RInterval | float") -> "RInterval":
        ivs = [as_interval(x) for x in xs]
        return cls(min(v.lo for v in ivs), max(v.hi for v in ivs))

    @classmethod
    def entire(cls) -> "RInterval":
        return cls(-INF, INF)

    # -- inspection -------------------------------------------------------
    @property
    def width(self) -> float:
        return up(self.hi - self.lo)

    @property
    def mid(self) -> float:
        if math.isinf(self.lo) or math.isinf(self.hi):
            return 0.0 if self.lo == -self.hi else (self.lo if math.isinf(self.hi) else self.hi)
        return self.lo + 0.5 * (self.hi - self.lo)

    @property
    def rad(self) -> float:
        m = self.mid
        return up(max(m - self.lo, self.hi - m))

    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> float:
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    def is_bounded(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: "RInterval | Number") -> bool:
        if isinstance(x, RInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, (float, int)):
            return self.lo <= x <= self.hi
        q = Fraction(Decimal(x)) if isinstance(x, str) else Fraction(x)
        return Fraction(self.lo) <= q <= Fraction(self.hi)

    __contains__ = contains

    def subset(self, other: "RInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other: "RInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "RInterval") -> "RInterval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("disjoint intervals")
        return RInterval(lo, hi)

    def hull(self, other: "RInterval | float") -> "RInterval":
        other = as_interval(other)
        return RInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    __or__ = hull

    # certain comparisons
    def lt(self, other: "RInterval | float") -> bool:
        return self.hi < as_interval(other).lo

    def le(self, other: "RInterval | float") -> bool:
        return self.hi <= as_interval(other).lo

    def gt(self, other: "RInterval | float") -> bool:
        return self.lo > as_interval(other).hi

    def ge(self, other: "RInterval | float") -> bool:
        return self.lo >= as_interval(other).hi

    def __eq__(self, other) -> bool:
        if not isinstance(other, RInterval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"RInterval({self.lo!r}, {self.hi!r})"

    def __str__(self) -> str:
        return f"[{self.lo:.17g}, {self.hi:.17g}]"

    def format(self, digits: int = 10) -> str:
        return f"[{self.lo:.{digits}g}, {self.hi:.{digits}g}]"

    # -- arithmetic -------------------------------------------------------
    def __neg__(self) -> "RInterval":
        return RInterval(-self.hi, -self.lo)

    def __pos__(self) -> "RInterval":
        return self

    def __add__(self, other) -> "RInterval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RInterval(_add_r(self.lo, o.lo, False), _add_r(self.hi, o.hi, True))

    __radd__ = __add__

    def __sub__(self, other) -> "RInterval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RInterval(_add_r(self.lo, -o.hi, False), _add_r(self.hi, -o.lo, True))

    def __rsub__(self, other) -> "RInterval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "RInterval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        if a >= 0.0 and c >= 0.0:
            return RInterval(_mul_lo(a, c), _mul_hi(b, d))
        if b <= 0.0 and d <= 0.0:
            return RInterval(_mul_lo(b, d), _mul_hi(a, c))
        pairs = ((a, c), (a, d), (b, c), (b, d))
        return RInterval(min(_mul_lo(x, y) for x, y in pairs), max(_mul_hi(x, y) for x, y in pairs))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RInterval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            return RInterval.entire()
        pairs = ((self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi))
        return RInterval(min(_div_r(x, y, False) for x, y in pairs), max(_div_r(x, y, True) for x, y in pairs))

    def __rtruediv__(self, other) -> "RInterval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def sqr(self) -> "RInterval":
        """Square, tighter than ``x * x`` when the interval straddles 0."""
        a, b = self.lo, self.hi
        if a >= 0.0:
            return RInterval(_mul_lo(a, a), _mul_hi(b, b))
        if b <= 0.0:
            return RInterval(_mul_lo(b, b), _mul_hi(a, a))
        return RInterval(0.0, max(_mul_hi(a, a), _mul_hi(b, b)))

    def __pow__(self, n) -> "RInterval":
        if isinstance(n, int):
            if n == 0:
                return RInterval(1.0)
            if n < 0:
                return RInterval(1.0) / (self ** (-n))
            result = None
            base = self
            while n:
                if n & 1:
                    result = base if result is None else result * base
                n >>= 1
                if n:
                    base = base.sqr()
            return result
        return pow_(self, n)

    def __abs__(self) -> "RInterval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return -self
        return RInterval(0.0, max(-self.lo, self.hi))


_SPLIT = 134217729.0  # 2**27 + 1
_SAFE_HI = 2.0 ** 995
_SAFE_LO = 2.0 ** -960


def _safe(*xs: float) -> bool:
    for x in xs:
        ax = abs(x)
        if ax != 0.0 and not (_SAFE_LO < ax < _SAFE_HI):
            return False
    return True


def _split(a: float) -> tuple[float, float]:
    c = _SPLIT * a
    hi = c - (c - a)
    return hi, a - hi


def _prod_err(a: float, b: float, p: float) -> float:
    """Exact ``a*b - p`` for ``p = fl(a*b)`` (Dekker), in the safe range."""
    ah, al = _split(a)
    bh, bl = _split(b)
    return ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _sum_sign(a: float, b: float, s: float) -> float:
    """Sign of the exact error ``a + b - s`` (Knuth TwoSum)."""
    bb = s - a
    return (a - (s - bb)) + (b - bb)


def _dir(s: float, err: float, upward: bool) -> float:
    if err == 0.0:
        return s
    if upward:
        return s if err < 0.0 else up(s)
    return s if err > 0.0 else down(s)


def _add_r(a: float, b: float, upward: bool) -> float:
    s = a + b
    if math.isinf(s) or math.isnan(s):
        if math.isinf(a) or math.isinf(b):
            return s
        return s if (s > 0) == upward else (down(s) if upward is False else up(s))
    return _dir(s, _sum_sign(a, b, s), upward)


def _mul_r(a: float, b: float, upward: bool) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if math.isinf(p):
        if math.isinf(a) or math.isinf(b):
            return p
        return p if (p > 0) == upward else (down(p) if not upward else up(p))
    if p != 0.0 and _safe(a, b, p):
        return _dir(p, _prod_err(a, b, p), upward)
    return up(p) if upward else down(p)


def _div_r(a: float, b: float, upward: bool) -> float:
    if a == 0.0:
        return 0.0
    if math.isinf(b):
        return 0.0 if not math.isinf(a) else math.copysign(INF, a) * math.copysign(1.0, b)
    q = a / b
    if math.isinf(q):
        if math.isinf(a):
            return q
        return q if (q > 0) == upward else (down(q) if not upward else up(q))
    if q != 0.0 and _safe(a, b, q):
        p = q * b
        if _safe(p):
            e = _prod_err(q, b, p)
            r = (a - p) - e  # sign of a - q*b (a - p is exact by Sterbenz)
            if r == 0.0:
                return q
            if (r > 0.0) == (b > 0.0):  # exact quotient above q
                return up(q) if upward else q
            return q if upward else down(q)
    return up(q) if upward else down(q)


def _mul_lo(x: float, y: float) -> float:
    return _mul_r(x, y, False)


def _mul_hi(x: float, y: float) -> float:
    return _mul_r(x, y, True)


def _coerce(x) -> RInterval | None:
    if isinstance(x, RInterval):
        return x
    if isinstance(x, float):
        return RInterval(x, x)
    if isinstance(x, (int, Fraction, Decimal)):
        return RInterval.exact(x)
    return None


def as_interval(x) -> RInterval:
    """Coerce numbers (exactly) or pass intervals through."""
    if isinstance(x, RInterval):
        return x
    if isinstance(x, (float, int, Fraction, Decimal, str)):
        return RInterval.exact(x)
    raise TypeError(f"cannot convert {type(x).__name__} to RInterval")


# -- constants ------------------------------------------------------------
# math.pi < pi < nextafter(math.pi, inf)
PI = RInterval(math.pi, up(math.pi))
TWO_PI = PI * 2
HALF_PI = PI * 0.5
LOG2 = RInterval(down(math.log(2.0)), up(math.log(2.0)))


# -- elementary functions -------------------------------------------------
def exp(x: RInterval) -> RInterval:
    x = as_interval(x)
    lo = 0.0 if x.lo == -INF else (1.0 if x.lo == 0.0 else max(0.0, _tdown(_safe_exp(x.lo))))
    hi = 1.0 if x.hi == 0.0 else _tup(_safe_exp(x.hi))
    # exp is below 1 left of 0 and above 1 right of it
    if x.hi < 0.0:
        hi = min(hi, 1.0)
    if x.lo > 0.0:
        lo = max(lo, 1.0)
    return RInterval(lo, hi)


def _safe_exp(v: float) -> float:
    try:
        return math.exp(v)
    except OverflowError:
        return INF


def log(x: RInterval) -> RInterval:
    x = as_interval(x)
    if x.lo <= 0.0:
        raise DomainError(f"log of interval with non-positive part {x}")
    lo = 0.0 if x.lo == 1.0 else _tdown(math.log(x.lo))
    hi = 0.0 if x.hi == 1.0 else (INF if x.hi == INF else _tup(math.log(x.hi)))
    if x.hi < 1.0:
        hi = min(hi, 0.0)
    if x.lo > 1.0:
        lo = max(lo, 0.0)
    return RInterval(lo, hi)


def sqrt(x: RInterval) -> RInterval:
    x = as_interval(x)
    if x.lo < 0.0:
        raise DomainError(f"sqrt of interval with negative part {x}")
    return RInterval(_sqrt_r(x.lo, False), _sqrt_r(x.hi, True))


def _sqrt_r(v: float, upward: bool) -> float:
    r = math.sqrt(v)
    if r == 0.0 or math.isinf(r):
        return r
    if _safe(r, v):
        p = r * r
        if _safe(p):
            diff = (v - p) - _prod_err(r, r, p)  # sign of v - r*r
            return _dir(r, diff, upward)
    return up(r) if upward else down(r)


def pow_(x: RInterval, y) -> RInterval:
    """``x ** y`` for a positive base and real (interval) exponent."""
    x = as_interval(x)
    y = as_interval(y)
    if x.lo <= 0.0:
        if x.lo == 0.0 and y.lo > 0.0:
            if x.hi == 0.0:
                return RInterval(0.0)
            upper = exp(y * log(RInterval(x.hi)))
            lower = exp(y * log(RInterval(min(x.hi, 1.0))))
            return RInterval(0.0, max(upper.hi, lower.hi))
        raise DomainError(f"pow with non-positive base {x}")
    return exp(y * log(x))


def _quarter_turns(x: RInterval) -> tuple[int, int]:
    """Conservative range of integers k with k*pi/2 possibly in x."""
    q = x / HALF_PI
    return math.ceil(q.lo), math.floor(q.hi)


def _trig(x: RInterval, fn, phase: int) -> RInterval:
    # phase: 0 for cos (max at k*2pi), 1 for sin (max at pi/2 + 2k pi)
    if not x.is_bounded() or x.hi - x.lo >= 6.3:
        return RInterval(-1.0, 1.0)
    ka, kb = _quarter_turns(x)
    a, b = fn(x.lo), fn(x.hi)
    lo = max(-1.0, _tdown(min(a, b)))
    hi = min(1.0, _tup(max(a, b)))
    for k in range(ka, kb + 1):
        m = (k - phase) % 4
        if m == 0:
            hi = 1.0
        elif m == 2:
            lo = -1.0
    return RInterval(lo, hi)


def cos(x: RInterval) -> RInterval:
    x = as_interval(x)
    if x.lo == 0.0 and x.hi == 0.0:
        return RInterval(1.0)
    return _trig(x, math.cos, 0)


def sin(x: RInterval) -> RInterval:
    x = as_interval(x)
    if x.lo == 0.0 and x.hi == 0.0:
        return RInterval(0.0)
    return _trig(x, math.sin, 1)


def atan(x: RInterval) -> RInterval:
    x = as_interval(x)
    lo = 0.0 if x.lo == 0.0 else max(-PI.hi / 2, _tdown(math.atan(x.lo)))
    hi = 0.0 if x.hi == 0.0 else min(PI.hi / 2, _tup(math.atan(x.hi)))
    if x.hi < 0.0:
        hi = min(hi, 0.0)
    if x.lo > 0.0:
        lo = max(lo, 0.0)
    return RInterval(lo, hi)


def sinc(x: RInterval) -> RInterval:
    """``sin(x)/x`` with ``sinc(0) = 1``, for ``|x| <= pi``.

    sinc is even and decreasing on [0, pi], so the enclosure comes from the
    point values at ``mig(x)`` and ``mag(x)``.
    """
    x = as_interval(x)
    if x.mag() > PI.lo:
        raise DomainError(f"sinc enclosure implemented for |x| <= pi only, got {x}")
    return RInterval(_sinc_point(x.mag()).lo, _sinc_point(x.mig()).hi)


def _sinc_point(v: float) -> RInterval:
    if v == 0.0:
        return RInterval(1.0)
    if v >= 0.5:
        xv = RInterval(v)
        return sin(xv) / xv
    # alternating series; terms decrease for |x| < 1, so the remainder is below
    # the first omitted term x^20/21!
    x2 = RInterval(v).sqr()
    acc = RInterval(0.0)
    term = RInterval(1.0)
    for j in range(10):
        acc = acc + term if j % 2 == 0 else acc - term
        term = term * x2 / ((2 * j + 2) * (2 * j + 3))
    return acc + RInterval(-term.hi, term.hi)


def sinc_derivative(x: RInterval, k: int) -> RInterval:
    """k-th derivative of sinc, enclosed from its Taylor series at 0.

    Valid for |x| <= 4. The series sum_j (-1)^j x^(2j-k) (2j)!/((2j-k)!(2j+1)!)
    converges everywhere; the tail is bounded by a geometric majorant once the
    term ratio drops below 1/2.
    """
    x = as_interval(x)
    if k == 0:
        return sinc(x)
    r = x.mag()
    if r > 4.0:
        raise DomainError("sinc_derivative implemented for |x| <= 4")
    acc = RInterval(0.0)
    j = (k + 1) // 2
    jmax = j + 40
    while j <= jmax:
        c = Fraction(math.factorial(2 * j), math.factorial(2 * j - k) * math.factorial(2 * j + 1))
        term = RInterval.exact(c) * (x ** (2 * j - k))
        acc = acc + term if j % 2 == 0 else acc - term
        j += 1
    # tail majorant: |term_j| <= r^n/n! with n = 2j - k, and the ratio of
    # consecutive majorants r^2/((n+1)(n+2)) is below 1/2 here
    n = 2 * j - k
    first = RInterval.exact(Fraction(1, math.factorial(n))) * RInterval(r) ** n
    tail = first * 2.0
    return acc + RInterval(-tail.hi, tail.hi)


class CInterval:
    """Rectangular complex interval ``re + i*im``."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0.0):
        self.re = as_interval(re)
        self.im = as_interval(im)

    @classmethod
    def exact(cls, re: Number, im: Number = 0) -> "CInterval":
        return cls(RInterval.exact(re), RInterval.exact(im))

    def __repr__(self) -> str:
        return f"CInterval({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        return f"{self.re} + i{self.im}"

    def contains(self, z) -> bool:
        if isinstance(z, CInterval):
            return self.re.contains(z.re) and self.im.contains(z.im)
        z = complex(z)
        return self.re.contains(z.real) and self.im.contains(z.imag)

    __contains__ = contains

    def overlaps(self, other: "CInterval") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def hull(self, other: "CInterval") -> "CInterval":
        return CInterval(self.re | other.re, self.im | other.im)

    def __neg__(self) -> "CInterval":
        return CInterval(-self.re, -self.im)

    def conj(self) -> "CInterval":
        return CInterval(self.re, -self.im)

    def __add__(self, other) -> "CInterval":
        o = _ccoerce(other)
        if o is None:
            return NotImplemented
        return CInterval(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "CInterval":
        o = _ccoerce(other)
        if o is None:
            return NotImplemented
        return CInterval(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "CInterval":
        o = _ccoerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "CInterval":
        if isinstance(other, (RInterval, float, int)):
            o = as_interval(other)
            return CInterval(self.re * o, self.im * o)
        o = _ccoerce(other)
        if o is None:
            return NotImplemented
        return CInterval(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CInterval":
        if isinstance(other, (RInterval, float, int)):
            o = as_interval(other)
            return CInterval(self.re / o, self.im / o)
        o = _ccoerce(other)
        if o is None:
            return NotImplemented
        den = o.re.sqr() + o.im.sqr()
        num = self * o.conj()
        return CInterval(num.re / den, num.im / den)

    def __rtruediv__(self, other) -> "CInterval":
        o = _ccoerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def abs2(self) -> RInterval:
        return self.re.sqr() + self.im.sqr()


def _ccoerce(x) -> CInterval | None:
    if isinstance(x, CInterval):
        return x
    if isinstance(x, complex):
        return CInterval(RInterval(x.real), RInterval(x.imag))
    r = _coerce(x)
    return None if r is None else CInterval(r, RInterval(0.0))


def cabs(z: CInterval) -> RInterval:
    """Enclosure of ``{|w| : w in z}``; the lower end is 0 when z contains 0."""
    return sqrt(z.re.sqr() + z.im.sqr())


def cexp_i(phase: RInterval) -> CInterval:
    """``exp(i*phase)`` for a real interval phase."""
    return CInterval(cos(phase), sin(phase))


def cpow_neg(n: RInterval, s: CInterval) -> CInterval:
    """``n**(-s)`` for a positive real base ``n``."""
    ln = log(n)
    mod = exp(-(s.re * ln))
    return cexp_i(-(s.im * ln)) * mod
