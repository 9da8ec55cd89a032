import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetabound import interval as iv
from zetabound.interval import CInterval, DomainError, RInterval, cabs

import _fuzz


def test_add_exact():
    r = RInterval(1, 2) + RInterval(3, 4)
    assert (r.lo, r.hi) == (4.0, 6.0)


def test_mul_sign_cases():
    r = RInterval(-1, 2) * RInterval(3, 4)
    assert (r.lo, r.hi) == (-4.0, 8.0)


def test_third_is_strictly_enclosed():
    r = RInterval(1.0) / RInterval(3.0)
    third = Fraction(1, 3)
    assert Fraction(r.lo) < third < Fraction(r.hi)


def test_division_by_zero_interval_is_unbounded():
    r = RInterval(1.0) / RInterval(-1.0, 1.0)
    assert not r.is_bounded()
    assert r.lo == -math.inf and r.hi == math.inf


def test_exp_zero():
    r = iv.exp(RInterval(0.0))
    assert r.contains(1.0)
    assert r.hi - r.lo <= 2 * math.ulp(1.0)


def test_log_of_e():
    e = iv.exp(RInterval(1.0))
    assert e.contains(math.e)
    assert iv.log(e).contains(1.0)


def test_sin_catches_interior_max():
    r = iv.sin(RInterval(0.0, math.pi))
    assert r.hi >= 1.0 and r.lo <= 0.0


def test_cos_interior_min():
    r = iv.cos(RInterval(3.0, 3.5))
    assert r.lo <= -1.0


@pytest.mark.parametrize(
    "fn, arg",
    [(iv.log, RInterval(0.0, 1.0)), (iv.log, RInterval(-2.0, -1.0)), (iv.sqrt, RInterval(-1.0, 1.0))],
)
def test_domain_errors(fn, arg):
    with pytest.raises(DomainError):
        fn(arg)


def test_sqrt_at_zero():
    assert iv.sqrt(RInterval(0.0, 4.0)).contains(RInterval(0.0, 2.0))


def test_pow_nonpositive_base():
    with pytest.raises(DomainError):
        iv.pow_(RInterval(-1.0, 2.0), 0.5)


def test_exact_decimal_string():
    r = RInterval.exact("0.1")
    assert Fraction(r.lo) < Fraction(1, 10) < Fraction(r.hi)
    assert r.hi == math.nextafter(r.lo, math.inf)


def test_empty_rejected():
    with pytest.raises(ValueError):
        RInterval(2.0, 1.0)
    with pytest.raises(ValueError):
        RInterval(math.nan)


def test_overflow_gives_infinite_endpoint():
    r = iv.exp(RInterval(1000.0))
    assert r.hi == math.inf


class TestCabs:
    def test_pythagorean(self):
        assert cabs(CInterval(RInterval(3.0), RInterval(4.0))).contains(5.0)

    def test_contains_origin(self):
        r = cabs(CInterval(RInterval(-1.0, 1.0), RInterval(-1.0, 1.0)))
        assert r.lo == 0.0
        assert r.contains(math.sqrt(2))

    def test_real_axis(self):
        r = cabs(CInterval(RInterval(1.0, 2.0), RInterval(0.0)))
        assert r.lo <= 1.0 and r.hi >= 2.0
        assert r.hi - r.lo <= 1.0 + 4 * math.ulp(2.0)


def test_sinc_small_and_large():
    assert iv.sinc(RInterval(0.0)).contains(1.0)
    x = RInterval(2.5)
    assert iv.sinc(x).contains(math.sin(2.5) / 2.5)


def test_sinc_derivative_matches_mpmath():
    for k in range(5):
        for x in (0.0, 0.3, 2.0, 3.1):
            with mpmath.workdps(40):
                ref = mpmath.diff(lambda u: mpmath.sinc(u), x, k)
            r = iv.sinc_derivative(RInterval(x), k)
            assert mpmath.mpf(r.lo) - mpmath.mpf("1e-30") <= ref <= mpmath.mpf(r.hi) + mpmath.mpf("1e-30")


# -- properties ---------------------------------------------------------------

finite = st.floats(min_value=-1e12, max_value=1e12, allow_nan=False, allow_infinity=False)


@st.composite
def interval_and_point(draw):
    a, b = sorted((draw(finite), draw(finite)))
    u = draw(st.floats(0.0, 1.0))
    x = min(b, max(a, a + (b - a) * u))
    return RInterval(a, b), x


@settings(max_examples=300, deadline=None)
@given(interval_and_point(), interval_and_point())
def test_arith_containment(p, q):
    def inside(r, v):
        lo = -math.inf if r.lo == -math.inf else Fraction(r.lo)
        hi = math.inf if r.hi == math.inf else Fraction(r.hi)
        return lo <= v <= hi

    (a, x), (b, y) = p, q
    X, Y = Fraction(x), Fraction(y)
    for r, v in ((a + b, X + Y), (a - b, X - Y), (a * b, X * Y)):
        assert inside(r, v)
    if not b.contains(0.0):
        assert inside(a / b, X / Y)


@settings(max_examples=200, deadline=None)
@given(interval_and_point(), interval_and_point(), st.floats(0, 1), st.floats(0, 1))
def test_inclusion_monotone(p, q, s, u):
    (a, _), (b, _) = p, q
    # shrink a and b to subintervals
    a2 = RInterval(a.lo, max(a.lo, min(a.hi, a.lo + (a.hi - a.lo) * s)))
    b2 = RInterval(min(b.hi, max(b.lo, b.hi - (b.hi - b.lo) * u)), b.hi)
    assert (a + b).subset(a + b) and (a2 + b2).subset(a + b)
    assert (a2 - b2).subset(a - b)
    assert (a2 * b2).subset(a * b)
    if not b.contains(0.0):
        assert (a2 / b2).subset(a / b)
    for f in (iv.exp, iv.sin, iv.cos, iv.atan):
        small = RInterval(a2.lo / 1e10, a2.hi / 1e10)
        big = RInterval(a.lo / 1e10, a.hi / 1e10)
        assert f(small).subset(f(big))


@settings(max_examples=300, deadline=None)
@given(finite, finite)
def test_point_width_at_most_four_ulp(x, y):
    a, b = RInterval(x), RInterval(y)
    ops = [a + b, a - b, a * b]
    if y != 0:
        ops.append(a / b)
    for r in ops:
        mag = max(abs(r.lo), abs(r.hi))
        assert r.hi - r.lo <= 4 * math.ulp(mag)


@pytest.mark.parametrize("op", ["add", "sub", "mul", "div"])
def test_fuzz_arith_small(op):
    failures, wide = _fuzz.fuzz_arith(op, 5000, seed=11)
    assert failures == 0 and wide == 0


@pytest.mark.parametrize("fn", ["exp", "log", "sqrt", "sin", "cos", "atan"])
def test_fuzz_elementary_small(fn):
    assert _fuzz.fuzz_elementary(fn, 5000, seed=12) == 0


def test_fuzz_pow_and_cabs_small():
    assert _fuzz.fuzz_pow(3000, seed=13) == 0
    assert _fuzz.fuzz_cabs(3000, seed=14) == 0


def test_trig_huge_argument():
    x = RInterval(1e15, 1e15)
    with mpmath.workdps(60):
        ref = mpmath.sin(mpmath.mpf(1e15))
    r = iv.sin(x)
    assert mpmath.mpf(r.lo) <= ref <= mpmath.mpf(r.hi)


def test_pi_constants():
    with mpmath.workdps(40):
        assert mpmath.mpf(iv.PI.lo) <= mpmath.pi <= mpmath.mpf(iv.PI.hi)
        assert mpmath.mpf(iv.LOG2.lo) <= mpmath.log(2) <= mpmath.mpf(iv.LOG2.hi)


def test_complex_mul_contains_product():
    rng = random.Random(5)
    for _ in range(200):
        z = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        w = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        Z = CInterval(RInterval(z.real), RInterval(z.imag))
        W = CInterval(RInterval(w.real), RInterval(w.imag))
        p = Z * W
        ex_re = Fraction(z.real) * Fraction(w.real) - Fraction(z.imag) * Fraction(w.imag)
        ex_im = Fraction(z.real) * Fraction(w.imag) + Fraction(z.imag) * Fraction(w.real)
        assert Fraction(p.re.lo) <= ex_re <= Fraction(p.re.hi)
        assert Fraction(p.im.lo) <= ex_im <= Fraction(p.im.hi)


def test_cexp_i_on_unit_circle():
    for phi in (0.0, 1.0, 3.0, 100.0):
        z = iv.cexp_i(RInterval(phi))
        assert z.contains(complex(math.cos(phi), math.sin(phi)))
        assert cabs(z).contains(1.0)
