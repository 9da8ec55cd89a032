import math
import random

import mpmath
import pytest

from zetabound import expsum
from zetabound.expsum import (
    PhaseFn,
    SumRange,
    direct_sum,
    lemma1_bound,
    lemma2_bound,
    lemma3_rhs,
    max_partial_abs,
    weighted_moment_bounds,
    weighted_moments,
    weighted_moments_upto,
)
from zetabound.interval import DomainError, RInterval, cabs
from zetabound.zeta_eval import abs_zeta_half


def mp_in(x, r):
    return mpmath.mpf(r.lo) <= x <= mpmath.mpf(r.hi)


class TestDirectSum:
    def test_zero_phase(self):
        s = direct_sum(lambda x: x * 0.0, SumRange(0, 7))
        assert s.re.contains(7.0) and s.im.contains(0.0)
        assert s.re.width < 1e-12

    def test_half_cancels(self):
        for N in (0, 3, 10):
            s = direct_sum(lambda x: x * 0.5, SumRange(N, 2))
            assert s.re.contains(0.0) and s.im.contains(0.0)

    def test_quadratic_oracle(self):
        s = direct_sum(lambda x: x.sqr() / 100.0, SumRange(0, 50))
        with mpmath.workdps(40):
            ref = mpmath.fsum(mpmath.expjpi(2 * mpmath.mpf(n) ** 2 / 100) for n in range(1, 51))
        assert mp_in(ref.real, s.re) and mp_in(ref.imag, s.im)

    def test_partial_max(self):
        m = max_partial_abs(lambda x: x * 0.0, 0, 5)
        assert m.contains(5.0)


class TestLemma1:
    def test_L_one(self):
        r = lemma1_bound(1, 10, 100)
        assert r.contains(2 * math.sqrt(2 / math.pi) * 10 + 3)

    def test_formula(self):
        r = lemma1_bound(100, 50, 200)
        with mpmath.workdps(40):
            ref = (mpmath.mpf(99) / 50 + 1) * (2 * mpmath.sqrt(2 / mpmath.pi) * mpmath.sqrt(200) + 2) + 1
        assert mp_in(ref, r)

    def test_exact_quadratic_dominated(self):
        W0 = 400.0
        f = PhaseFn(lambda x: x.sqr() / (2 * W0), W0 / 2, W0, d2=lambda x: x * 0.0 + 1 / W0)
        for N, L in ((0, 50), (100, 300), (1000, 20)):
            s = cabs(direct_sum(f, SumRange(N, L)))
            assert lemma1_bound(L, f.V, f.W).lo >= s.hi

    @pytest.mark.parametrize("V, W", [(0.5, 1.0), (2.0, 0.9), (5.0, 5.0), (6.0, 5.0)])
    def test_hypothesis_violations(self, V, W):
        with pytest.raises(DomainError):
            lemma1_bound(10, V, W)

    def test_phase_certify_detects_bad_range(self):
        W0 = 100.0
        good = PhaseFn(lambda x: x.sqr() / (2 * W0), 50.0, 100.0, d2=lambda x: x * 0.0 + 1 / W0)
        bad = PhaseFn(lambda x: x.sqr() / (2 * W0), 10.0, 50.0, d2=lambda x: x * 0.0 + 1 / W0)
        assert good.certify(RInterval(0, 1000))
        assert not bad.certify(RInterval(0, 1000))

    def test_phase_invariants(self):
        with pytest.raises(DomainError):
            PhaseFn(lambda x: x, 3.0, 2.0)
        with pytest.raises(DomainError):
            PhaseFn(lambda x: x, 0.1, 0.5)

    def test_finite_difference_matches_certified_range(self):
        rng = random.Random(4)
        for _ in range(20):
            phase, q = expsum.random_quadratic_phase(rng)
            for x in (1, 17, 250, 4000):
                with mpmath.workdps(30):
                    h = mpmath.mpf("1e-6")
                    fd = (q.mp(x + h) - 2 * q.mp(x) + q.mp(x - h)) / h**2
                assert 1 / phase.W * (1 - 1e-6) <= abs(fd) <= 1 / phase.V * (1 + 1e-6)


class TestLemma2:
    def test_M_one(self):
        r = lemma2_bound(SumRange(0, 9, M=1), {})
        assert r.contains(81.0) and r.width < 1e-12

    def test_scalar_example(self):
        r = lemma2_bound(SumRange(0, 10, M=3), lambda m: 10.0)
        assert r.contains(120.0)

    def test_small_exhaustive(self):
        rng = random.Random(9)
        for L in range(1, 9):
            for M in range(1, L + 1):
                c, d = rng.random(), rng.random()
                f = lambda x, c=c, d=d: x.sqr() * (c / 50) + x * d
                s = cabs(direct_sum(f, SumRange(5, L)))
                inner = {m: max_partial_abs(expsum.shifted(f, m), 5, L).hi for m in range(1, M)}
                b = lemma2_bound(SumRange(5, L, M=M), inner)
                assert b.hi >= s.sqr().lo


class TestMoments:
    def test_M_one(self):
        p, m = weighted_moments(1)
        bp, bm = weighted_moment_bounds(1)
        assert p.contains(0.0) and m.contains(0.0)
        assert bp.contains(4 / 15) and bm.contains(4 / 3)

    def test_M_ten_against_mpmath(self):
        with mpmath.workdps(30):
            plus = mpmath.fsum((1 - mpmath.mpf(m) / 10) * mpmath.sqrt(m) for m in range(1, 10))
            minus = mpmath.fsum((1 - mpmath.mpf(m) / 10) / mpmath.sqrt(m) for m in range(1, 10))
        p, m = weighted_moments(10)
        assert mp_in(plus, p) and mp_in(minus, m)
        assert abs(plus - mpmath.mpf("8.201047")) < 1e-6
        assert abs(minus - mpmath.mpf("2.774170")) < 1e-6
        bp, bm = weighted_moment_bounds(10)
        assert bp.contains(4 / 15 * 10**1.5) and bm.contains(4 / 3 * 10**0.5)
        assert p.hi <= bp.lo and m.hi <= bm.lo

    def test_linear_time_matches_direct(self):
        direct = {M: weighted_moments(M) for M in (1, 2, 7, 50)}
        for M, p, m in weighted_moments_upto(50):
            if M in direct:
                assert p.overlaps(direct[M][0]) and m.overlaps(direct[M][1])

    def test_bounds_hold_to_2000(self):
        for M, p, m in weighted_moments_upto(2000):
            bp, bm = weighted_moment_bounds(M)
            assert p.hi <= bp.lo and m.hi <= bm.lo, M


class TestLemma3:
    @pytest.mark.parametrize("t", [100.0, 1e4])
    def test_dominates_zeta(self, t):
        rhs = lemma3_rhs(RInterval(t))
        assert rhs.hi >= abs_zeta_half(RInterval(t)).value.lo

    def test_sum_length_boundary(self):
        with mpmath.workdps(40):
            t = RInterval.exact(mpmath.nstr(2 * mpmath.pi * 25, 35))
        t = RInterval(math.nextafter(t.lo, 0.0), math.nextafter(t.hi, math.inf))
        r = lemma3_rhs(t)
        r4 = lemma3_rhs(RInterval(2 * math.pi * 25 - 1e-3))
        assert r.is_bounded() and r.overlaps(r4)

    def test_domain(self):
        with pytest.raises(DomainError):
            lemma3_rhs(RInterval(99.0))


def test_battery_smoke():
    assert expsum.lemma1_battery(trials=40, seed=5).passed
    assert expsum.lemma2_battery(max_len=6, seed=6).passed
    assert expsum.lemma3_battery(samples=3, seed=7, t_max=2000.0).passed
    assert expsum.moments_battery(300).passed
