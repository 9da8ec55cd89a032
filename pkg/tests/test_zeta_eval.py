import math
import random

import mpmath
import pytest

from zetabound.interval import CInterval, DomainError, RInterval, cabs
from zetabound.zeta_eval import (
    EMParams,
    Method,
    ParameterError,
    PoleError,
    RSParams,
    abs_zeta_half,
    em_zeta,
    main_sum_length,
    rs_abs_zeta,
    rs_applicable,
)

mpmath.mp.dps = 30


def mp_abs_zeta(t):
    return abs(mpmath.zeta(mpmath.mpc(0.5, t)))


def inside(x, r: RInterval) -> bool:
    return mpmath.mpf(r.lo) <= x <= mpmath.mpf(r.hi)


def rounds_to(r: RInterval, text: str) -> bool:
    """Every point of r agrees with the decimal ``text`` to its last digit."""
    places = len(text.split(".")[1])
    half = mpmath.mpf(10) ** -places / 2
    v = mpmath.mpf(text)
    return v - half <= mpmath.mpf(r.lo) and mpmath.mpf(r.hi) <= v + half


class TestEM:
    def test_half(self, backend):
        z = em_zeta(RInterval(0.5), EMParams(64, 20), backend=backend)
        assert inside(mpmath.zeta(0.5), z.re)
        assert rounds_to(z.re, "-1.4603545088")
        assert z.im.contains(0.0)
        assert z.re.width < 1e-12

    def test_two(self, backend):
        z = em_zeta(RInterval(2.0), EMParams(32, 10), backend=backend)
        assert inside(mpmath.pi**2 / 6, z.re)
        assert rounds_to(z.re, "1.6449340668")

    def test_first_zero(self, backend):
        s = CInterval(RInterval(0.5), RInterval.exact("14.1347251417"))
        assert cabs(em_zeta(s, backend=backend)).lo < 1e-6

    def test_off_line(self):
        s = complex(0.75, 30.0)
        z = em_zeta(s)
        ref = mpmath.zeta(mpmath.mpc(0.75, 30.0))
        assert inside(ref.real, z.re) and inside(ref.imag, z.im)

    def test_pole(self):
        with pytest.raises(PoleError):
            em_zeta(CInterval(RInterval(0.9, 1.1), RInterval(-0.1, 0.1)))

    def test_domain(self):
        with pytest.raises(DomainError):
            em_zeta(RInterval(2.5))
        with pytest.raises(DomainError):
            em_zeta(RInterval(-0.5))

    def test_params(self):
        with pytest.raises(ParameterError):
            EMParams(1)
        with pytest.raises(ParameterError):
            EMParams(10, 0)
        assert EMParams.auto(100.0).N == 150
        assert EMParams.auto(1.0).N == 10

    def test_tolerance_doubles_n(self):
        z = em_zeta(complex(0.5, 40.0), EMParams(10, 4, tol=1e-12))
        assert z.re.width < 1e-10


class TestRS:
    def test_matches_em_at_300(self, backend):
        rs = rs_abs_zeta(RInterval(300.0), backend=backend)
        em = cabs(em_zeta(complex(0.5, 300.0), backend=backend))
        assert rs.overlaps(em)
        assert inside(mp_abs_zeta(300), rs)

    def test_interval_widening_is_real(self):
        t = RInterval(1000.0, 1000.0005)
        wide = rs_abs_zeta(t)
        point = rs_abs_zeta(RInterval(1000.0))
        assert wide.width > point.width
        assert wide.subset(wide.hull(point))

    def test_floor_change_rejected(self):
        step = 2 * math.pi * 16**2
        t = RInterval(step - 0.01, step + 0.01)
        assert main_sum_length(t) == (15, 16)
        assert not rs_applicable(t)
        with pytest.raises(ParameterError):
            rs_abs_zeta(t)

    def test_below_200_rejected(self):
        with pytest.raises(DomainError):
            rs_abs_zeta(RInterval(150.0))

    def test_terms_range(self):
        with pytest.raises(ParameterError):
            RSParams(5)
        with pytest.raises(ParameterError):
            RSParams(-1)

    @pytest.mark.parametrize("terms", range(5))
    def test_every_term_count_contains_oracle(self, terms):
        for t in (200.0, 777.7, 5000.0):
            assert inside(mp_abs_zeta(t), rs_abs_zeta(RInterval(t), RSParams(terms)))

    def test_more_terms_tighter(self):
        t = RInterval(2000.0)
        widths = [rs_abs_zeta(t, RSParams(k)).width for k in range(5)]
        assert widths[4] < widths[0]


class TestDispatch:
    def test_em_below_200(self):
        assert abs_zeta_half(RInterval(150.0, 150.001)).method is Method.EM

    def test_rs_at_1e4(self):
        e = abs_zeta_half(RInterval(1e4, 1e4 + 1e-3))
        assert e.method is Method.RS

    def test_em_fallback_on_floor_change(self):
        step = 2 * math.pi * 16**2
        assert abs_zeta_half(RInterval(step - 0.001, step + 0.001)).method is Method.EM

    def test_t_two(self):
        e = abs_zeta_half(RInterval(2.0))
        assert inside(mp_abs_zeta(2), e.value)

    def test_too_small(self):
        with pytest.raises(DomainError):
            abs_zeta_half(RInterval(0.05))

    def test_oracle_containment_100_points(self):
        rng = random.Random(7)
        for _ in range(100):
            t = rng.choice([rng.uniform(0.1, 200), rng.uniform(200, 3000)])
            e = abs_zeta_half(RInterval(t))
            assert inside(mp_abs_zeta(t), e.value), (t, e)

    def test_refinement(self):
        for lo, hi in ((20.0, 20.01), (500.0, 500.01)):
            parent = abs_zeta_half(RInterval(lo, hi)).value
            mid = (lo + hi) / 2
            left = abs_zeta_half(RInterval(lo, mid)).value
            right = abs_zeta_half(RInterval(mid, hi)).value
            union = left.hull(right)
            slack = 4 * math.ulp(parent.hi)
            assert union.lo >= parent.lo - slack and union.hi <= parent.hi + slack

    def test_conjugate_symmetry(self):
        for t in (5.0, 33.3, 180.0):
            up = cabs(em_zeta(complex(0.5, t)))
            down = cabs(em_zeta(complex(0.5, -t)))
            assert up.overlaps(down)

    def test_em_rs_intersection_sample(self):
        rng = random.Random(8)
        for _ in range(30):
            t = rng.uniform(200, 1e4)
            T = RInterval(t)
            if not rs_applicable(T):
                continue
            assert rs_abs_zeta(T).overlaps(cabs(em_zeta(CInterval(RInterval(0.5), T))))
