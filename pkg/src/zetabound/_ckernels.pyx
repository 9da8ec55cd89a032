# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: interval Euler-Maclaurin and Riemann-Siegel.

Mirrors ``_pykernels`` function by function. Arithmetic is round-to-nearest
followed by one outward ``nextafter`` step; libm results get two steps
(see ``interval`` for the accuracy assumption). Must be built without
-ffast-math and with -ffp-contract=off.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport nextafter, exp, log, sin, cos, atan, sqrt, floor, ceil, fabs, INFINITY, M_PI

from ._tables import (
    GABCKE_D, RS_CORRECTIONS, STIRLING_TERMS, bernoulli, em_coefficients,
    stirling_coefficients,
)
from fractions import Fraction
from math import factorial

NAME = "cython"

cdef struct ri:
    double lo
    double hi

cdef struct ci:
    ri re
    ri im

cdef enum:
    MAXK = 64
    MAXORD = 12
    SINC_TERMS = 40

cdef inline double dn(double x) nogil:
    return nextafter(x, -INFINITY)

cdef inline double upp(double x) nogil:
    return nextafter(x, INFINITY)

cdef inline double tdn(double x) nogil:
    return nextafter(nextafter(x, -INFINITY), -INFINITY)

cdef inline double tup(double x) nogil:
    return nextafter(nextafter(x, INFINITY), INFINITY)

cdef inline ri mk(double lo, double hi) nogil:
    cdef ri r
    r.lo = lo
    r.hi = hi
    return r

cdef inline ri pt(double x) nogil:
    return mk(x, x)

cdef inline ri radd(ri a, ri b) nogil:
    return mk(dn(a.lo + b.lo), upp(a.hi + b.hi))

cdef inline ri rsub(ri a, ri b) nogil:
    return mk(dn(a.lo - b.hi), upp(a.hi - b.lo))

cdef inline ri rneg(ri a) nogil:
    return mk(-a.hi, -a.lo)

cdef inline double mul0(double x, double y) nogil:
    if x == 0.0 or y == 0.0:
        return 0.0
    return x * y

cdef inline ri rmul(ri a, ri b) nogil:
    cdef double p1, p2, p3, p4, lo, hi
    if a.lo >= 0.0 and b.lo >= 0.0:
        return mk(dn(a.lo * b.lo), upp(a.hi * b.hi))
    p1 = mul0(a.lo, b.lo)
    p2 = mul0(a.lo, b.hi)
    p3 = mul0(a.hi, b.lo)
    p4 = mul0(a.hi, b.hi)
    lo = p1
    hi = p1
    if p2 < lo: lo = p2
    if p2 > hi: hi = p2
    if p3 < lo: lo = p3
    if p3 > hi: hi = p3
    if p4 < lo: lo = p4
    if p4 > hi: hi = p4
    return mk(dn(lo), upp(hi))

cdef inline ri rscale(ri a, double c) nogil:
    # c is an exact double
    if c >= 0.0:
        return mk(dn(a.lo * c), upp(a.hi * c))
    return mk(dn(a.hi * c), upp(a.lo * c))

cdef inline ri rdiv(ri a, ri b) nogil:
    cdef double q1, q2, q3, q4, lo, hi
    if b.lo <= 0.0 and b.hi >= 0.0:
        return mk(-INFINITY, INFINITY)
    q1 = a.lo / b.lo
    q2 = a.lo / b.hi
    q3 = a.hi / b.lo
    q4 = a.hi / b.hi
    lo = q1
    hi = q1
    if q2 < lo: lo = q2
    if q2 > hi: hi = q2
    if q3 < lo: lo = q3
    if q3 > hi: hi = q3
    if q4 < lo: lo = q4
    if q4 > hi: hi = q4
    return mk(dn(lo), upp(hi))

cdef inline ri rsqr(ri a) nogil:
    cdef double l2, h2
    if a.lo >= 0.0:
        return mk(dn(a.lo * a.lo), upp(a.hi * a.hi))
    if a.hi <= 0.0:
        return mk(dn(a.hi * a.hi), upp(a.lo * a.lo))
    l2 = a.lo * a.lo
    h2 = a.hi * a.hi
    return mk(0.0, upp(l2 if l2 > h2 else h2))

cdef inline ri rhull(ri a, ri b) nogil:
    return mk(a.lo if a.lo < b.lo else b.lo, a.hi if a.hi > b.hi else b.hi)

cdef inline double rmag(ri a) nogil:
    return fabs(a.lo) if fabs(a.lo) > fabs(a.hi) else fabs(a.hi)

cdef inline ri rabs(ri a) nogil:
    if a.lo >= 0.0:
        return a
    if a.hi <= 0.0:
        return rneg(a)
    return mk(0.0, rmag(a))

cdef inline ri rexp(ri a) nogil:
    cdef double lo = tdn(exp(a.lo))
    if lo < 0.0:
        lo = 0.0
    return mk(lo, tup(exp(a.hi)))

cdef inline ri rlog(ri a) nogil:
    # caller guarantees a.lo > 0
    return mk(tdn(log(a.lo)), tup(log(a.hi)))

cdef inline ri rsqrt(ri a) nogil:
    cdef double lo = a.lo
    if lo < 0.0:
        lo = 0.0
    lo = dn(sqrt(lo))
    if lo < 0.0:
        lo = 0.0
    return mk(lo, upp(sqrt(a.hi)))

cdef ri PI_I = mk(M_PI, nextafter(M_PI, INFINITY))
cdef ri HALF_PI_I = mk(0.5 * M_PI, 0.5 * nextafter(M_PI, INFINITY))
cdef ri TWO_PI_I = mk(2.0 * M_PI, 2.0 * nextafter(M_PI, INFINITY))

cdef ri rtrig(ri x, int phase) nogil:
    # phase 0: cos, phase 1: sin
    cdef ri q
    cdef double a, b, lo, hi
    cdef long k, ka, kb
    cdef int m
    if x.hi - x.lo >= 6.3 or x.lo != x.lo or x.hi != x.hi:
        return mk(-1.0, 1.0)
    q = rdiv(x, HALF_PI_I)
    ka = <long>ceil(q.lo)
    kb = <long>floor(q.hi)
    if phase == 0:
        a = cos(x.lo)
        b = cos(x.hi)
    else:
        a = sin(x.lo)
        b = sin(x.hi)
    lo = tdn(a if a < b else b)
    hi = tup(a if a > b else b)
    if lo < -1.0: lo = -1.0
    if hi > 1.0: hi = 1.0
    k = ka
    while k <= kb:
        m = <int>(((k - phase) % 4 + 4) % 4)
        if m == 0:
            hi = 1.0
        elif m == 2:
            lo = -1.0
        k += 1
    return mk(lo, hi)

cdef inline ri rcos(ri x) nogil:
    return rtrig(x, 0)

cdef inline ri rsin(ri x) nogil:
    return rtrig(x, 1)

cdef inline ri ratan(ri x) nogil:
    return mk(tdn(atan(x.lo)), tup(atan(x.hi)))

# complex
cdef inline ci cmk(ri re, ri im) nogil:
    cdef ci z
    z.re = re
    z.im = im
    return z

cdef inline ci cadd(ci a, ci b) nogil:
    return cmk(radd(a.re, b.re), radd(a.im, b.im))

cdef inline ci cmul(ci a, ci b) nogil:
    return cmk(rsub(rmul(a.re, b.re), rmul(a.im, b.im)), radd(rmul(a.re, b.im), rmul(a.im, b.re)))

cdef inline ci cmulr(ci a, ri b) nogil:
    return cmk(rmul(a.re, b), rmul(a.im, b))

cdef inline ci cdiv(ci a, ci b) nogil:
    cdef ri den = radd(rsqr(b.re), rsqr(b.im))
    cdef ci num = cmul(a, cmk(b.re, rneg(b.im)))
    return cmk(rdiv(num.re, den), rdiv(num.im, den))

cdef inline ri cabs_(ci z) nogil:
    return rsqrt(radd(rsqr(z.re), rsqr(z.im)))

cdef inline ci cshift(ci z, double c) nogil:
    return cmk(radd(z.re, pt(c)), z.im)

# -- tables built at import from exact fractions ---------------------------

cdef double _frac_lo(q):
    f = float(q)
    if Fraction(f) > q:
        return nextafter(f, -INFINITY)
    return f

cdef double _frac_hi(q):
    f = float(q)
    if Fraction(f) < q:
        return nextafter(f, INFINITY)
    return f

cdef ri frac_ri(q):
    return mk(_frac_lo(q), _frac_hi(q))

cdef ri EM_C[MAXK + 2]
_em = em_coefficients(MAXK + 1)
for _i in range(MAXK + 1):
    EM_C[_i] = frac_ri(_em[_i])

cdef ri STIR_C[8]
cdef int N_STIR = STIRLING_TERMS
cdef ri STIR_NEXT
_st = stirling_coefficients(STIRLING_TERMS)
for _i in range(STIRLING_TERMS):
    STIR_C[_i] = frac_ri(_st[_i])
_m = STIRLING_TERMS + 1
STIR_NEXT = frac_ri(abs(bernoulli(2 * _m)) / (2 * _m * (2 * _m - 1)) * 2 ** _m)

# sinc^(k)(x) = sum_j (-1)^j c[k][j] x^(2j-k), c = (2j)!/((2j-k)!(2j+1)!)
cdef ri SINC_C[MAXORD + 1][SINC_TERMS + 1]
cdef int SINC_J0[MAXORD + 1]
cdef ri INV_FACT[100]
for _k in range(MAXORD + 1):
    SINC_J0[_k] = (_k + 1) // 2
    for _t in range(SINC_TERMS + 1):
        _j = SINC_J0[_k] + _t
        SINC_C[_k][_t] = frac_ri(Fraction(factorial(2 * _j), factorial(2 * _j - _k) * factorial(2 * _j + 1)))
for _i in range(100):
    INV_FACT[_i] = frac_ri(Fraction(1, factorial(_i)))

cdef ri GAB_D[5]
for _i in range(5):
    GAB_D[_i] = frac_ri(GABCKE_D[_i])

cdef ri RS_COEF[5][4]
cdef int RS_ORD[5][4]
cdef int RS_PW[5][4]
cdef int RS_LEN[5]
for _j in range(5):
    RS_LEN[_j] = len(RS_CORRECTIONS[_j])
    for _i, (_o, _c, _p) in enumerate(RS_CORRECTIONS[_j]):
        RS_ORD[_j][_i] = _o
        RS_COEF[_j][_i] = frac_ri(_c)
        RS_PW[_j][_i] = _p
cdef int MAX_ORDER[5]
MAX_ORDER[:] = [0, 3, 6, 9, 12]


# -- Euler-Maclaurin -------------------------------------------------------

cdef ci npow_neg(double n, ci s) nogil:
    cdef ri ln = rlog(pt(n))
    cdef ri mod = rexp(rneg(rmul(s.re, ln)))
    cdef ri ph = rneg(rmul(s.im, ln))
    return cmk(rmul(rcos(ph), mod), rmul(rsin(ph), mod))

cdef ci em_core(ci s, long N, int K, double *rem_out) nogil:
    cdef ci acc = cmk(pt(1.0), pt(0.0))
    cdef long n
    cdef int k
    cdef ri nn = pt(<double>N)
    cdef ci ns, poch, tail, t
    cdef ri inv_n2, first, factor, box
    for n in range(2, N):
        acc = cadd(acc, npow_neg(<double>n, s))
    ns = npow_neg(<double>N, s)
    acc = cadd(acc, cdiv(cmulr(ns, nn), cshift(s, -1.0)))
    acc = cadd(acc, cmulr(ns, pt(0.5)))
    inv_n2 = rdiv(pt(1.0), rsqr(nn))
    poch = s
    tail = cmk(rdiv(ns.re, nn), rdiv(ns.im, nn))
    for k in range(1, K + 1):
        acc = cadd(acc, cmulr(cmul(poch, tail), EM_C[k - 1]))
        poch = cmul(cmul(poch, cshift(s, <double>(2 * k - 1))), cshift(s, <double>(2 * k)))
        tail = cmulr(tail, inv_n2)
    first = rmul(rmul(cabs_(poch), cabs_(tail)), rabs(EM_C[K]))
    factor = rdiv(cabs_(cshift(s, <double>(2 * K + 1))), radd(s.re, pt(<double>(2 * K + 1))))
    rem_out[0] = rmul(first, factor).hi
    box = mk(-rem_out[0], rem_out[0])
    return cmk(radd(acc.re, box), radd(acc.im, box))


def em_zeta_box(double sre_lo, double sre_hi, double sim_lo, double sim_hi, long N, int K):
    """Euler-Maclaurin enclosure of zeta(s) over a rectangle of s."""
    cdef double rem = 0.0
    cdef ci r
    if K > MAXK:
        raise ValueError(f"K <= {MAXK} supported")
    with nogil:
        r = em_core(cmk(mk(sre_lo, sre_hi), mk(sim_lo, sim_hi)), N, K, &rem)
    return r.re.lo, r.re.hi, r.im.lo, r.im.hi, rem


# -- Riemann-Siegel --------------------------------------------------------

cdef ri theta_core(ri T) nogil:
    cdef ci z = cmk(pt(0.25), rscale(T, 0.5))
    cdef ri absz2 = radd(rscale(rsqr(T), 0.25), pt(0.0625))
    cdef ri log_absz = rscale(rlog(absz2), 0.5)
    cdef ri arg_z = rsub(HALF_PI_I, ratan(rdiv(pt(1.0), rscale(T, 2.0))))
    cdef ri val = rsub(rmul(rscale(T, 0.5), rsub(rsub(log_absz, pt(1.0)), rlog(PI_I))),
                       rscale(arg_z, 0.25))
    cdef ci inv = cdiv(cmk(pt(1.0), pt(0.0)), z)
    cdef ci inv2 = cmul(inv, inv)
    cdef ci w = inv
    cdef int k
    cdef ri absz, p
    cdef double rem
    for k in range(N_STIR):
        val = radd(val, rmul(w.im, STIR_C[k]))
        w = cmul(w, inv2)
    absz = rsqrt(absz2)
    p = pt(1.0)
    for k in range(2 * N_STIR + 1):
        p = rmul(p, pt(absz.lo))
    rem = rdiv(STIR_NEXT, p).hi
    return radd(val, mk(-rem, rem))


def theta_box(double t_lo, double t_hi):
    cdef ri r = theta_core(mk(t_lo, t_hi))
    return r.lo, r.hi


cdef ri sinc_point(double v) nogil:
    cdef ri x2, acc, term
    cdef int j
    if v == 0.0:
        return pt(1.0)
    if v >= 0.5:
        return rdiv(rsin(pt(v)), pt(v))
    x2 = rsqr(pt(v))
    acc = pt(0.0)
    term = pt(1.0)
    for j in range(10):
        if j % 2 == 0:
            acc = radd(acc, term)
        else:
            acc = rsub(acc, term)
        term = rdiv(rmul(term, x2), pt(<double>((2 * j + 2) * (2 * j + 3))))
    return radd(acc, mk(-term.hi, term.hi))

cdef ri rsinc(ri x) nogil:
    cdef double mg = rmag(x)
    cdef double mi
    if x.lo <= 0.0 and x.hi >= 0.0:
        mi = 0.0
    else:
        mi = fabs(x.lo) if fabs(x.lo) < fabs(x.hi) else fabs(x.hi)
    return mk(sinc_point(mg).lo, sinc_point(mi).hi)

cdef ri rsinc_deriv(ri x, int k) nogil:
    cdef ri acc, xp, x2, first
    cdef int t, j, n, i
    cdef double r
    if k == 0:
        return rsinc(x)
    j = SINC_J0[k]
    xp = pt(1.0)
    for i in range(2 * j - k):
        xp = rmul(xp, x)
    x2 = rsqr(x)
    acc = pt(0.0)
    for t in range(SINC_TERMS + 1):
        if (j + t) % 2 == 0:
            acc = radd(acc, rmul(SINC_C[k][t], xp))
        else:
            acc = rsub(acc, rmul(SINC_C[k][t], xp))
        xp = rmul(xp, x2)
    n = 2 * (j + SINC_TERMS + 1) - k
    r = rmag(x)
    first = INV_FACT[n]
    for i in range(n):
        first = rmul(first, pt(r))
    return radd(acc, mk(-2.0 * first.hi, 2.0 * first.hi))

cdef void jmul(ri *a, ri *b, ri *out, int order) nogil:
    cdef int m, i
    cdef ri acc
    for m in range(order + 1):
        acc = pt(0.0)
        for i in range(m + 1):
            acc = radd(acc, rmul(a[i], b[m - i]))
        out[m] = acc

cdef void sinc_jet(ri x0, ri *delta, ri *out, int order) nogil:
    cdef ri power[MAXORD + 1]
    cdef ri tmp[MAXORD + 1]
    cdef ri ck
    cdef int k, m
    out[0] = rsinc(x0)
    power[0] = pt(1.0)
    for m in range(1, order + 1):
        out[m] = pt(0.0)
        power[m] = pt(0.0)
    for k in range(1, order + 1):
        jmul(power, delta, tmp, order)
        for m in range(order + 1):
            power[m] = tmp[m]
        ck = rmul(rsinc_deriv(x0, k), INV_FACT[k])
        for m in range(k, order + 1):
            out[m] = radd(out[m], rmul(ck, power[m]))

cdef void psi_core(ri P, int order, ri *out) nogil:
    cdef ri u = rsub(P, pt(0.5))
    cdef ri g0 = rmul(rsub(rsqr(u), pt(0.0625)), TWO_PI_I)
    cdef ri g[MAXORD + 1]
    cdef ri da[MAXORD + 1]
    cdef ri db[MAXORD + 1]
    cdef ri num[MAXORD + 1]
    cdef ri sa[MAXORD + 1]
    cdef ri sb[MAXORD + 1]
    cdef ri den[MAXORD + 1]
    cdef ri q[MAXORD + 1]
    cdef ri acc, fact
    cdef int m, i
    for m in range(order + 1):
        g[m] = pt(0.0)
        da[m] = pt(0.0)
        db[m] = pt(0.0)
    if order >= 1:
        g[1] = rmul(u, rscale(PI_I, 4.0))
        da[1] = rneg(PI_I)
        db[1] = PI_I
    if order >= 2:
        g[2] = TWO_PI_I
    sinc_jet(g0, g, num, order)
    sinc_jet(rmul(rsub(pt(0.25), u), PI_I), da, sa, order)
    sinc_jet(rmul(radd(pt(0.25), u), PI_I), db, sb, order)
    jmul(sa, sb, den, order)
    for m in range(order + 1):
        den[m] = rmul(den[m], PI_I)
    fact = pt(1.0)
    for m in range(order + 1):
        acc = num[m]
        for i in range(1, m + 1):
            acc = rsub(acc, rmul(den[i], q[m - i]))
        q[m] = rdiv(acc, den[0])
        if m > 0:
            fact = rscale(fact, <double>m)
        out[m] = rmul(q[m], fact)


def psi_derivatives_box(double p_lo, double p_hi, int order):
    cdef ri out[MAXORD + 1]
    if not 0 <= order <= MAXORD:
        raise ValueError("order out of range")
    psi_core(mk(p_lo, p_hi), order, out)
    return [(out[m].lo, out[m].hi) for m in range(order + 1)]


cdef int rs_core(ri T, int terms, ri *zout) nogil:
    cdef ri a = rsqrt(rdiv(T, TWO_PI_I))
    cdef long N = <long>floor(a.lo)
    cdef long n
    cdef ri th, main, P, X, scale, r, corr, rpow, cj, piw, d
    cdef ri derivs[MAXORD + 1]
    cdef int j, i, w
    cdef double rem
    if <long>floor(a.hi) != N:
        return -1
    th = theta_core(T)
    main = pt(0.0)
    for n in range(1, N + 1):
        main = radd(main, rdiv(rcos(rsub(th, rmul(T, rlog(pt(<double>n))))), rsqrt(pt(<double>n))))
    main = rscale(main, 2.0)
    P = rsub(a, pt(<double>N))
    X = rdiv(T, TWO_PI_I)
    scale = rexp(rscale(rlog(X), -0.25))
    r = rdiv(pt(1.0), rsqrt(X))
    psi_core(P, MAX_ORDER[terms], derivs)
    corr = pt(0.0)
    rpow = pt(1.0)
    for j in range(terms + 1):
        cj = pt(0.0)
        for i in range(RS_LEN[j]):
            piw = pt(1.0)
            for w in range(RS_PW[j][i]):
                piw = rmul(piw, PI_I)
            cj = radd(cj, rdiv(rmul(derivs[RS_ORD[j][i]], RS_COEF[j][i]), piw))
        corr = radd(corr, rmul(cj, rpow))
        rpow = rmul(rpow, r)
    if N % 2 == 0:
        corr = rneg(corr)
    d = rmul(GAB_D[terms], rexp(rmul(rlog(pt(T.lo)), mk(-(2.0 * terms + 3.0) / 4.0, -(2.0 * terms + 3.0) / 4.0))))
    rem = d.hi
    zout[0] = radd(radd(main, rmul(scale, corr)), mk(-rem, rem))
    return 0


def rs_z_box(double t_lo, double t_hi, int terms):
    """Riemann-Siegel enclosure of Z(t) for t in [t_lo, t_hi], t_lo >= 200."""
    cdef ri z
    cdef int status
    if not 0 <= terms <= 4:
        raise ValueError("terms must be in [0, 4]")
    with nogil:
        status = rs_core(mk(t_lo, t_hi), terms, &z)
    if status != 0:
        raise ValueError("main-sum length changes inside the t interval")
    return z.lo, z.hi


# -- batch evaluation over a partition, used by the sweeps ------------------

cdef inline long em_default_n(double t_hi) nogil:
    cdef double v = ceil(1.5 * fabs(t_hi))
    if v < 10.0:
        return 10
    return <long>v

cdef int abs_zeta_piece(double a, double b, int terms, int em_k, double em_tol,
                        double *x, double *y) nogil:
    cdef ri T = mk(a, b)
    cdef ri sa, z, m
    cdef ci e
    cdef long N
    cdef double rem
    cdef int method = 0
    if a >= 200.0:
        sa = rsqrt(rdiv(T, TWO_PI_I))
        if floor(sa.lo) == floor(sa.hi):
            rs_core(T, terms, &z)
            m = rabs(z)
            x[0] = m.lo
            y[0] = m.hi
            return 1
    N = em_default_n(b)
    while True:
        e = em_core(cmk(pt(0.5), T), N, em_k, &rem)
        if rem <= em_tol or N > (1 << 24):
            break
        N *= 2
    m = cabs_(e)
    x[0] = m.lo
    y[0] = m.hi
    return 0


def abs_zeta_grid(cnp.ndarray[cnp.float64_t, ndim=1] edges, int terms, int em_k, double em_tol):
    """|zeta(1/2+it)| enclosures on [edges[i], edges[i+1]] for every i.

    Returns arrays ``(lo, hi, method)`` with method 0 = Euler-Maclaurin,
    1 = Riemann-Siegel. Dispatch rule is the same as ``abs_zeta_half``.
    """
    cdef Py_ssize_t n = edges.shape[0] - 1
    cdef Py_ssize_t i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lo = np.empty(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hi = np.empty(n)
    cdef cnp.ndarray[cnp.int8_t, ndim=1] method = np.empty(n, dtype=np.int8)
    cdef double xv, yv
    cdef double[:] ev = edges
    if not 0 <= terms <= 4:
        raise ValueError("terms must be in [0, 4]")
    if em_k > MAXK:
        raise ValueError(f"K <= {MAXK} supported")
    with nogil:
        for i in range(n):
            method[i] = abs_zeta_piece(ev[i], ev[i + 1], terms, em_k, em_tol, &xv, &yv)
            lo[i] = xv
            hi[i] = yv
    return lo, hi, method


def threshold_lo(cnp.ndarray[cnp.float64_t, ndim=1] a, double c_lo):
    """Lower bounds of c * a^(1/6) * log(a) for a >= 1, c_lo >= 0."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n)
    cdef ri la, v
    cdef ri sixth = mk(dn(1.0 / 6.0), upp(1.0 / 6.0))
    for i in range(n):
        la = rlog(pt(a[i]))
        v = rmul(rmul(pt(c_lo), rexp(rmul(la, sixth))), la)
        out[i] = v.lo
    return out


def threshold_hi(cnp.ndarray[cnp.float64_t, ndim=1] a, double c_hi):
    """Upper bounds of c * a^(1/6) * log(a) for a >= 1, c_hi >= 0."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n)
    cdef ri la, v
    cdef ri sixth = mk(dn(1.0 / 6.0), upp(1.0 / 6.0))
    for i in range(n):
        la = rlog(pt(a[i]))
        v = rmul(rmul(pt(c_hi), rexp(rmul(la, sixth))), la)
        out[i] = v.hi
    return out
