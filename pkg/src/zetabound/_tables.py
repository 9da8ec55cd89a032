"""Exact constants shared by the Python and compiled kernels."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / Fraction(m + 1))
    return b[n]


def em_coefficients(K: int) -> list[Fraction]:
    """B_{2k}/(2k)! for k = 1..K (index 0 holds k = 1)."""
    return [bernoulli(2 * k) / factorial(2 * k) for k in range(1, K + 1)]


def stirling_coefficients(m: int) -> list[Fraction]:
    """B_{2k}/(2k(2k-1)) for k = 1..m."""
    return [bernoulli(2 * k) / (2 * k * (2 * k - 1)) for k in range(1, m + 1)]


# Gabcke's bounds for the Riemann-Siegel remainder, valid for t >= 200:
# |R_k(t)| <= d_k * t**(-(2k+3)/4) after including C_0..C_k.
# W. Gabcke, "Neue Herleitung und explizite Restabschaetzung der
# Riemann-Siegel-Formel", Dissertation, Goettingen 1979, Satz 4.2.3.
GABCKE_T_MIN = 200
GABCKE_D = (
    Fraction("0.127"),
    Fraction("0.053"),
    Fraction("0.011"),
    Fraction("0.031"),
    Fraction("0.017"),
)

# C_j(p) = sum over (order, coefficient) of coefficient * Psi^(order)(p) / pi^power;
# entries are (derivative order, rational coefficient, power of pi in the denominator).
RS_CORRECTIONS = (
    ((0, Fraction(1), 0),),
    ((3, Fraction(-1, 96), 2),),
    ((2, Fraction(1, 64), 2), (6, Fraction(1, 18432), 4)),
    ((1, Fraction(-1, 64), 2), (5, Fraction(-1, 3840), 4), (9, Fraction(-1, 5308416), 6)),
    (
        (0, Fraction(1, 128), 2),
        (4, Fraction(19, 24576), 4),
        (8, Fraction(11, 5898240), 6),
        (12, Fraction(1, 2038431744), 8),
    ),
)

# Stirling series for log Gamma is cut after this many Bernoulli terms; the
# remainder is bounded by the next one times sec^(2m)(arg z / 2) <= 2^m.
STIRLING_TERMS = 3
