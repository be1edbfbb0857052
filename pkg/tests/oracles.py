"""Independent numeric oracles for the test suite.

These deliberately avoid the production code paths: alternating series are
accelerated by repeated averaging of partial sums (the iterated Euler /
van Wijngaarden transformation), positive-term series are converted to
alternating form by the van Wijngaarden transformation first, and plain
series get brute-force partial sums with explicit tail brackets.
"""

from __future__ import annotations

from mpmath import mp


def alternating_accel(term, n_terms: int):
    """sum_{k>=0} (-1)^k term(k) by iterated averaging of partial sums.

    Error decays geometrically in n_terms; run at a dps comfortably above
    the digits you want.
    """
    sums = []
    acc = mp.mpf(0)
    sign = 1
    for k in range(n_terms):
        acc += sign * term(k)
        sums.append(acc)
        sign = -sign
    while len(sums) > 1:
        sums = [(sums[i] + sums[i + 1]) / 2 for i in range(len(sums) - 1)]
    return sums[0]


def positive_sum_vw(term, n_terms: int):
    """sum_{m>=1} term(m) for positive decreasing terms.

    Applies the van Wijngaarden monotone-to-alternating transformation
    w_r = sum_j 2^j term(2^j r), then accelerates the alternating series
    sum (-1)^(r+1) w_r by iterated averaging.
    """
    eps = mp.mpf(10) ** (-mp.dps - 5)

    def w(r: int):
        total = mp.mpf(0)
        j = 0
        while True:
            t = mp.mpf(2) ** j * term((1 << j) * r)
            total += t
            if t < eps:
                return total
            j += 1

    return alternating_accel(lambda k: w(k + 1), n_terms)


def series_with_tail_bracket(term, tail_lo, tail_hi, n_terms: int):
    """Brute-force partial sum plus a [lo, hi] bracket for the tail.

    Returns (midpoint, halfwidth): the true sum lies within halfwidth of
    midpoint provided tail_lo <= tail <= tail_hi.
    """
    acc = mp.mpf(0)
    for k in range(n_terms):
        acc += term(k)
    lo, hi = tail_lo(n_terms), tail_hi(n_terms)
    return acc + (lo + hi) / 2, (hi - lo) / 2


def geometric_series(z, s: int, digits: int):
    """sum_{n>=1} z^n / n^s by raw summation; needs |z| < 1."""
    eps = mp.mpf(10) ** (-digits - 5)
    r = abs(z)
    total = mp.mpc(0)
    zp = mp.mpc(1)
    n = 0
    while True:
        n += 1
        zp *= z
        total += zp / mp.mpf(n) ** s
        if abs(zp) * r / (1 - r) < eps:
            return total


def inverse_binomial_series(k: int, z, n_terms: int):
    """Raw partial sum of sum z^n / ((2n+1)^k C(2n,n)) with exact terms."""
    total = mp.mpc(0)
    term = mp.mpc(1)
    for n in range(n_terms):
        total += term
        term = term * z * (n + 1) / (2 * (2 * n + 1)) * (mp.mpf(2 * n + 1) / (2 * n + 3)) ** k
    return total
