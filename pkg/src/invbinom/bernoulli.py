"""Exact Bernoulli numbers with an eager process-wide cache.

Computed once as Fractions via the defining recurrence
sum_{j=0}^{n} C(n+1, j) B_j = 0, so the cache is precision-independent.
Fill it with :func:`ensure_bernoulli` before forking workers.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from mpmath import mp

_cache: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def ensure_bernoulli(n_max: int) -> None:
    """Extend the cache so bernoulli_fraction(n) works for all n <= n_max."""
    while len(_cache) <= n_max:
        n = len(_cache)
        if n % 2 == 1:
            _cache.append(Fraction(0))
            continue
        acc = sum(comb(n + 1, j) * _cache[j] for j in range(n))
        _cache.append(-acc / (n + 1))


def bernoulli_fraction(n: int) -> Fraction:
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    ensure_bernoulli(n)
    return _cache[n]


def bernoulli_mpf(n: int):
    """B_n as an mpf at the current working precision."""
    b = bernoulli_fraction(n)
    return mp.mpf(b.numerator) / b.denominator
