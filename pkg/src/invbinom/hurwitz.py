"""Hurwitz zeta at integer s >= 2 by Euler-Maclaurin summation.

zeta(s, a) = sum_{n>=0} (n+a)^(-s) is evaluated as a direct sum to a cutoff
M plus the Euler-Maclaurin tail with Bernoulli numbers.  For integer s >= 2
and a > 0 the summand is completely monotone, so the remainder after
truncating the Bernoulli series is bounded by the first omitted term; that
makes the tail bound rigorous.  This is the production route for the
Dirichlet L-values and the zeta values used elsewhere; the test suite holds
the independent alternating-sum oracles.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp

from .bernoulli import bernoulli_fraction, ensure_bernoulli
from .precision import (
    ApComplex,
    DEFAULT_CTX,
    PrecisionCtx,
    PrecisionUnreachableError,
)

_MAX_BERNOULLI_TERMS = 600
_MAX_CUTOFF_DOUBLINGS = 5


def _hurwitz_raw(s: int, a: Fraction, eps) -> "mp.mpf":
    """zeta(s, a) at the current dps with tail error below eps."""
    m_cut = max(16, int(0.8 * mp.dps) + 8)
    for _ in range(_MAX_CUTOFF_DOUBLINGS):
        result = _euler_maclaurin(s, a, m_cut, eps)
        if result is not None:
            return result
        m_cut *= 2
    raise PrecisionUnreachableError(
        f"hurwitz zeta tail bound unreachable at s={s}, a={a}, dps={mp.dps}"
    )


def _euler_maclaurin(s: int, a: Fraction, m_cut: int, eps):
    a_mp = mp.mpf(a.numerator) / a.denominator
    total = mp.mpf(0)
    for n in range(m_cut):
        total += (n + a_mp) ** (-s)
    base = m_cut + a_mp
    total += base ** (1 - s) / (s - 1)
    total += base ** (-s) / 2

    # Bernoulli correction terms; the remainder is bounded by the first
    # omitted term because d^k/dx^k (x+a)^(-s) has constant sign.
    ensure_bernoulli(64)
    poch = mp.mpf(s)            # (s)_{2j-1}, built incrementally
    power = base ** (-s - 1)
    prev_mag = mp.inf
    for j in range(1, _MAX_BERNOULLI_TERMS):
        b = bernoulli_fraction(2 * j)
        term = (mp.mpf(b.numerator) / b.denominator) / mp.factorial(2 * j) * poch * power
        total += term
        mag = abs(term)
        if mag < eps:
            return total
        if mag > prev_mag:
            return None         # divergent regime reached: increase the cutoff
        prev_mag = mag
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        power /= base * base
    return None


def _as_fraction(a) -> Fraction:
    if isinstance(a, Fraction):
        return a
    if isinstance(a, int):
        return Fraction(a)
    raise TypeError(f"a must be a rational number, got {type(a).__name__}")


def hurwitz_zeta(s: int, a, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """zeta(s, a) for integer s >= 2 and rational a in (0, 1]."""
    if not isinstance(s, int) or s < 2:
        raise ValueError(f"s must be an integer >= 2, got {s}")
    a = _as_fraction(a)
    if not (0 < a <= 1):
        raise ValueError(f"a must lie in (0, 1], got {a}")
    with ctx.working():
        value = _hurwitz_raw(s, a, ctx.eps(2))
    return ApComplex.wrap(value, ctx.digits)


_zeta_cache: dict[tuple[int, int], "mp.mpf"] = {}


def zeta_int(s: int) -> "mp.mpf":
    """Riemann zeta at integer s >= 2, at the current dps (cached)."""
    key = (s, mp.prec)
    if key not in _zeta_cache:
        if s == 2:
            value = mp.pi ** 2 / 6
        elif s == 4:
            value = mp.pi ** 4 / 90
        else:
            value = _hurwitz_raw(s, Fraction(1), mp.mpf(10) ** (-mp.dps - 2))
        _zeta_cache[key] = value
    return _zeta_cache[key]


def zeta_nonpositive(n: int) -> Fraction:
    """Exact zeta(-n) for integer n >= 0."""
    if n < 0:
        raise ValueError("expected n >= 0")
    if n == 0:
        return Fraction(-1, 2)
    if n % 2 == 0:
        return Fraction(0)
    m = n + 1
    return -bernoulli_fraction(m) / m
