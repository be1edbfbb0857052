"""Inverse central-binomial series S_k(z) = sum z^n / ((2n+1)^k C(2n,n)).

Direct summation uses the exact term recurrence

    t_{n+1} = t_n * z * (n+1) / (2(2n+1)) * ((2n+1)/(2n+3))^k,

whose ratio tends to z/4; with |z| <= 3.5 the tail is geometric and the
stopping bound |t_{n+1}| / (1 - r_n), r_n = (|z|/4)(1 + 1/(2n+1)), is
rigorous.  For 3.5 < |z| <= 4 (k >= 2) the sum is delegated to an integral
representation: the two-segment contour when an admissible parameter w
with (1-w^2)/w = +-i*sqrt(z), |w| <= 1, Re w > 0 exists, and the real-axis
line integral otherwise (the |z| = 4 boundary, where both contour
parameters degenerate to +-i).

The module also holds the classical closed forms for k in {0, 1}, the
alternating-series/trilogarithm identity pair in the parameter w, and the
k = 2 dilogarithm reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .polylog import li_raw
from .precision import (
    ApComplex,
    DEFAULT_CTX,
    DivergenceError,
    PrecisionCtx,
    PrecisionUnreachableError,
    to_mpc,
)
from . import quadrature

_DIRECT_RADIUS = mp.mpf("3.5")


@dataclass(frozen=True)
class SeriesSpec:
    """Order k and argument z of S_k(z); |z| < 4, or |z| = 4 with k >= 2."""

    k: int
    z: object

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"k must be a non-negative integer, got {self.k}")


def s_series(spec: SeriesSpec, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """S_k(z) to ctx.digits, routing per |z| as described in the module doc."""
    with ctx.working():
        z = to_mpc(spec.z)
        r = abs(z)
        boundary_tol = mp.mpf(10) ** (-ctx.digits)
        if r > 4 + boundary_tol or (r > 4 - boundary_tol and spec.k <= 1):
            raise DivergenceError(
                f"S_{spec.k}(z) diverges for |z| > 4 (or |z| = 4 with k <= 1)"
            )
        if r <= _DIRECT_RADIUS:
            value = _s_direct(spec.k, z)
            return ApComplex.wrap(value, ctx.digits)
        if spec.k < 2:
            raise DivergenceError("3.5 < |z| <= 4 needs k >= 2")
    return _s_integral(spec.k, z, ctx)


def _s_direct(k: int, z: "mp.mpc") -> "mp.mpc":
    eps = mp.mpf(10) ** (-(mp.dps - 2))
    r = abs(z)
    total = mp.mpc(0)
    term = mp.mpc(1)
    n = 0
    while True:
        total += term
        term = term * z * (n + 1) / (2 * (2 * n + 1)) * (mp.mpf(2 * n + 1) / (2 * n + 3)) ** k
        n += 1
        ratio = r / 4 * (1 + mp.mpf(1) / (2 * n + 1))
        if ratio < 1 and abs(term) / (1 - ratio) < eps:
            return total + term
        if n > 400 * mp.dps:
            raise PrecisionUnreachableError("series tail bound not met within term cap")


def _s_integral(k: int, z: "mp.mpc", ctx: PrecisionCtx) -> ApComplex:
    # candidates: x0 = +-i sqrt(z); w solves w^2 + x0 w - 1 = 0.
    with ctx.working():
        margin = mp.mpf(10) ** (-min(12, ctx.digits // 2))
        x0_base = mp.mpc(0, 1) * mp.sqrt(z)
        for x0 in (x0_base, -x0_base):
            disc = mp.sqrt(x0 * x0 + 4)
            for w in ((-x0 + disc) / 2, (-x0 - disc) / 2):
                if w.real > margin and (1 / w).real > margin and abs(w) <= 1 + margin:
                    contour = quadrature.sk_alternating_contour(k, w, ctx)
                    x0_exact = (1 - w * w) / w
                    return ApComplex.wrap(contour.mpc / x0_exact, ctx.digits)
        # |z| = 4 boundary: both parameters degenerate (Im(i*w) = 0); use the
        # real-axis representation, valid for |sqrt(z)| <= 2.
        c = mp.sqrt(z)
    line = quadrature.sk_line_integral(k, c, ctx)
    with ctx.working():
        value = line.mpc / (mp.mpc(0, 1) * c)
    return ApComplex.wrap(value, ctx.digits)


def chudnovsky_series(ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """sum_{n>=1} 1 / (n^3 C(3n,n) 2^n) with a rigorous geometric tail.

    The term ratio tends to 2/27 and is monotonically below 4/27 from
    n = 1 on, so tail <= |t_{n+1}| / (1 - 4/27).
    """
    with ctx.working():
        eps = ctx.eps(2)
        total = mp.mpf(0)
        term = mp.mpf(1) / 6  # n = 1: 1/(1 * C(3,1) * 2)
        n = 1
        while True:
            total += term
            ratio = (
                mp.mpf(n) ** 3
                / (n + 1) ** 3
                * ((n + 1) * (2 * n + 1) * (2 * n + 2))
                / ((3 * n + 1) * (3 * n + 2) * (3 * n + 3))
                / 2
            )
            term *= ratio
            n += 1
            if term / (1 - mp.mpf(4) / 27) < eps:
                return ApComplex.wrap(total + term, ctx.digits)


def s1_closed(z, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Classical closed form S_1(z) = 4 arcsin(sqrt(z)/2) / sqrt(z(4-z))."""
    with ctx.working():
        zv = to_mpc(z)
        _check_off_cut(zv)
        if zv == 0:
            return ApComplex.wrap(mp.mpc(1), ctx.digits)
        rz = mp.sqrt(zv)
        value = 4 * mp.asin(rz / 2) / (rz * mp.sqrt(4 - zv))
    return ApComplex.wrap(value, ctx.digits)


def s0_closed(z, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Classical closed form S_0(z) = 4 (sqrt(4-z) + sqrt(z) arcsin(sqrt(z)/2)) / (4-z)^(3/2)."""
    with ctx.working():
        zv = to_mpc(z)
        _check_off_cut(zv)
        root = mp.sqrt(4 - zv)
        value = 4 * (root + mp.sqrt(zv) * mp.asin(mp.sqrt(zv) / 2)) / root**3
    return ApComplex.wrap(value, ctx.digits)


def _check_off_cut(zv: "mp.mpc") -> None:
    if zv.imag == 0 and zv.real >= 4:
        raise DivergenceError("closed forms are undefined on [4, oo)")


# ---------------------------------------------------------------------------
# the alternating series in the parameter w and its closed forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WParam:
    """Admissible parameter of the trilog identity:
    |w| <= 1, Re w > 0, Im w >= 0, |1 - w^2| <= 2|w|."""

    w: object

    def validate(self) -> "mp.mpc":
        wv = to_mpc(self.w)
        tol = mp.mpf(10) ** (-(mp.dps - 6))
        if not (abs(wv) <= 1 + tol and wv.real > 0 and wv.imag >= -tol):
            raise ValueError(f"w = {wv} outside the admissible domain")
        if abs(1 - wv * wv) > 2 * abs(wv) * (1 + tol):
            raise ValueError(f"|1 - w^2| <= 2|w| fails for w = {wv}")
        return wv


def alternating_w_series(k: int, w, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """sum_n (-1)^n x^(2n+1) / ((2n+1)^k C(2n,n)),  x = (1-w^2)/w.

    Equals x * S_k(-x^2) inside the convergence domain |x| <= 2 and the
    contour continuation for Re w > 0 otherwise.
    """
    with ctx.working():
        wv = to_mpc(w)
        x = (1 - wv * wv) / wv
        if abs(x) <= mp.mpf(10) ** (-ctx.wdigits):
            return ApComplex.wrap(mp.mpc(0), ctx.digits)
        if abs(x) <= 2:
            inner = s_series(SeriesSpec(k, -x * x), ctx)
            return ApComplex.wrap(x * inner.mpc, ctx.digits)
        if wv.real <= 0:
            raise DivergenceError("|x| > 2 requires Re w > 0 for the continuation")
    return quadrature.sk_alternating_contour(k, wv, ctx)


def trilog_identity_lhs(p: WParam, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Left side of the trilog identity: the k = 3 alternating w-series."""
    with ctx.working():
        wv = p.validate()
    return alternating_w_series(3, wv, ctx)


def trilog_identity_rhs(p: WParam, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Closed form of the k = 3 alternating w-series:

        -2[Li3((1+w)/2) - Li3((1-w)/2) - Li3((1+1/w)/2) + Li3((1-1/w)/2)]
        + [Li2((1+w)/2) - Li2((1-w)/2) + Li2((1+1/w)/2) - Li2((1-1/w)/2)] log w
        + pi*i*log((1+w)/2)*log((1+1/w)/2).

    For real w the Li arguments (1 +- 1/w)/2 can exceed 1; they are taken
    as the Im w -> 0+ limit, which lands on the LOWER side of the cut
    because Im(1/w) -> 0-.
    """
    with ctx.working():
        wv = p.validate()
        real_w = wv.imag == 0
        if real_w:
            wv = mp.mpc(wv.real, 0)
        inv = 1 / wv
        a_plus, a_minus = (1 + wv) / 2, (1 - wv) / 2
        b_plus, b_minus = (1 + inv) / 2, (1 - inv) / 2
        side = "lower" if real_w else "auto"
        li3 = (
            li_raw(3, a_plus)
            - li_raw(3, a_minus)
            - li_raw(3, b_plus, side)
            + li_raw(3, b_minus, side)
        )
        li2 = (
            li_raw(2, a_plus)
            - li_raw(2, a_minus)
            + li_raw(2, b_plus, side)
            - li_raw(2, b_minus, side)
        )
        value = (
            -2 * li3
            + li2 * mp.log(wv)
            + mp.pi * mp.mpc(0, 1) * mp.log(a_plus) * mp.log(b_plus)
        )
    return ApComplex.wrap(value, ctx.digits)


def dilog_reduction_rhs(w, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Closed form of the k = 2 alternating w-series for real 0 < w < 1:

        -2[Li2(w) - Li2(-w)] - 2 log w log((1-w)/(1+w)) + pi^2/2.
    """
    with ctx.working():
        wv = to_mpc(w)
        if not (wv.imag == 0 and 0 < wv.real < 1):
            raise ValueError("the dilog reduction is stated for real 0 < w < 1")
        value = (
            -2 * (li_raw(2, wv) - li_raw(2, -wv))
            - 2 * mp.log(wv) * mp.log((1 - wv) / (1 + wv))
            + mp.pi**2 / 2
        )
    return ApComplex.wrap(value, ctx.digits)


def derivative_ladder_value(k: int, x, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """f_k(x) = sum x^(2n+1) / ((2n+1)^k C(2n,n)) = x * S_k(x^2).

    Satisfies x f_k'(x) = f_{k-1}(x); exposed for the finite-difference
    property checks.
    """
    with ctx.working():
        xv = to_mpc(x)
        inner = s_series(SeriesSpec(k, xv * xv), ctx)
        return ApComplex.wrap(xv * inner.mpc, ctx.digits)
