"""tanh-sinh quadrature on straight complex segments, and the integral
representations of the inverse central-binomial series.

The double-exponential transform x = tanh((pi/2) sinh u) clusters nodes at
the endpoints, so logarithmic endpoint singularities converge at spectral
rate without subdivision.  Levels double (h -> h/2, reusing prior nodes)
until two successive levels agree to the working tolerance.

Contour integrands use the principal log of the full product argument plus
an explicit 2*pi*i winding correction.  The winding count is tracked by
marching the product along the segment in float precision (it is integer-
valued, so floats suffice) with bisection wherever the argument jumps by
more than pi/2 between neighbours.
"""

from __future__ import annotations

import bisect
import cmath
import math
from dataclasses import dataclass

from mpmath import mp

from .polylog import li_raw
from .precision import (
    ApComplex,
    BranchTrackingError,
    DEFAULT_CTX,
    DivergenceError,
    NonFiniteError,
    PrecisionCtx,
    QuadratureError,
    to_mpc,
)

_LEVEL_CAP = 12
_MIN_LEVEL = 4
_QUAD_EXTRA_DPS = 10

_TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class Segment:
    """Straight segment from z0 to z1 in the complex plane."""

    z0: object
    z1: object

    def __post_init__(self) -> None:
        if to_mpc(self.z0) == to_mpc(self.z1):
            raise ValueError("segment endpoints must differ")


@dataclass(frozen=True)
class QuadResult:
    value: ApComplex
    error_estimate: object  # mpf: difference of the last two doubling levels
    levels_used: int


_node_cache: dict = {}


def _nodes(level: int):
    """Positive tanh-sinh nodes (x, 1-x, weight) for spacing 2**-level."""
    key = (mp.prec, level)
    cached = _node_cache.get(key)
    if cached is not None:
        return cached
    h = mp.mpf(2) ** (-level)
    y_max = (mp.dps + 8) * mp.log(10) / 2
    u_max = mp.asinh(2 * y_max / mp.pi)
    k_max = int(mp.floor(u_max / h)) + 1
    ks = range(0, k_max + 1) if level == 1 else range(1, k_max + 1, 2)
    out = []
    for k in ks:
        u = k * h
        y = mp.pi / 2 * mp.sinh(u)
        e2y = mp.exp(2 * y)
        one_minus_x = 2 / (e2y + 1)
        x = 1 - one_minus_x
        w = mp.pi / 2 * mp.cosh(u) / mp.cosh(y) ** 2
        out.append((x, one_minus_x, w))
    _node_cache[key] = out
    return out


def tanh_sinh_01(g, tol, level_cap: int = _LEVEL_CAP):
    """integral_0^1 g(t, 1-t) dt by tanh-sinh level doubling.

    ``g`` receives both t and 1-t so integrands can form endpoint
    distances without cancellation.  Returns (value, error, levels).
    """
    total = mp.mpc(0)
    previous = None
    for level in range(1, level_cap + 1):
        h = mp.mpf(2) ** (-level)
        chunk = mp.mpc(0)
        for x, om, w in _nodes(level):
            half_om = om / 2
            if x == 0:
                samples = (g(mp.mpf(1) / 2, mp.mpf(1) / 2),)
            else:
                samples = (g(1 - half_om, half_om), g(half_om, 1 - half_om))
            for value in samples:
                value = mp.mpc(value)
                if not (mp.isfinite(value.real) and mp.isfinite(value.imag)):
                    raise NonFiniteError("non-finite integrand sample")
                chunk += w * value
        total = total / 2 + h / 2 * chunk if level > 1 else h / 2 * chunk
        if previous is not None and level >= _MIN_LEVEL:
            err = abs(total - previous)
            if err <= tol * max(mp.mpf(1), abs(total)):
                return total, err, level
        previous = total
    raise QuadratureError(
        f"tanh-sinh did not reach tolerance {mp.nstr(tol, 3)} within {level_cap} levels"
    )


def integrate_segment(f, seg: Segment, ctx: PrecisionCtx = DEFAULT_CTX) -> QuadResult:
    """Integrate ``f`` along the open segment; endpoint log singularities OK."""
    with ctx.working(_QUAD_EXTRA_DPS):
        z0, z1 = to_mpc(seg.z0), to_mpc(seg.z1)
        delta = z1 - z0

        def g(t, mt):
            z = z0 + delta * t if t <= mp.mpf(1) / 2 else z1 - delta * mt
            return f(z)

        value, err, levels = tanh_sinh_01(g, mp.mpf(10) ** (-(ctx.wdigits + 2)))
        value = delta * value
        err = abs(delta) * err
    return QuadResult(ApComplex.wrap(value, ctx.digits), err, levels)


class _ContinuousArg:
    """Winding tracker for a nonvanishing product along a parameterized path.

    Marches ``fn`` (a float-precision model of the product) over [lo, hi],
    bisecting until neighbouring principal arguments differ by at most
    pi/2, then answers integer winding counts for query points.  Winding is
    integer-valued, so float marching is exact for any sane margin.
    """

    def __init__(self, fn, lo: float = 1e-9, hi: float = 1 - 1e-9,
                 base_points: int = 129, max_depth: int = 14):
        self._ts = [lo]
        z = fn(lo)
        theta = cmath.phase(z)
        self._principal = [theta]
        self._cont = [theta]
        step = (hi - lo) / (base_points - 1)
        prev_t, prev_z, cont = lo, z, theta
        for k in range(1, base_points):
            t = lo + k * step
            prev_t, prev_z, cont = self._march(fn, prev_t, prev_z, cont, t, fn(t), 0,
                                               max_depth)
        self._period_offsets = [
            round((c - p) / _TWO_PI) for c, p in zip(self._cont, self._principal)
        ]

    def _march(self, fn, t0, z0, cont0, t1, z1, depth, max_depth):
        delta = cmath.phase(z1 / z0)
        if abs(delta) <= math.pi / 2:
            cont1 = cont0 + delta
            self._ts.append(t1)
            self._principal.append(cmath.phase(z1))
            self._cont.append(cont1)
            return t1, z1, cont1
        if depth >= max_depth:
            raise BranchTrackingError(
                "argument jump exceeded pi/2 after maximal subdivision"
            )
        tm = (t0 + t1) / 2
        zm = fn(tm)
        t0, z0, cont0 = self._march(fn, t0, z0, cont0, tm, zm, depth + 1, max_depth)
        return self._march(fn, t0, z0, cont0, t1, z1, depth + 1, max_depth)

    def winding(self, t: float, principal_theta: float) -> int:
        """2*pi winding count at parameter t, given the principal argument."""
        idx = bisect.bisect_left(self._ts, t)
        if idx >= len(self._ts):
            idx = len(self._ts) - 1
        elif idx > 0 and t - self._ts[idx - 1] < self._ts[idx] - t:
            idx -= 1
        delta = principal_theta - self._principal[idx]
        delta -= _TWO_PI * round(delta / _TWO_PI)
        cont_est = self._cont[idx] + delta
        return round((cont_est - principal_theta) / _TWO_PI)


def _tracked_log(value: "mp.mpc", t, tracker: _ContinuousArg) -> "mp.mpc":
    principal = mp.log(value)
    k = tracker.winding(float(t), float(principal.imag))
    if k == 0:
        return principal
    return principal + 2 * mp.pi * k * mp.mpc(0, 1)


# ---------------------------------------------------------------------------
# integral representations of the inverse binomial series
# ---------------------------------------------------------------------------


def _alt_series_segment(k: int, amp: "mp.mpc", z0: "mp.mpc", z1: "mp.mpc", tol):
    """One straight piece of the contour representation.

    Integrates log^(k-2)(amp * z/(1+z^2)) * log(z/i) / (1+z^2) over the
    segment, with both logs winding-tracked.  One endpoint equals i, where
    the integrand is log-singular; z - i is formed from the endpoint offset
    (exactly zero at that end), so the pole factor never cancels.
    """
    ii = mp.mpc(0, 1)
    delta = z1 - z0
    z0f, deltaf, ampf = complex(z0), complex(delta), complex(amp)
    off0, off1 = z0 - ii, z1 - ii
    half = mp.mpf(1) / 2

    def zf(t: float) -> complex:
        return z0f + deltaf * t

    track_p = None
    if k > 2:
        track_p = _ContinuousArg(lambda t: ampf * zf(t) / (1 + zf(t) * zf(t)))
    track_l = _ContinuousArg(lambda t: zf(t) / 1j)

    def g(t, mt):
        if t <= half:
            z = z0 + delta * t
            z_minus_i = off0 + delta * t
        else:
            z = z1 - delta * mt
            z_minus_i = off1 - delta * mt
        one_plus_z2 = z_minus_i * (z + ii)
        log_z = _tracked_log(z / ii, t, track_l)
        if k == 2:
            return log_z / one_plus_z2
        log_p = _tracked_log(amp * z / one_plus_z2, t, track_p)
        return log_p ** (k - 2) * log_z / one_plus_z2

    value, err, levels = tanh_sinh_01(g, tol)
    return delta * value, abs(delta) * err, levels


def sk_alternating_contour(k: int, w, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """sum_n (-1)^n x^(2n+1) / ((2n+1)^k C(2n,n))  with  x = (1-w^2)/w,
    evaluated as the two-segment contour integral from i*w to i to i/w.

    Valid for Im(i*w) > 0 and Im(i/w) > 0, i.e. Re(w) > 0; this is also the
    analytic continuation of the series when |x| > 2.
    """
    if not isinstance(k, int) or not 2 <= k <= 6:
        raise ValueError(f"k must be an integer in 2..6, got {k}")
    with ctx.working(_QUAD_EXTRA_DPS):
        wv = to_mpc(w)
        ii = mp.mpc(0, 1)
        if not ((ii * wv).imag > 0 and (ii / wv).imag > 0):
            raise DivergenceError(
                "contour representation needs Im(i*w) > 0 and Im(i/w) > 0"
            )
        amp = (1 - wv * wv) / (ii * wv)
        tol = mp.mpf(10) ** (-(ctx.wdigits + 2))
        v1, e1, _ = _alt_series_segment(k, amp, ii * wv, ii, tol)
        v2, e2, _ = _alt_series_segment(k, -amp, ii, ii / wv, tol)
        value = 2 * ii / mp.factorial(k - 2) * (v1 + v2)
    return ApComplex.wrap(value, ctx.digits)


def sk_line_integral(k: int, c, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """sum_n (-1)^n (i c)^(2n+1) / ((2n+1)^k C(2n,n)) as a real-axis integral:

        2i * integral_0^1 [Li_{k-1}(c u) - Li_{k-1}(-c u)] / (1+x^2) dx,
        u = x/(1+x^2).

    Valid for |c| <= 2 (the beta-integral representation with dominated
    convergence); this covers the series boundary |z| = 4 where no
    admissible contour parameter exists.
    """
    if not isinstance(k, int) or not 2 <= k <= 5:
        raise ValueError(f"k must be an integer in 2..5, got {k}")
    with ctx.working(_QUAD_EXTRA_DPS):
        cv = to_mpc(c)
        if abs(cv) > 2 + mp.mpf(10) ** (-ctx.digits):
            raise DivergenceError("line representation needs |c| <= 2")

        def g(t, mt):
            u = t / (1 + t * t)
            return (li_raw(k - 1, cv * u) - li_raw(k - 1, -cv * u)) / (1 + t * t)

        value, err, _ = tanh_sinh_01(g, mp.mpf(10) ** (-(ctx.wdigits + 2)))
        value = 2 * mp.mpc(0, 1) * value
    return ApComplex.wrap(value, ctx.digits)


def s3_positive_integral(ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """2 * integral_0^1 [Li_2(x/(1+x^2)) - Li_2(-x/(1+x^2))] / (1+x^2) dx.

    Equals the k = 3, z = 1 inverse binomial series.
    """
    with ctx.working(_QUAD_EXTRA_DPS):
        def g(t, mt):
            u = t / (1 + t * t)
            return (li_raw(2, u) - li_raw(2, -u)) / (1 + t * t)

        value, err, _ = tanh_sinh_01(g, mp.mpf(10) ** (-(ctx.wdigits + 2)))
        value = 2 * value
    return ApComplex.wrap(value, ctx.digits)


def s3_alternating_contour(ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Two-segment contour from i/phi to i to i*phi, phi the golden ratio.

    Equals the k = 3, z = -1 inverse binomial series (w = (sqrt(5)-1)/2
    makes (1-w^2)/w = 1).
    """
    with ctx.working(_QUAD_EXTRA_DPS):
        w = (mp.sqrt(5) - 1) / 2
    return sk_alternating_contour(3, w, ctx)


def gpl_recursive_quadrature(letters, z, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Reference G-function value by directly nesting the defining integrals.

    G(a_1..a_n; z) = integral_0^z G(a_2..a_n; x) / (x - a_1) dx, evaluated
    with one tanh-sinh quadrature per recursion level.  Independent of
    gpl_eval; intended as a cross-check, cost grows fast with word length.
    """
    with ctx.working(_QUAD_EXTRA_DPS):
        zv = to_mpc(z)
        letters = tuple(to_mpc(l) for l in letters)
        tol = mp.mpf(10) ** (-(ctx.wdigits + 2))
        value = _gpl_quad_raw(letters, zv, tol)
    return ApComplex.wrap(value, ctx.digits)


def _gpl_quad_raw(letters, z, tol):
    n = len(letters)
    if n == 0:
        return mp.mpc(1)
    if all(l == 0 for l in letters):
        return mp.log(z) ** n / mp.factorial(n)
    head, rest = letters[0], letters[1:]

    def g(t, mt):
        x = z * t
        return _gpl_quad_raw(rest, x, tol / 4) / (x - head)

    value, _, _ = tanh_sinh_01(g, tol, level_cap=10)
    return z * value
