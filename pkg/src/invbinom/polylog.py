"""Polylogarithms Li_s, multiple polylogarithms, and Goncharov G-functions.

Li_s uses three regimes on the principal branch (cut along [1, oo)):

* |z| <= 0.95            direct power series with a geometric tail bound;
* 0.95 < |z| <= 1.3      the log-series Li_s(e^mu) in powers of mu = log z,
                         with zeta values at non-positive integers;
* |z| > 1.3              the inversion formula down to Li_s(1/z).

On the cut (real z > 1) the ``side`` argument selects the limit from above
(``upper``, the default for ``auto``) or below, which fixes the sign in the
jump relation Li_s(x+i0) - Li_s(x-i0) = 2*pi*i*log(x)**(s-1)/(s-1)!.

Multiple polylogarithms are summed by nested prefix sums with a rigorous
geometric tail whenever every partial product |z_1...z_j| stays below 1,
and by doubling agreement on the unit circle.  G-functions convert to MPLs
when the argument/letter ratio is small enough and otherwise go through
the Hoelder convolution at the midpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from mpmath import mp

from .hurwitz import zeta_int, zeta_nonpositive
from .precision import (
    ApComplex,
    DEFAULT_CTX,
    DivergenceError,
    NonFiniteError,
    PrecisionUnreachableError,
    PrecisionCtx,
    to_mpc,
)
from .words import remove_trailing_zeros, trailing_zero_count

_SERIES_RADIUS = 0.95
_INVERSION_RADIUS = 1.3
_MPL_RIGOROUS_RADIUS = 0.97
_MPL_TERM_CAP = 400_000
_GPL_RATIO = 0.9
_GPL_DEPTH_CAP = 64

_SIDES = ("auto", "upper", "lower")

_HARMONIC = [Fraction(0), Fraction(1), Fraction(3, 2), Fraction(11, 6)]


def _require_side(side: str) -> str:
    if side not in _SIDES:
        raise ValueError(f"side must be one of {_SIDES}, got {side!r}")
    return "upper" if side == "auto" else side


def _eps_here():
    return mp.mpf(10) ** (-(mp.dps - 2))


def li_raw(s: int, z, side: str = "auto") -> "mp.mpc":
    """Li_s(z) at the current working precision (mpc in, mpc out)."""
    if not isinstance(s, int) or not 1 <= s <= 4:
        raise ValueError(f"polylogarithm order must be an integer in 1..4, got {s}")
    side = _require_side(side)
    z = to_mpc(z)
    if not (mp.isfinite(z.real) and mp.isfinite(z.imag)):
        raise NonFiniteError(f"non-finite polylog argument {z!r}")
    if s == 1:
        if z == 1:
            raise DivergenceError("Li_1 has a pole at z = 1")
        return _log_one_minus(z, side)
    if z == 0:
        return mp.mpc(0)
    if z == 1:
        return mp.mpc(zeta_int(s))
    r = abs(z)
    if r <= _SERIES_RADIUS:
        return _li_series(s, z)
    if r <= _INVERSION_RADIUS:
        return _li_log_series(s, z, side)
    return _li_inversion(s, z, side)


def li(s: int, z, side: str = "auto", ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Polylogarithm Li_s(z), principal branch with cut [1, oo)."""
    with ctx.working():
        value = li_raw(s, z, side)
    return ApComplex.wrap(value, ctx.digits)


def _log_one_minus(z: "mp.mpc", side: str) -> "mp.mpc":
    # -log(1-z); for real z > 1 the side picks the branch of log(negative).
    if z.imag == 0 and z.real > 1:
        mag = mp.log(z.real - 1)
        return -(mag - mp.pi * 1j) if side == "upper" else -(mag + mp.pi * 1j)
    return -mp.log(1 - z)


def _li_series(s: int, z: "mp.mpc") -> "mp.mpc":
    eps = _eps_here()
    r = abs(z)
    total = mp.mpc(0)
    zpow = mp.mpc(1)
    n = 0
    inv_gap = 1 / (1 - r)
    while True:
        n += 1
        zpow *= z
        total += zpow / mp.mpf(n) ** s
        # tail <= |z|^(n+1) / ((n+1)^s (1-|z|))
        if abs(zpow) * r * inv_gap / mp.mpf(n + 1) ** s < eps:
            return total
        if n > 200 * mp.dps:
            raise PrecisionUnreachableError("polylog series did not meet its tail bound")


def _li_log_series(s: int, z: "mp.mpc", side: str) -> "mp.mpc":
    # Li_s(e^mu) = mu^(s-1)/(s-1)! (H_{s-1} - log(-mu)) + sum_{j != s-1} zeta(s-j) mu^j / j!
    eps = _eps_here()
    mu = mp.log(z)
    if z.imag == 0 and z.real > 1:
        log_neg_mu = mp.log(mu) + (-1j if side == "upper" else 1j) * mp.pi
    else:
        log_neg_mu = mp.log(-mu)
    h = _HARMONIC[s - 1]
    total = mu ** (s - 1) / mp.factorial(s - 1) * (
        mp.mpf(h.numerator) / h.denominator - log_neg_mu
    )
    mupow = mp.mpc(1)
    j = 0
    while True:
        if j != s - 1:
            if j < s:
                zv = mp.mpf(zeta_int(s - j)) if s - j >= 2 else None
            else:
                frac = zeta_nonpositive(j - s)
                zv = None if frac == 0 else mp.mpf(frac.numerator) / frac.denominator
            if zv is not None:
                term = zv * mupow / mp.factorial(j)
                total += term
                if j > s + 3 and abs(term) < eps / 4:
                    return total
        j += 1
        mupow *= mu
        if j > 40 * mp.dps:
            raise PrecisionUnreachableError("polylog log-series did not converge")


def _li_inversion(s: int, z: "mp.mpc", side: str) -> "mp.mpc":
    if z.imag == 0 and z.real > 1:
        ln_neg_z = mp.log(z.real) + (-1j if side == "upper" else 1j) * mp.pi
    else:
        ln_neg_z = mp.log(-z)
    inv = _li_series(s, 1 / z)
    pi = mp.pi
    if s == 2:
        return -inv - pi**2 / 6 - ln_neg_z**2 / 2
    if s == 3:
        return inv - pi**2 * ln_neg_z / 6 - ln_neg_z**3 / 6
    return -inv - 7 * pi**4 / 360 - pi**2 * ln_neg_z**2 / 12 - ln_neg_z**4 / 24


# ---------------------------------------------------------------------------
# multiple polylogarithms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MplSpec:
    """Depth-m weight vector and argument vector of Li_{s_1..s_m}(z_1..z_m)."""

    weights: Tuple[int, ...]
    args: Tuple[object, ...]

    def __post_init__(self) -> None:
        if len(self.weights) < 1 or len(self.weights) != len(self.args):
            raise ValueError("weights and args must be equal-length, non-empty")
        if any((not isinstance(s, int)) or s < 1 for s in self.weights):
            raise ValueError("weights must be positive integers")

    @property
    def depth(self) -> int:
        return len(self.weights)

    @property
    def weight(self) -> int:
        return sum(self.weights)

    def partial_product_magnitudes(self) -> list[float]:
        mags = []
        acc = complex(1)
        for a in self.args:
            acc *= complex(to_mpc(a))
            mags.append(abs(acc))
        return mags

    def is_convergent(self, tol: float = 1e-12) -> bool:
        mags = self.partial_product_magnitudes()
        if any(m > 1 + tol for m in mags):
            return False
        if self.weights[0] == 1 and abs(complex(to_mpc(self.args[0])) - 1) <= tol:
            return False
        return True


def mpl_direct(spec: MplSpec, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Truncated nested sum  sum_{n1 > ... > nm >= 1} prod z_j^{n_j} / n_j^{s_j}.

    Rigorous geometric tail when every |z_1...z_j| < 1; doubling-agreement
    heuristic on the unit circle.  This is the independent oracle for
    gpl_eval.
    """
    if not spec.is_convergent():
        raise DivergenceError(f"divergent multiple polylogarithm {spec}")
    with ctx.working():
        args = tuple(to_mpc(a) for a in spec.args)
        value = _mpl_nested_raw(spec.weights, args, mp.mpf(10) ** (-(ctx.digits + 5)))
    return ApComplex.wrap(value, ctx.digits)


def _mpl_nested_raw(weights, args, eps) -> "mp.mpc":
    m = len(weights)
    r = mp.mpf(0)
    acc = mp.mpf(1)
    for a in args:
        acc *= abs(a)
        r = max(r, acc)
    partial = [mp.mpc(0)] * (m + 1)  # partial[j] = P_j(n); P_m+1 == 1 handled inline
    powers = [mp.mpc(1)] * m
    n = 0
    check_every = 64
    prev_probe = None
    while True:
        n += 1
        for j in range(m):  # ascending: partial[j+1] still holds level n-1
            powers[j] *= args[j]
            inner = partial[j + 1] if j + 1 < m else mp.mpc(1)
            partial[j] += powers[j] / mp.mpf(n) ** weights[j] * inner
        if n % check_every:
            continue
        if r <= _MPL_RIGOROUS_RADIUS:
            # tail over n1 > n:  sum_{G>n} C(G-1, m-1) r^G  (n_j^{-s_j} <= 1)
            rho = r * (mp.mpf(1) + mp.mpf(1) / n) ** (m - 1)
            if rho < 1:
                bound = mp.mpf(n + 1) ** (m - 1) * r ** (n + 1) / (1 - rho)
                if bound < eps:
                    return partial[0]
        else:
            if prev_probe is not None and abs(partial[0] - prev_probe) < eps:
                return partial[0]
            prev_probe = partial[0]
            check_every = min(2 * check_every, 8192)
        if n >= _MPL_TERM_CAP:
            raise PrecisionUnreachableError(
                f"multiple polylog needed more than {_MPL_TERM_CAP} terms"
            )


# ---------------------------------------------------------------------------
# G-functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GplWord:
    """Letter sequence (zeros allowed) and argument of G(a_1..a_n; z)."""

    letters: Tuple[object, ...]
    arg: object

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))

    @property
    def is_all_zero(self) -> bool:
        return len(self.letters) > 0 and all(l == 0 for l in self.letters)

    @property
    def is_convergent(self) -> bool:
        if not self.letters:
            return True
        return self.letters[0] != self.arg and self.letters[-1] != 0


def gpl_to_mpl(word: GplWord) -> tuple[int, MplSpec]:
    """Exact structural conversion G -> (-1)^n Li.

    Zeros preceding each nonzero letter become weight increments; the sign
    is (-1)^depth.  Requires a word without trailing zeros.
    """
    letters = tuple(word.letters)
    if not letters:
        raise ValueError("empty word has no MPL form")
    if all(l == 0 for l in letters):
        raise ValueError("all-zero word has no MPL form")
    if letters[-1] == 0:
        raise ValueError("trailing zero present; remove trailing zeros first")
    weights: list[int] = []
    alphas: list[object] = []
    run = 0
    for letter in letters:
        if letter == 0:
            run += 1
        else:
            weights.append(run + 1)
            alphas.append(letter)
            run = 0
    args = [word.arg / alphas[0]]
    for prev, cur in zip(alphas, alphas[1:]):
        args.append(prev / cur)
    sign = -1 if len(alphas) % 2 else 1
    return sign, MplSpec(tuple(weights), tuple(args))


def mpl_to_gpl(spec: MplSpec, z) -> GplWord:
    """Exact inverse of gpl_to_mpl:  Li(spec) = (-1)^depth G(word; z)."""
    if any(a == 0 for a in spec.args):
        raise ValueError("zero argument has no G-function preimage")
    letters: list[object] = []
    denom = None
    for s, a in zip(spec.weights, spec.args):
        denom = a if denom is None else denom * a
        letters.extend([0] * (s - 1))
        letters.append(z / denom)
    return GplWord(tuple(letters), z)


def gpl_eval(word: GplWord, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """G(a_1..a_n; z) for convergent words (a_1 != z after zero removal)."""
    with ctx.working():
        letters = tuple(to_mpc(l) for l in word.letters)
        value = _gpl_raw(letters, to_mpc(word.arg), 0)
    return ApComplex.wrap(value, ctx.digits)


def mpl_eval_raw(weights, args) -> "mp.mpc":
    """Li_{s}(z) nested sum via the fastest safe route at the current dps.

    Direct nested summation when every partial product stays below 0.9;
    otherwise through the G-function pipeline (Hoelder convolution), which
    converges geometrically even on the unit circle.
    """
    args = tuple(to_mpc(a) for a in args)
    acc, worst = mp.mpf(1), mp.mpf(0)
    for a in args:
        acc *= abs(a)
        worst = max(worst, acc)
    if worst <= _GPL_RATIO:
        return _mpl_nested_raw(weights, args, _eps_here())
    spec = MplSpec(tuple(weights), args)
    word = mpl_to_gpl(spec, mp.mpc(1))
    sign = -1 if spec.depth % 2 else 1
    return sign * _gpl_raw(tuple(to_mpc(l) for l in word.letters), mp.mpc(1), 0)


def _gpl_raw(letters: tuple, z: "mp.mpc", depth: int) -> "mp.mpc":
    if depth > _GPL_DEPTH_CAP:
        raise PrecisionUnreachableError("G-function recursion exceeded its depth cap")
    n = len(letters)
    if n == 0:
        return mp.mpc(1)
    if all(l == 0 for l in letters):
        if z == 0:
            raise DivergenceError("G(0,..,0; 0) is undefined")
        return mp.log(z) ** n / mp.factorial(n)
    tol = max(abs(z), mp.mpf(1)) * mp.mpf(10) ** (-(mp.dps - 6))
    if abs(letters[0] - z) <= tol:
        raise DivergenceError("leading letter equals the argument: divergent word")

    if letters[-1] == 0:
        combo = remove_trailing_zeros(letters)
        logz = mp.log(z)
        total = mp.mpc(0)
        for (sub, log_pow, _), coeff in combo.items():
            value = _gpl_raw(tuple(sub), z, depth + 1)
            total += mp.mpf(coeff.numerator) / coeff.denominator * value * logz**log_pow
        return total

    # The remaining pipeline is scale-invariant (G(k*a; k*z) = G(a; z) for
    # a_n != 0), so the route test uses the ratio |z| / min |a_j|.
    amin = min(abs(l) for l in letters if l != 0)
    if abs(z) <= _GPL_RATIO * amin:
        sign, spec = gpl_to_mpl(GplWord(letters, z))
        return sign * _mpl_nested_raw(spec.weights, tuple(spec.args), _eps_here())

    # Hoelder convolution at the midpoint: with b_j = a_j / z,
    # G(b; 1) = sum_j (-1)^j G(1-b_j,..,1-b_1; 1/2) G(b_{j+1},..,b_n; 1/2).
    b = tuple(l / z for l in letters)
    for bj in b:
        if bj.imag == 0 and 0 < bj.real < 1:
            raise DivergenceError(
                "letter on the open integration segment: g-function undefined"
            )
    half = mp.mpc(1, 0) / 2
    total = mp.mpc(0)
    sign = 1
    for j in range(n + 1):
        left = tuple(1 - b[i] for i in range(j - 1, -1, -1))
        right = b[j:]
        part = _gpl_raw(left, half, depth + 1) * _gpl_raw(right, half, depth + 1)
        total += sign * part
        sign = -sign
    return total


def evaluate_word_combination(combo, z, ctx: PrecisionCtx = DEFAULT_CTX,
                              const_value=None) -> ApComplex:
    """Numeric value of a WordCombination at argument z.

    ``const_value`` binds the symbolic scalar letter (required whenever the
    combination carries const powers).
    """
    with ctx.working():
        zc = to_mpc(z)
        logz = mp.log(zc) if any(m for (_, m, _) in combo.terms) else mp.mpc(0)
        cval = to_mpc(const_value) if const_value is not None else None
        total = mp.mpc(0)
        for (word, log_pow, const_pow), coeff in combo.items():
            if const_pow and cval is None:
                raise ValueError("combination has scalar-letter powers; pass const_value")
            value = _gpl_raw(tuple(to_mpc(l) for l in word), zc, 0)
            term = mp.mpf(coeff.numerator) / coeff.denominator * value
            if log_pow:
                term *= logz**log_pow
            if const_pow:
                term *= cval**const_pow
            total += term
    return ApComplex.wrap(total, ctx.digits)
