"""Working-precision plumbing shared by every numeric module.

All arithmetic runs on mpmath (mpf/mpc) at ``digits + guard`` decimal
digits; public operations report values tagged with the number of digits
they are trusted to.  Precision is process-global state in mpmath, so the
helpers here are the only place allowed to touch ``mp.dps``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from mpmath import mp

Number = Union[int, float, complex, Fraction, "mp.mpf", "mp.mpc"]


class EvaluationError(Exception):
    """Base class for every numeric failure raised by this package."""


class PrecisionUnreachableError(EvaluationError):
    """A tail bound or agreement target could not be met within its cap."""


class DivergenceError(EvaluationError):
    """The requested object does not converge (pole, bad domain, ...)."""


class NonFiniteError(EvaluationError):
    """A NaN or infinity appeared where a finite value is required."""


class BranchTrackingError(EvaluationError):
    """Branch continuity along a contour could not be resolved."""


class QuadratureError(PrecisionUnreachableError):
    """tanh-sinh level doubling hit its cap without two-level agreement."""


@dataclass(frozen=True)
class PrecisionCtx:
    """Target precision: ``digits`` reported, ``guard`` extra working digits."""

    digits: int = 40
    guard: int = 10

    def __post_init__(self) -> None:
        if self.digits < 10:
            raise ValueError(f"digits must be >= 10, got {self.digits}")
        if self.guard < 0:
            raise ValueError(f"guard must be >= 0, got {self.guard}")

    @property
    def wdigits(self) -> int:
        """Decimal digits used for intermediate arithmetic."""
        return self.digits + self.guard

    def working(self, extra: int = 0):
        """Context manager running the body at ``wdigits + extra`` dps."""
        return mp.workdps(self.wdigits + extra)

    def eps(self, extra: int = 0):
        """10**-(wdigits + extra), as an mpf at the current precision."""
        return mp.mpf(10) ** (-(self.wdigits + extra))

    def widened(self) -> "PrecisionCtx":
        """Same target with doubled guard digits (retry policy)."""
        return replace(self, guard=max(1, self.guard) * 2)


DEFAULT_CTX = PrecisionCtx()


def to_mpc(value: Number) -> "mp.mpc":
    """Convert a closed-form number to mpc at the current working precision."""
    if isinstance(value, Fraction):
        return mp.mpc(mp.mpf(value.numerator) / value.denominator)
    if isinstance(value, complex):
        return mp.mpc(value.real, value.imag)
    return mp.mpc(value)


def is_finite(z: "mp.mpc") -> bool:
    return mp.isfinite(z.real) and mp.isfinite(z.imag)


@dataclass(frozen=True)
class ApComplex:
    """An arbitrary-precision complex value trusted to ``prec`` digits.

    The stored mpf parts keep their full working precision; ``prec`` is the
    number of leading decimal digits the producing operation vouches for.
    """

    re: "mp.mpf"
    im: "mp.mpf"
    prec: int

    @classmethod
    def wrap(cls, value, prec: int) -> "ApComplex":
        # mpf/mpc parts are stored as-is: re-converting through mp.mpc()
        # would round them to the *ambient* precision.
        if isinstance(value, mp.mpc):
            re, im = value.real, value.imag
        elif isinstance(value, mp.mpf):
            re, im = value, mp.mpf(0)
        else:
            z = to_mpc(value)
            re, im = z.real, z.imag
        if not (mp.isfinite(re) and mp.isfinite(im)):
            raise NonFiniteError(f"non-finite value {value!r}")
        return cls(re, im, prec)

    @property
    def mpc(self) -> "mp.mpc":
        # raw construction: mp.mpc(re, im) would round to the ambient dps
        return mp.make_mpc((self.re._mpf_, self.im._mpf_))

    @property
    def is_real(self) -> bool:
        scale = max(abs(self.re), mp.mpf(1))
        return abs(self.im) <= scale * mp.mpf(10) ** (-self.prec)

    def __str__(self) -> str:
        if self.is_real:
            return mp.nstr(self.re, self.prec)
        return mp.nstr(self.mpc, self.prec)


def with_guard_retries(fn, ctx: PrecisionCtx, retries: int = 2):
    """Run ``fn(ctx)``, doubling guard digits on PrecisionUnreachableError.

    Retries at most ``retries`` times, then re-raises.
    """
    attempt = ctx
    for _ in range(retries):
        try:
            return fn(attempt)
        except PrecisionUnreachableError:
            attempt = attempt.widened()
    return fn(attempt)
