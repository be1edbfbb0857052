import pytest
from mpmath import mp

from invbinom.precision import (
    ApComplex,
    NonFiniteError,
    PrecisionCtx,
    PrecisionUnreachableError,
    to_mpc,
    with_guard_retries,
)


def test_ctx_validation():
    with pytest.raises(ValueError):
        PrecisionCtx(9)
    with pytest.raises(ValueError):
        PrecisionCtx(40, -1)
    ctx = PrecisionCtx(40, 10)
    assert ctx.wdigits == 50


def test_working_context_sets_dps():
    ctx = PrecisionCtx(30, 5)
    with ctx.working():
        assert mp.dps == 35
    with ctx.working(extra=7):
        assert mp.dps == 42


def test_apcomplex_preserves_precision_across_contexts():
    ctx = PrecisionCtx(50)
    with ctx.working():
        value = ApComplex.wrap(mp.mpf(2) ** mp.mpf("0.5"), ctx.digits)
    # ambient dps is small here; the stored value must stay at 60 digits
    with mp.workdps(70):
        assert abs(value.mpc ** 2 - 2) < mp.mpf(10) ** -58


def test_apcomplex_rejects_non_finite():
    with pytest.raises(NonFiniteError):
        ApComplex.wrap(mp.inf, 40)
    with pytest.raises(NonFiniteError):
        ApComplex.wrap(mp.mpc(mp.nan, 0), 40)


def test_apcomplex_str_real_vs_complex():
    ctx = PrecisionCtx(20)
    with ctx.working():
        r = ApComplex.wrap(mp.mpf(1) / 3, 20)
        c = ApComplex.wrap(mp.mpc(1, 1) / 3, 20)
    assert "i" not in str(r) and "j" not in str(r)
    assert str(c).startswith("(")


def test_to_mpc_handles_fractions_exactly():
    from fractions import Fraction

    with mp.workdps(40):
        v = to_mpc(Fraction(1, 3))
        assert abs(3 * v - 1) < mp.mpf(10) ** -38


def test_guard_retries_widen_then_succeed():
    attempts = []

    def flaky(ctx):
        attempts.append(ctx.guard)
        if len(attempts) < 3:
            raise PrecisionUnreachableError("not yet")
        return ctx.guard

    assert with_guard_retries(flaky, PrecisionCtx(40, 10)) == 40
    assert attempts == [10, 20, 40]


def test_guard_retries_exhausted():
    def always(ctx):
        raise PrecisionUnreachableError("no")

    with pytest.raises(PrecisionUnreachableError):
        with_guard_retries(always, PrecisionCtx(40, 10))
