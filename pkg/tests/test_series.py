from fractions import Fraction as F

import pytest
from mpmath import mp

import reference_values as ref
from invbinom.precision import DivergenceError, PrecisionCtx
from invbinom.series import (
    SeriesSpec,
    WParam,
    alternating_w_series,
    chudnovsky_series,
    dilog_reduction_rhs,
    s0_closed,
    s1_closed,
    s_series,
    trilog_identity_lhs,
    trilog_identity_rhs,
)
from properties import prop_derivative_ladder, prop_series_vs_closed

CTX = PrecisionCtx(40)


def test_series_at_zero_is_one():
    for k in (0, 1, 3, 6):
        assert s_series(SeriesSpec(k, 0), CTX).mpc == 1


def test_series_positive_cubic_value():
    with CTX.working():
        got = s_series(SeriesSpec(3, F(1)), CTX).mpc
        assert abs(got - mp.mpf(ref.S3_POS)) < mp.mpf(10) ** -45


def test_series_alternating_cubic_value():
    with CTX.working():
        got = s_series(SeriesSpec(3, F(-1)), CTX).mpc
        assert abs(got - mp.mpf(ref.S3_NEG)) < mp.mpf(10) ** -45


def test_series_k1_classical_value():
    with CTX.working():
        got = s_series(SeriesSpec(1, F(1)), CTX).mpc
        assert abs(got - 2 * mp.pi / (3 * mp.sqrt(3))) < mp.mpf(10) ** -45


def test_series_domain_errors():
    with pytest.raises(DivergenceError):
        s_series(SeriesSpec(3, F(9, 2)), CTX)
    with pytest.raises(DivergenceError):
        s_series(SeriesSpec(1, F(4)), CTX)
    with pytest.raises(ValueError):
        SeriesSpec(-1, 1)


def test_series_boundary_routes_through_integrals():
    # z = -4 has an admissible contour parameter; z = 4 falls back to the
    # real-axis representation; both must agree with the catalog closed
    # forms to working accuracy (checked roughly here, fully in verify).
    ctx = PrecisionCtx(30)
    with ctx.working():
        v_neg = s_series(SeriesSpec(3, F(-4)), ctx).mpc
        v_pos = s_series(SeriesSpec(3, F(4)), ctx).mpc
        # independent low-precision checks: Richardson-free partial sums of
        # the boundary series are hopeless, so compare against the other
        # pathway instead: the k=3 line integral at c = 2i gives S_3(-4).
        from invbinom.quadrature import sk_line_integral

        line_neg = sk_line_integral(3, mp.mpc(0, 2), ctx).mpc / (mp.mpc(0, 1) * mp.mpc(0, 2))
        assert abs(v_neg - line_neg) < mp.mpf(10) ** -25
        assert abs(v_pos - mp.mpf("1.1226900247306444975842722144")) < mp.mpf(10) ** -25


def test_closed_forms_spot_values():
    with CTX.working():
        assert abs(s1_closed(1, CTX).mpc - 2 * mp.pi / (3 * mp.sqrt(3))) < mp.mpf(10) ** -44
        assert abs(s1_closed(2, CTX).mpc - mp.pi / 2) < mp.mpf(10) ** -44
        assert s0_closed(0, CTX).mpc == 1
    with pytest.raises(DivergenceError):
        s1_closed(4, CTX)
    with pytest.raises(DivergenceError):
        s0_closed(5, CTX)


def test_series_matches_closed_forms():
    prop_series_vs_closed(digits=35)


def test_derivative_ladder():
    prop_derivative_ladder()


def test_chudnovsky_series_value():
    with CTX.working():
        got = chudnovsky_series(CTX).mpc
        assert abs(got - mp.mpf(ref.CHUDNOVSKY)) < mp.mpf(10) ** -45


def test_trilog_lhs_trivial_zero_at_w_equal_one():
    with CTX.working():
        assert abs(trilog_identity_lhs(WParam(1), CTX).mpc) < mp.mpf(10) ** -45
        assert abs(trilog_identity_rhs(WParam(1), CTX).mpc) < mp.mpf(10) ** -40


def test_trilog_lhs_recovers_unit_arguments():
    with CTX.working():
        # w = e^{i pi/6}: x = -i, so lhs = -i * S_3(1)
        w = mp.expjpi(mp.mpf(1) / 6)
        lhs = trilog_identity_lhs(WParam(w), CTX).mpc
        assert abs(lhs - mp.mpc(0, -1) * mp.mpf(ref.S3_POS)) < mp.mpf(10) ** -42
        # w = (sqrt 5 - 1)/2: x = 1, so lhs = S_3(-1)
        w = (mp.sqrt(5) - 1) / 2
        lhs = trilog_identity_lhs(WParam(w), CTX).mpc
        assert abs(lhs - mp.mpf(ref.S3_NEG)) < mp.mpf(10) ** -42


def test_trilog_identity_on_real_w_exercises_cut_side():
    with CTX.working():
        p = WParam(mp.mpf("0.6"))
        lhs = trilog_identity_lhs(p, CTX).mpc
        rhs = trilog_identity_rhs(p, CTX).mpc
        assert abs(lhs - rhs) < mp.mpf(10) ** -(CTX.digits - 10)
        assert abs(rhs.imag) < mp.mpf(10) ** -40  # real w gives a real value


def test_wparam_rejects_out_of_domain():
    with pytest.raises(ValueError):
        trilog_identity_lhs(WParam(mp.mpc(-0.5, 0.2)), CTX)
    with pytest.raises(ValueError):
        trilog_identity_lhs(WParam(mp.mpf("0.2")), CTX)  # |1-w^2| > 2|w|


@pytest.mark.parametrize("w", ["0.25", "0.5", "0.75"])
def test_dilog_reduction_for_k2(w):
    # w = 0.25 makes |x| > 2: the series diverges and the value is the
    # contour continuation of the 3F2 form.
    with CTX.working():
        wv = mp.mpf(w)
        lhs = alternating_w_series(2, wv, CTX).mpc
        rhs = dilog_reduction_rhs(wv, CTX).mpc
        assert abs(lhs - rhs) < mp.mpf(10) ** -(CTX.digits - 10)
