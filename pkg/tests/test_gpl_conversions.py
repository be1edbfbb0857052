from fractions import Fraction as F

import pytest
from mpmath import mp

from invbinom.polylog import (
    GplWord,
    MplSpec,
    gpl_eval,
    gpl_to_mpl,
    mpl_direct,
    mpl_to_gpl,
)
from invbinom.precision import PrecisionCtx
from properties import prop_gpl_scaling, prop_roundtrip_exact

CTX = PrecisionCtx(40)


def test_gpl_to_mpl_depth_one():
    sign, spec = gpl_to_mpl(GplWord((F(3, 2),), F(1, 2)))
    assert sign == -1
    assert spec == MplSpec((1,), (F(1, 3),))


def test_gpl_to_mpl_leading_zeros_raise_weight():
    sign, spec = gpl_to_mpl(GplWord((0, 0, F(3, 2)), F(1, 2)))
    assert sign == -1
    assert spec == MplSpec((3,), (F(1, 3),))


def test_gpl_to_mpl_depth_two():
    sign, spec = gpl_to_mpl(GplWord((0, F(1, 2), F(1, 3)), F(1, 4)))
    assert sign == 1
    assert spec == MplSpec((2, 1), (F(1, 2), F(3, 2)))


def test_gpl_to_mpl_rejects_bad_words():
    with pytest.raises(ValueError):
        gpl_to_mpl(GplWord((F(1, 2), 0), 1))  # trailing zero
    with pytest.raises(ValueError):
        gpl_to_mpl(GplWord((0, 0), 1))  # all zero
    with pytest.raises(ValueError):
        gpl_to_mpl(GplWord((), 1))  # empty


def test_mpl_to_gpl_examples():
    word = mpl_to_gpl(MplSpec((2,), (F(1, 3),)), 1)
    assert word == GplWord((0, F(3, 1)), 1)
    word = mpl_to_gpl(MplSpec((1, 1), (F(1, 2), F(1, 3))), 1)
    assert word == GplWord((F(2, 1), F(6, 1)), 1)
    with pytest.raises(ValueError):
        mpl_to_gpl(MplSpec((2,), (0,)), 1)


def test_roundtrip_structural_identity():
    prop_roundtrip_exact()


def test_conversion_is_numerically_consistent():
    # Li_{1,1}(1/2, 1/3) vs (-1)^2 G(2, 6; 1)
    spec = MplSpec((1, 1), (F(1, 2), F(1, 3)))
    direct = mpl_direct(spec, CTX)
    word = mpl_to_gpl(spec, 1)
    via_gpl = gpl_eval(word, CTX)
    with CTX.working():
        assert abs(direct.mpc - via_gpl.mpc) < mp.mpf(10) ** -42


def test_conversion_consistency_with_explicit_argument():
    # weights (2), args (w), z = 1: Li_2(w) = (-1)^1 G(0, 1/w; 1)
    for w in (F(1, 2), F(2, 3)):
        spec = MplSpec((2,), (w,))
        direct = mpl_direct(spec, CTX)
        via_gpl = gpl_eval(mpl_to_gpl(spec, 1), CTX)
        with CTX.working():
            assert abs(direct.mpc + via_gpl.mpc) < mp.mpf(10) ** -42


def test_scaling_invariance():
    prop_gpl_scaling(n_cases=15, digits=30)
