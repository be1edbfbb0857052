import random
from fractions import Fraction as F

import pytest
from mpmath import mp

import reference_values as ref
from invbinom.constants import (
    I_UNIT,
    Mpl,
    NamedConstant,
    add_,
    c_,
    eval_expr,
    eval_raw,
    im_,
    li_,
    mul_,
    named_constant,
    perturb_rational_leaf,
    pow_,
    q,
    rational_leaf_count,
    rt,
)
from invbinom.precision import PrecisionCtx

from properties import prop_lvalue_oracles

CTX = PrecisionCtx(50)


FROZEN = {
    NamedConstant.CATALAN: ref.CATALAN,
    NamedConstant.ZETA3: ref.ZETA3,
    NamedConstant.BETA4: ref.BETA4,
    NamedConstant.L_8_2_3: ref.L_8_2_3,
    NamedConstant.L_8_4_4: ref.L_8_4_4,
    NamedConstant.L_3_2_4: ref.L_3_2_4,
    NamedConstant.L_12_4_3: ref.L_12_4_3,
    NamedConstant.CATALAN_LIKE: ref.CATALAN_LIKE,
    NamedConstant.LOG_GOLDEN: ref.LOG_GOLDEN,
}


@pytest.mark.parametrize("name", list(FROZEN))
def test_named_constant_frozen_values(name):
    value = named_constant(name, CTX)
    with CTX.working():
        assert abs(value.mpc - mp.mpf(FROZEN[name])) < mp.mpf(10) ** -50


def test_dirichlet_values_vs_live_oracles():
    prop_lvalue_oracles(digits=30)


def test_special_logarithms_exponentiate_back():
    algebraic = {
        NamedConstant.LOG2: lambda: mp.mpf(2),
        NamedConstant.LOG3: lambda: mp.mpf(3),
        NamedConstant.LOG_GOLDEN: lambda: (1 + mp.sqrt(5)) / 2,
        NamedConstant.LOG5: lambda: mp.mpf(5),
        NamedConstant.LOG_SILVER: lambda: 1 + mp.sqrt(2),
        NamedConstant.LOG_2_SQRT3: lambda: 2 + mp.sqrt(3),
    }
    for name, target in algebraic.items():
        value = named_constant(name, CTX)
        with CTX.working():
            assert abs(mp.exp(value.mpc) - target()) < mp.mpf(10) ** -(CTX.digits - 5)


def test_golden_ratio_satisfies_quadratic():
    phi = named_constant(NamedConstant.GOLDEN, CTX)
    with CTX.working():
        assert abs(phi.mpc**2 - phi.mpc - 1) < mp.mpf(10) ** -(CTX.digits - 5)


def test_catalan_like_identity():
    # Im Li_3((1+i)/2) = -Im Li_{2,1}(i,1) - G log2/2 + pi log^2(2)/32 + 3 pi^3/128
    lhs = im_(li_(3, mul_(q(1, 2), add_(q(1), I_UNIT))))
    rhs = add_(
        mul_(q(-1), im_(Mpl((2, 1), (I_UNIT, q(1))))),
        mul_(q(-1, 2), c_(NamedConstant.CATALAN), c_(NamedConstant.LOG2)),
        mul_(q(1, 32), c_(NamedConstant.PI), pow_(c_(NamedConstant.LOG2), 2)),
        mul_(q(3, 128), pow_(c_(NamedConstant.PI), 3)),
    )
    with CTX.working():
        d = abs(eval_expr(lhs, CTX).mpc - eval_expr(rhs, CTX).mpc)
        assert d < mp.mpf(10) ** -(CTX.digits - 2)
        assert abs(eval_expr(lhs, CTX).mpc - mp.mpf(ref.CATALAN_LIKE)) < mp.mpf(10) ** -50


def test_rational_literal_exact():
    with CTX.working():
        assert abs(eval_expr(q(3, 2), CTX).mpc - mp.mpf(3) / 2) == 0


def _random_tree(rng: random.Random, depth: int):
    leaves = [
        lambda: q(rng.randint(-9, 9) or 1, rng.randint(1, 9)),
        lambda: rt(rng.randint(2, 7)),
        lambda: c_(NamedConstant.PI),
        lambda: c_(NamedConstant.LOG2),
        lambda: li_(rng.randint(2, 3), q(1, rng.randint(2, 5))),
    ]
    if depth == 0:
        return rng.choice(leaves)()
    kind = rng.random()
    if kind < 0.4:
        return add_(*(_random_tree(rng, depth - 1) for _ in range(rng.randint(2, 3))))
    if kind < 0.8:
        return mul_(*(_random_tree(rng, depth - 1) for _ in range(2)))
    return pow_(_random_tree(rng, depth - 1), rng.randint(1, 3))


def test_eval_expr_is_a_homomorphism():
    rng = random.Random(424242)
    ctx = PrecisionCtx(35)
    with ctx.working():
        tol = mp.mpf(10) ** -(ctx.digits - 5)
        for _ in range(12):
            a = _random_tree(rng, 2)
            b = _random_tree(rng, 2)
            ea, eb = eval_raw(a), eval_raw(b)
            assert abs(eval_raw(add_(a, b)) - (ea + eb)) <= tol * max(1, abs(ea + eb))
            assert abs(eval_raw(mul_(a, b)) - ea * eb) <= tol * max(1, abs(ea * eb))


def test_perturbation_counts_and_changes_value():
    expr = add_(mul_(q(33, 16), c_(NamedConstant.ZETA3)), mul_(q(1, 6), pow_(c_(NamedConstant.LOG2), 3)))
    assert rational_leaf_count(expr) == 2
    ctx = PrecisionCtx(30)
    with ctx.working():
        base = eval_raw(expr)
        bumped = eval_raw(perturb_rational_leaf(expr, 0))
        assert abs(bumped - base) > mp.mpf(10) ** -6
    with pytest.raises(IndexError):
        perturb_rational_leaf(expr, 2)


def test_named_constant_enum_roundtrip():
    assert NamedConstant("beta4") is NamedConstant.BETA4
    assert len(NamedConstant) == 16
