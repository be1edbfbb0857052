"""Reusable property checks shared by the unit tests and the acceptance
suite.  Each function asserts and returns a short human-readable summary.
"""

from __future__ import annotations

import random
from fractions import Fraction as F

from mpmath import mp

from invbinom.constants import NamedConstant, named_constant
from invbinom.polylog import (
    GplWord,
    MplSpec,
    gpl_eval,
    gpl_to_mpl,
    li,
    mpl_to_gpl,
)
from invbinom.precision import PrecisionCtx, to_mpc
from invbinom.series import SeriesSpec, derivative_ladder_value, s0_closed, s1_closed, s_series
from invbinom.words import shuffle

from oracles import alternating_accel, positive_sum_vw


def _agree(a, b, digits: int) -> bool:
    return abs(a - b) <= max(mp.mpf(1), abs(b)) * mp.mpf(10) ** (-digits)


def prop_shuffle_homomorphism(n_cases: int = 50, digits: int = 30, seed: int = 7701) -> str:
    """gpl_eval(u)*gpl_eval(v) equals the shuffle expansion, numerically."""
    ctx = PrecisionCtx(digits)
    rng = random.Random(seed)
    letters_pool = [-1, 1, 2]
    z = F(1, 2)
    checked = 0
    with mp.workdps(ctx.wdigits + 5):
        for _ in range(n_cases):
            u = tuple(rng.choice(letters_pool) for _ in range(rng.randint(1, 3)))
            v = tuple(rng.choice(letters_pool) for _ in range(rng.randint(1, 3)))
            lhs = gpl_eval(GplWord(u, z), ctx).mpc * gpl_eval(GplWord(v, z), ctx).mpc
            rhs = mp.mpc(0)
            for (word, _, _), coeff in shuffle(u, v).items():
                rhs += int(coeff) * gpl_eval(GplWord(word, z), ctx).mpc
            assert _agree(lhs, rhs, digits - 5), (u, v, lhs, rhs)
            checked += 1
    return f"shuffle homomorphism: {checked} cases at {digits} digits"


def prop_gpl_scaling(n_cases: int = 20, digits: int = 30, seed: int = 7702) -> str:
    """G(k*a; k*z) = G(a; z) for random nonzero k and convergent words."""
    ctx = PrecisionCtx(digits)
    rng = random.Random(seed)
    checked = 0
    with mp.workdps(ctx.wdigits + 5):
        for _ in range(n_cases):
            n = rng.randint(1, 3)
            letters = []
            for pos in range(n):
                if pos < n - 1 and rng.random() < 0.25:
                    letters.append(0)
                else:
                    r = rng.uniform(1.0, 2.5)
                    th = rng.uniform(0.3, 5.9)
                    letters.append(mp.mpf(r) * mp.expjpi(mp.mpf(th) / mp.pi))
            if letters[-1] == 0:
                letters[-1] = mp.mpc(1.5, 0.5)
            z = mp.mpf(rng.uniform(0.3, 0.7))
            k = mp.mpc(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0))
            base = gpl_eval(GplWord(tuple(letters), z), ctx).mpc
            scaled = gpl_eval(
                GplWord(tuple(l * k for l in letters), z * k), ctx
            ).mpc
            assert _agree(scaled, base, digits - 5), (letters, z, k)
            checked += 1
    return f"G-function scaling invariance: {checked} cases at {digits} digits"


def prop_roundtrip_exact() -> str:
    """gpl_to_mpl o mpl_to_gpl is the structural identity (exact)."""
    cases = [
        MplSpec((2,), (F(1, 2),)),
        MplSpec((1, 1), (F(1, 2), F(1, 3))),
        MplSpec((2, 1), (complex(0, 1), 1)),
        MplSpec((3, 1, 2), (F(2, 3), F(-1, 2), F(5, 4))),
    ]
    for spec in cases:
        for z in (1, F(1, 2)):
            word = mpl_to_gpl(spec, z)
            sign, back = gpl_to_mpl(word)
            assert back == spec, (spec, word, back)
            assert sign == (-1 if spec.depth % 2 else 1)
    return f"gpl<->mpl round-trip exact: {len(cases) * 2} cases"


def prop_li_duplication(digits: int = 35, seed: int = 7703, n_cases: int = 10) -> str:
    """Li_s(z) + Li_s(-z) = 2^(1-s) Li_s(z^2) for random |z| <= 0.9."""
    ctx = PrecisionCtx(digits)
    rng = random.Random(seed)
    with mp.workdps(ctx.wdigits + 5):
        for s in (2, 3, 4):
            for _ in range(n_cases):
                z = mp.mpc(rng.uniform(-0.65, 0.65), rng.uniform(-0.6, 0.6))
                lhs = li(s, z, ctx=ctx).mpc + li(s, -z, ctx=ctx).mpc
                rhs = mp.mpf(2) ** (1 - s) * li(s, z * z, ctx=ctx).mpc
                assert _agree(lhs, rhs, digits - 5), (s, z)
    return f"Li duplication: {3 * n_cases} cases at {digits} digits"


def prop_li_jump(digits: int = 35) -> str:
    """Li_s(x+i0) - Li_s(x-i0) = 2 pi i log(x)^(s-1)/(s-1)!."""
    ctx = PrecisionCtx(digits)
    with mp.workdps(ctx.wdigits + 5):
        for s in (2, 3, 4):
            for xi in (mp.mpf(3) / 2, mp.mpf(2), mp.mpf(5)):
                jump = li(s, xi, "upper", ctx).mpc - li(s, xi, "lower", ctx).mpc
                expect = 2j * mp.pi * mp.log(xi) ** (s - 1) / mp.factorial(s - 1)
                assert _agree(jump, expect, digits - 5), (s, xi)
    return "Li jump relation: s in 2..4 at x in {3/2, 2, 5}"


def prop_derivative_ladder() -> str:
    """x f_k'(x) = f_{k-1}(x), f_k(x) = sum x^(2n+1)/((2n+1)^k C(2n,n)).

    Central differences at step 1e-8 (values at 30 dps) meet the 1e-10
    relative bound; a 1e-15 step at 50 dps confirms at higher order.
    """
    for digits, h_exp, rel_bound in ((30, -8, mp.mpf("1e-10")), (50, -15, mp.mpf("1e-25"))):
        ctx = PrecisionCtx(digits)
        with mp.workdps(ctx.wdigits + 8):
            h = mp.mpf(10) ** h_exp
            for k in (1, 2, 3):
                for x in (mp.mpf("0.3"), mp.mpf("0.9"), mp.mpf("1.5")):
                    up = derivative_ladder_value(k, x + h, ctx).mpc
                    dn = derivative_ladder_value(k, x - h, ctx).mpc
                    lhs = x * (up - dn) / (2 * h)
                    rhs = derivative_ladder_value(k - 1, x, ctx).mpc
                    rel = abs(lhs - rhs) / abs(rhs)
                    assert rel <= rel_bound, (k, x, h, rel)
    return "derivative ladder: k in 1..3 at x in {0.3, 0.9, 1.5}, both precisions"


def prop_series_vs_closed(digits: int = 35) -> str:
    """s_series agrees with the classical closed forms for k in {0, 1}."""
    ctx = PrecisionCtx(digits)
    with mp.workdps(ctx.wdigits + 5):
        for z in (F(1), F(2), F(-1), F(-9, 4)):
            s1 = s_series(SeriesSpec(1, z), ctx).mpc
            c1 = s1_closed(z, ctx).mpc
            assert _agree(s1, c1, digits - 5), ("k=1", z)
            s0 = s_series(SeriesSpec(0, z), ctx).mpc
            c0 = s0_closed(z, ctx).mpc
            assert _agree(s0, c0, digits - 5), ("k=0", z)
    return "series vs closed forms k in {0,1} at z in {1, 2, -1, -9/4}"


def prop_lvalue_oracles(digits: int = 30) -> str:
    """Hurwitz-zeta production values vs alternating/van Wijngaarden oracles."""
    ctx = PrecisionCtx(digits)
    n_terms = int(3.4 * (digits + 10)) + 30
    with mp.workdps(ctx.wdigits + 15):
        oracle = {
            NamedConstant.CATALAN: alternating_accel(
                lambda k: 1 / mp.mpf(2 * k + 1) ** 2, n_terms),
            NamedConstant.BETA4: alternating_accel(
                lambda k: 1 / mp.mpf(2 * k + 1) ** 4, n_terms),
            NamedConstant.L_8_2_3: alternating_accel(
                lambda m: 1 / mp.mpf(4 * m + 1) ** 3 - 1 / mp.mpf(4 * m + 3) ** 3, n_terms),
            NamedConstant.L_8_4_4: alternating_accel(
                lambda m: 1 / mp.mpf(4 * m + 1) ** 4 + 1 / mp.mpf(4 * m + 3) ** 4, n_terms),
            NamedConstant.L_3_2_4: (lambda v: v(0) + positive_sum_vw(v, n_terms))(
                lambda m: 1 / mp.mpf(3 * m + 1) ** 4 - 1 / mp.mpf(3 * m + 2) ** 4),
            NamedConstant.L_12_4_3: (lambda v: v(0) + positive_sum_vw(v, n_terms))(
                lambda m: 1 / mp.mpf(12 * m + 1) ** 3 - 1 / mp.mpf(12 * m + 5) ** 3
                - 1 / mp.mpf(12 * m + 7) ** 3 + 1 / mp.mpf(12 * m + 11) ** 3),
        }
        for name, expect in oracle.items():
            got = named_constant(name, ctx).mpc
            assert _agree(got, mp.mpc(expect), digits - 5), name
    return f"Dirichlet values vs independent oracles at {digits} digits"
