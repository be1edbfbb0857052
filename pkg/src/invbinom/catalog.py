"""The built-in identity catalog: every explicit closed form the package
verifies, with weight/level metadata.

Each entry binds an evaluable left side (a series, a parameterized
alternating series, or a constant expression) to a ConstantExpr right side
transcribed term for term from its source display.  Weight/level pairs are
carried as metadata only; they are never "verified" symbolically.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction as F
from typing import Optional, Tuple

from .constants import (
    Expr,
    I_UNIT,
    Mpl,
    NamedConstant,
    add_,
    c_,
    im_,
    li_,
    mul_,
    pow_,
    q,
    rt,
)

PI = c_(NamedConstant.PI)
G = c_(NamedConstant.CATALAN)
Z3 = c_(NamedConstant.ZETA3)
B4 = c_(NamedConstant.BETA4)
L823 = c_(NamedConstant.L_8_2_3)
L844 = c_(NamedConstant.L_8_4_4)
L324 = c_(NamedConstant.L_3_2_4)
L1243 = c_(NamedConstant.L_12_4_3)
CG = c_(NamedConstant.CATALAN_LIKE)
LAM = c_(NamedConstant.LOG2)      # log 2
LAM3 = c_(NamedConstant.LOG3)     # log 3
LGOLD = c_(NamedConstant.LOG_GOLDEN)
L5 = c_(NamedConstant.LOG5)
LSIL = c_(NamedConstant.LOG_SILVER)
L23 = c_(NamedConstant.LOG_2_SQRT3)


def _neg(e: Expr) -> Expr:
    return mul_(q(-1), e)


# algebraic points appearing as polylog arguments
EXP_I_PI_4 = mul_(add_(q(1), I_UNIT), rt(1, 2))            # e^{i pi/4}
ONE_M_E4 = add_(q(1), _neg(EXP_I_PI_4))                    # 1 - e^{i pi/4}
HALF_1ME4 = mul_(q(1, 2), ONE_M_E4)                        # (1 - e^{i pi/4})/2
I_1ME4 = mul_(I_UNIT, ONE_M_E4)                            # i(1 - e^{i pi/4})
RT2M1 = add_(rt(2), q(-1))                                 # sqrt(2) - 1
I_RT2M1 = mul_(I_UNIT, RT2M1)                              # i(sqrt(2) - 1)
INV_RT2 = rt(1, 2)                                         # 1/sqrt(2)
ONE_M_INV_RT2 = add_(q(1), _neg(rt(1, 2)))                 # 1 - 1/sqrt(2)
HALF_1PI = mul_(q(1, 2), add_(q(1), I_UNIT))               # (1+i)/2
P_1MIRT3_4 = mul_(q(1, 4), add_(q(1), _neg(mul_(I_UNIT, rt(3)))))    # (1-i sqrt3)/4
P_1PIRT3INV_2 = mul_(q(1, 2), add_(q(1), mul_(I_UNIT, rt(1, 3))))    # (1+i/sqrt3)/2
P_3PIRT3_4 = mul_(q(1, 4), add_(q(3), mul_(I_UNIT, rt(3))))          # (3+i sqrt3)/4
TWO_M_RT3 = add_(q(2), _neg(rt(3)))                        # 2 - sqrt(3)
INV_PHI = mul_(q(1, 2), add_(rt(5), q(-1)))                # 1/phi = (sqrt5-1)/2
INV_PHI3 = add_(rt(5), q(-2))                              # 1/phi^3 = sqrt5 - 2
INV_RT5 = rt(1, 5)
RT3M1_2 = mul_(q(1, 2), add_(rt(3), q(-1)))                # (sqrt3-1)/2
ONE_M_RT3_2 = add_(q(1), _neg(mul_(q(1, 2), rt(3))))       # 1 - sqrt(3)/2
TWOMRT3_3 = mul_(q(1, 3), TWO_M_RT3)                       # (2-sqrt3)/3
TWO_RT3_M3 = add_(mul_(q(2), rt(3)), q(-3))                # 2 sqrt3 - 3
THREE_RT3_M5 = add_(mul_(q(3), rt(3)), q(-5))              # 3 sqrt3 - 5


@dataclass(frozen=True)
class SeriesLhs:
    """scale * S_k(z) with rational z and an optional algebraic scale."""

    k: int
    z: F
    scale: Optional[Expr] = None


@dataclass(frozen=True)
class ChudnovskyLhs:
    """sum_{n>=1} 1/(n^3 C(3n,n) 2^n)."""


@dataclass(frozen=True)
class ExprLhs:
    expr: Expr


@dataclass(frozen=True)
class WSeriesLhs:
    """The k-th alternating series in the parameter w (rational w)."""

    k: int
    w: F


@dataclass(frozen=True)
class TrilogFamily:
    """Seeded admissible-w samples of the trilog identity (lhs and rhs)."""

    seed: int = 0x5EED
    count: int = 20
    n_real: int = 3
    n_circle: int = 3


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    lhs: object
    rhs: object            # ConstantExpr, or TrilogFamily for the family entry
    weight: int
    level: Optional[int]
    anchor: str
    min_digits: int = 40


def trilog_family_samples(family: TrilogFamily):
    """Deterministic admissible w samples: tagged specs, not raw floats,
    so unimodular points stay exactly on the circle at any precision."""
    rng = random.Random(family.seed)
    samples: list[tuple] = []
    lo = math.sqrt(2) - 1 + 0.02
    for _ in range(family.n_real):
        samples.append(("real", rng.uniform(lo, 0.98)))
    for _ in range(family.n_circle):
        samples.append(("circle", rng.uniform(0.08, math.pi / 2 - 0.08)))
    while len(samples) < family.count:
        w = complex(rng.uniform(0.05, 1.0), rng.uniform(0.0, 1.0))
        if abs(w) > 0.999:
            continue
        if abs(1 - w * w) > 2 * abs(w) * 0.995:
            continue
        samples.append(("interior", w.real, w.imag))
    return samples


def builtin_catalog() -> Tuple[Identity, ...]:
    """The 20 fixed entries plus the parametric trilog family (21 total)."""
    entries = [
        Identity(
            id="chudnovsky",
            description="Chudnovsky central-binomial sum over weight-3 constants",
            lhs=ChudnovskyLhs(),
            rhs=add_(
                mul_(PI, G),
                mul_(q(-33, 16), Z3),
                mul_(q(1, 6), pow_(LAM, 3)),
                mul_(q(-1, 24), pow_(PI, 2), LAM),
            ),
            weight=3,
            level=4,
            anchor="sum 1/(n^3 C(3n,n) 2^n) = pi*G - 33 zeta(3)/16 + log^3(2)/6 - pi^2 log(2)/24",
        ),
        Identity(
            id="chen_pos",
            description="S_3(1): the positive cubic inverse binomial series",
            lhs=SeriesLhs(3, F(1)),
            rhs=add_(
                mul_(q(32, 3), CG),
                mul_(q(-4, 3), PI, li_(2, TWO_M_RT3)),
                mul_(q(-1, 9), pow_(PI, 3)),
                mul_(q(-1, 3), PI, pow_(add_(LAM, _neg(L23)), 2)),
            ),
            weight=3,
            level=12,
            anchor="S_3(1) in level-12 constants (Catalan-like constant form)",
        ),
        Identity(
            id="chen_neg",
            description="S_3(-1): the alternating cubic inverse binomial series",
            lhs=SeriesLhs(3, F(-1)),
            rhs=add_(
                mul_(q(-4, 3), li_(3, INV_PHI3)),
                mul_(q(-4), li_(2, INV_PHI3), LGOLD),
                li_(3, INV_PHI),
                mul_(q(-25, 3), pow_(LGOLD, 3)),
                mul_(q(6), LAM, pow_(LGOLD, 2)),
                mul_(q(1, 10), pow_(PI, 2), LGOLD),
                mul_(q(12, 5), Z3),
                mul_(q(-1, 3), pow_(PI, 2), LAM),
            ),
            weight=3,
            level=10,
            anchor="S_3(-1) in level-10 constants (golden-ratio trilogarithms)",
        ),
        Identity(
            id="catalanlike",
            description="Catalan-like constant Im Li_3((1+i)/2) via Li_{2,1}(i,1)",
            lhs=ExprLhs(im_(li_(3, HALF_1PI))),
            rhs=add_(
                _neg(im_(Mpl((2, 1), (I_UNIT, q(1))))),
                mul_(q(-1, 2), G, LAM),
                mul_(q(1, 32), PI, pow_(LAM, 2)),
                mul_(q(3, 128), pow_(PI, 3)),
            ),
            weight=3,
            level=4,
            anchor="Im Li_3((1+i)/2) = -Im Li_{2,1}(i,1) - G log2/2 + pi log^2(2)/32 + 3 pi^3/128",
        ),
        Identity(
            id="s3_2",
            description="sqrt(2) S_3(2) over level-8 constants",
            lhs=SeriesLhs(3, F(2), rt(2)),
            rhs=add_(
                mul_(q(-8), im_(li_(3, HALF_1ME4))),
                mul_(q(-4), im_(li_(3, I_RT2M1))),
                mul_(
                    q(-1, 32),
                    PI,
                    add_(
                        mul_(q(48), li_(2, RT2M1)),
                        mul_(q(-12), LAM, LSIL),
                        mul_(q(20), pow_(LSIL, 2)),
                        mul_(q(9), pow_(LAM, 2)),
                    ),
                ),
                mul_(q(15, 128), pow_(PI, 3)),
            ),
            weight=3,
            level=8,
            anchor="sqrt(2) S_3(2) in i * (weight 3, level 8)",
        ),
        Identity(
            id="s4_2",
            description="sqrt(2) S_4(2) over level-8 constants",
            lhs=SeriesLhs(4, F(2), rt(2)),
            rhs=add_(
                mul_(q(-36), im_(li_(4, ONE_M_E4))),
                mul_(q(-12), im_(li_(4, HALF_1ME4))),
                mul_(q(-12), im_(li_(4, I_1ME4))),
                mul_(q(-12), im_(li_(4, I_RT2M1))),
                mul_(q(-9, 2), B4),
                mul_(q(-14), rt(2), L844),
                mul_(q(10, 3), PI, rt(2), L823),
                mul_(q(-9, 2), PI, li_(3, INV_RT2)),
                mul_(q(63, 128), PI, Z3),
                mul_(
                    q(1, 256),
                    PI,
                    add_(
                        mul_(q(78), pow_(LAM, 2), LSIL),
                        mul_(q(-12), LAM, pow_(LSIL, 2)),
                        mul_(q(-24), pow_(LSIL, 3)),
                        mul_(q(47), pow_(LAM, 3)),
                    ),
                ),
                mul_(
                    q(-3, 1024),
                    pow_(PI, 3),
                    add_(mul_(q(141), LAM), mul_(q(-98), LSIL)),
                ),
            ),
            weight=4,
            level=8,
            anchor="sqrt(2) S_4(2) in i * (weight 4, level 8)",
        ),
        Identity(
            id="s3_3",
            description="sqrt(3) S_3(3) over level-6 constants",
            lhs=SeriesLhs(3, F(3), rt(3)),
            rhs=add_(
                mul_(q(-8), im_(li_(3, P_1MIRT3_4))),
                mul_(q(-5), im_(li_(3, P_1PIRT3INV_2))),
                mul_(q(1, 3), PI, li_(2, q(1, 4))),
                mul_(q(1, 48), PI, pow_(LAM3, 2)),
                mul_(q(-7, 432), pow_(PI, 3)),
            ),
            weight=3,
            level=6,
            anchor="sqrt(3) S_3(3) in i * (weight 3, level 6)",
        ),
        Identity(
            id="s4_3",
            description="sqrt(3) S_4(3) over level-6 constants",
            lhs=SeriesLhs(4, F(3), rt(3)),
            rhs=add_(
                mul_(q(8), im_(li_(4, P_3PIRT3_4))),
                mul_(q(-8), im_(li_(4, P_1MIRT3_4))),
                mul_(q(-5), im_(li_(4, P_1PIRT3INV_2))),
                mul_(q(-45, 16), rt(3), L324),
                mul_(q(1, 3), PI, add_(li_(3, q(1, 3)), li_(3, q(1, 4)))),
                mul_(q(-19, 36), PI, Z3),
                mul_(
                    q(1, 288),
                    PI,
                    add_(
                        mul_(q(64), pow_(LAM, 3)),
                        mul_(q(-192), pow_(LAM, 2), LAM3),
                        mul_(q(144), LAM, pow_(LAM3, 2)),
                        mul_(q(-41), pow_(LAM3, 3)),
                    ),
                ),
                mul_(
                    q(1, 864),
                    pow_(PI, 3),
                    add_(mul_(q(144), LAM), mul_(q(-41), LAM3)),
                ),
            ),
            weight=4,
            level=6,
            anchor="sqrt(3) S_4(3) in i * (weight 4, level 6)",
        ),
        Identity(
            id="s3_4",
            description="S_4-boundary case S_3(4) via the Catalan-like constant",
            lhs=SeriesLhs(3, F(4)),
            rhs=add_(
                mul_(q(4), CG),
                mul_(q(-1, 8), PI, pow_(LAM, 2)),
                mul_(q(-1, 32), pow_(PI, 3)),
            ),
            weight=3,
            level=4,
            anchor="S_3(4) = 4 Im Li_3((1+i)/2) - pi log^2(2)/8 - pi^3/32",
        ),
        Identity(
            id="s4_4",
            description="S_4(4) via Li_4((1+i)/2) and beta(4)",
            lhs=SeriesLhs(4, F(4)),
            rhs=add_(
                mul_(q(8), im_(li_(4, HALF_1PI))),
                mul_(q(-4), B4),
                mul_(q(1, 24), PI, pow_(LAM, 3)),
                mul_(q(1, 32), pow_(PI, 3), LAM),
            ),
            weight=4,
            level=4,
            anchor="S_4(4) in i * (weight 4, level 4)",
        ),
        Identity(
            id="s3_m94",
            description="S_3(-9/4) over level-6 constants",
            lhs=SeriesLhs(3, F(-9, 4)),
            rhs=add_(
                mul_(q(4, 3), li_(3, q(1, 3))),
                mul_(q(2), li_(3, q(1, 4))),
                mul_(q(-5, 9), Z3),
                mul_(q(2), li_(2, q(1, 4)), LAM),
                mul_(
                    q(2, 9),
                    add_(mul_(q(6), pow_(LAM, 3)), _neg(pow_(LAM3, 3))),
                ),
                mul_(
                    q(-1, 9),
                    pow_(PI, 2),
                    add_(mul_(q(3), LAM), mul_(q(-2), LAM3)),
                ),
            ),
            weight=3,
            level=6,
            anchor="S_3(-9/4) in weight 3, level 6",
        ),
        Identity(
            id="s4_m94",
            description="S_4(-9/4) over level-6 constants",
            lhs=SeriesLhs(4, F(-9, 4)),
            rhs=add_(
                mul_(q(80, 9), li_(4, q(1, 2))),
                mul_(q(-40, 3), li_(4, q(1, 3))),
                mul_(q(8), li_(4, q(2, 3))),
                mul_(q(7, 2), li_(4, q(1, 4))),
                mul_(q(5, 6), li_(4, q(1, 9))),
                mul_(q(4), li_(3, q(1, 3)), LAM),
                mul_(q(3), li_(3, q(1, 4)), LAM),
                mul_(q(-50, 9), Z3, LAM),
                mul_(
                    q(-1, 27),
                    add_(
                        mul_(q(35), pow_(LAM, 4)),
                        mul_(q(-54), pow_(LAM, 2), pow_(LAM3, 2)),
                        mul_(q(54), LAM, pow_(LAM3, 3)),
                        mul_(q(-9), pow_(LAM3, 4)),
                    ),
                ),
                mul_(
                    q(-1, 54),
                    pow_(PI, 2),
                    LAM,
                    add_(mul_(q(11), LAM), mul_(q(-36), LAM3)),
                ),
                mul_(q(-101, 1620), pow_(PI, 4)),
            ),
            weight=4,
            level=6,
            anchor="S_4(-9/4) in weight 4, level 6",
        ),
        Identity(
            id="s3_m4",
            description="S_3(-4) over level-8 constants",
            lhs=SeriesLhs(3, F(-4)),
            rhs=add_(
                mul_(q(-2), li_(3, RT2M1)),
                mul_(q(4, 3), rt(2), L823),
                mul_(q(25, 16), Z3),
                mul_(q(-2), li_(2, RT2M1), LSIL),
                mul_(q(-2, 3), pow_(LSIL, 3)),
                mul_(q(1, 2), LAM, pow_(LSIL, 2)),
                mul_(q(-1, 8), pow_(PI, 2), LAM),
            ),
            weight=3,
            level=8,
            anchor="S_3(-4) in weight 3, level 8",
        ),
        Identity(
            id="s4_m4",
            description="S_4(-4) over level-8 constants (weight-4 level-8 case)",
            lhs=SeriesLhs(4, F(-4)),
            rhs=add_(
                mul_(q(40, 7), li_(4, ONE_M_INV_RT2)),
                mul_(q(4, 21), li_(4, RT2M1)),
                mul_(q(4, 7), li_(4, INV_RT2)),
                mul_(q(-27, 28), li_(4, q(1, 2))),
                mul_(q(-59, 14), li_(4, pow_(RT2M1, 2))),
                mul_(q(19, 84), li_(4, pow_(RT2M1, 4))),
                mul_(q(-2, 21), li_(4, mul_(q(1, 2), ONE_M_INV_RT2))),
                mul_(q(8, 3), rt(2), L823, LSIL),
                mul_(q(-4), li_(3, INV_RT2), LSIL),
                mul_(q(7, 16), Z3, LSIL),
                mul_(
                    q(1, 4032),
                    add_(
                        mul_(q(600), pow_(LAM, 3), LSIL),
                        mul_(q(1224), pow_(LAM, 2), pow_(LSIL, 2)),
                        mul_(q(96), LAM, pow_(LSIL, 3)),
                        mul_(q(-752), pow_(LSIL, 4)),
                        mul_(q(-177), pow_(LAM, 4)),
                    ),
                ),
                mul_(
                    q(-1, 504),
                    pow_(PI, 2),
                    add_(
                        mul_(q(189), LAM, LSIL),
                        mul_(q(-61), pow_(LSIL, 2)),
                        mul_(q(-30), pow_(LAM, 2)),
                    ),
                ),
                mul_(q(11, 7560), pow_(PI, 4)),
            ),
            weight=4,
            level=8,
            anchor="S_4(-4) in weight 4, level 8",
        ),
        Identity(
            id="s3_m12",
            description="sqrt(2) S_3(-1/2) over level-8 constants",
            lhs=SeriesLhs(3, F(-1, 2), rt(2)),
            rhs=add_(
                mul_(q(-80), li_(3, INV_RT2)),
                mul_(q(64), rt(2), L823),
                mul_(q(35, 4), Z3),
                mul_(q(-20), li_(2, RT2M1), LAM),
                mul_(q(10), pow_(LAM, 2), LSIL),
                mul_(q(-10), LAM, pow_(LSIL, 2)),
                mul_(q(5, 3), pow_(LAM, 3)),
                mul_(q(-15, 4), pow_(PI, 2), LAM),
            ),
            weight=3,
            level=8,
            anchor="sqrt(2) S_3(-1/2) in weight 3, level 8",
        ),
        Identity(
            id="s4_m12",
            description="sqrt(2) S_4(-1/2) over level-8 constants (weight-4 level-8 case)",
            lhs=SeriesLhs(4, F(-1, 2), rt(2)),
            rhs=add_(
                mul_(q(1669, 14), li_(4, q(1, 2))),
                mul_(q(-2112, 7), li_(4, ONE_M_INV_RT2)),
                mul_(q(-704, 21), li_(4, RT2M1)),
                mul_(q(24, 7), li_(4, INV_RT2)),
                mul_(q(1510, 7), li_(4, pow_(RT2M1, 2))),
                mul_(q(-475, 42), li_(4, pow_(RT2M1, 4))),
                mul_(q(352, 21), li_(4, mul_(q(1, 2), ONE_M_INV_RT2))),
                mul_(q(-100), li_(3, INV_RT2), LAM),
                mul_(q(224, 3), rt(2), L823, LAM),
                mul_(q(175, 16), Z3, LAM),
                mul_(
                    q(2, 63),
                    add_(
                        mul_(q(99), pow_(LAM, 3), LSIL),
                        mul_(q(-297), pow_(LAM, 2), pow_(LSIL, 2)),
                        mul_(q(-132), LAM, pow_(LSIL, 3)),
                        mul_(q(299), pow_(LSIL, 4)),
                        mul_(q(309), pow_(LAM, 4)),
                    ),
                ),
                mul_(
                    q(1, 252),
                    pow_(PI, 2),
                    add_(
                        mul_(q(1848), LAM, LSIL),
                        mul_(q(-1336), pow_(LSIL, 2)),
                        mul_(q(-2115), pow_(LAM, 2)),
                    ),
                ),
                mul_(q(397, 3780), pow_(PI, 4)),
            ),
            weight=4,
            level=8,
            anchor="sqrt(2) S_4(-1/2) in weight 4, level 8",
        ),
        Identity(
            id="s3_m165",
            description="sqrt(5) S_3(-16/5) over level-10 constants",
            lhs=SeriesLhs(3, F(-16, 5), rt(5)),
            rhs=add_(
                mul_(q(5, 4), li_(3, q(1, 5))),
                mul_(q(27, 2), li_(3, INV_PHI)),
                mul_(q(-10), li_(3, INV_RT5)),
                mul_(q(-27, 20), Z3),
                mul_(
                    q(5, 8),
                    add_(li_(2, q(1, 5)), mul_(q(-4), li_(2, INV_RT5))),
                    L5,
                ),
                mul_(q(-9, 2), pow_(LGOLD, 3)),
                mul_(q(27, 20), pow_(PI, 2), LGOLD),
                mul_(q(-5, 16), pow_(PI, 2), L5),
            ),
            weight=3,
            level=10,
            anchor="sqrt(5) S_3(-16/5) in weight 3, level 10",
        ),
        Identity(
            id="s3_m43",
            description="sqrt(3) S_3(-4/3) over level-12 constants",
            lhs=SeriesLhs(3, F(-4, 3), rt(3)),
            rhs=add_(
                mul_(q(-21, 10), li_(3, q(1, 3))),
                mul_(q(-7, 40), li_(3, q(1, 4))),
                _neg(li_(3, RT3M1_2)),
                mul_(q(11, 20), li_(3, ONE_M_RT3_2)),
                mul_(q(9, 5), li_(3, TWOMRT3_3)),
                mul_(q(-7), li_(3, TWO_M_RT3)),
                mul_(q(24, 5), li_(3, TWO_RT3_M3)),
                mul_(q(11, 5), li_(3, THREE_RT3_M5)),
                mul_(q(3, 5), rt(3), L1243),
                mul_(q(39, 10), Z3),
                mul_(q(3, 8), li_(2, q(1, 4)), LAM3),
                mul_(q(-3), li_(2, RT3M1_2), LAM3),
                mul_(q(-3), li_(2, TWO_M_RT3), LAM3),
                mul_(q(-17, 80), pow_(LAM, 2), L23),
                mul_(q(71, 80), LAM, pow_(L23, 2)),
                mul_(q(-3, 4), LAM, LAM3, L23),
                mul_(q(-3, 20), pow_(LAM3, 2), L23),
                mul_(q(21, 40), LAM3, pow_(L23, 2)),
                mul_(q(-209, 240), pow_(L23, 3)),
                mul_(q(13, 80), pow_(LAM, 3)),
                mul_(q(3, 8), pow_(LAM, 2), LAM3),
                mul_(q(1, 20), pow_(LAM3, 3)),
                mul_(q(7, 40), pow_(PI, 2), L23),
                mul_(q(-7, 20), pow_(PI, 2), LAM),
                mul_(q(-7, 80), pow_(PI, 2), LAM3),
            ),
            weight=3,
            level=12,
            anchor="sqrt(3) S_3(-4/3) in weight 3, level 12 (19-term evaluation)",
        ),
        Identity(
            id="f32_reduction",
            description="k = 2 dilogarithm reduction of the alternating w-series at w = 1/2",
            lhs=WSeriesLhs(2, F(1, 2)),
            rhs=add_(
                mul_(q(-2), li_(2, q(1, 2))),
                mul_(q(2), li_(2, q(-1, 2))),
                mul_(q(-2), LAM, LAM3),
                mul_(q(1, 2), pow_(PI, 2)),
            ),
            weight=2,
            level=6,
            anchor="3F2 reduction: x 3F2(1/2,1,1; 3/2,3/2; -x^2/4) at x = 3/2",
        ),
        Identity(
            id="s1_classical",
            description="classical closed form S_1(1) = 2 pi/(3 sqrt 3)",
            lhs=SeriesLhs(1, F(1)),
            rhs=mul_(q(2, 3), PI, rt(1, 3)),
            weight=1,
            level=None,
            anchor="S_1(z) = 4 arcsin(sqrt(z)/2)/sqrt(z(4-z)) at z = 1",
        ),
        Identity(
            id="li23_family",
            description="trilog identity for the alternating w-series, 20 seeded samples",
            lhs=TrilogFamily(),
            rhs=TrilogFamily(),
            weight=3,
            level=None,
            anchor="alternating w-series = Li_2/Li_3 closed form (seed 0x5EED; 3 real, 3 unimodular)",
            min_digits=30,
        ),
    ]
    return tuple(entries)


def catalog_by_id() -> dict:
    return {ident.id: ident for ident in builtin_catalog()}


def corrupted(identity: Identity, leaf_index: int,
              rel: F = F(1, 1000)) -> Identity:
    """Negative control: identity with one rhs rational scaled by (1+rel)."""
    from .constants import perturb_rational_leaf

    if not isinstance(identity.rhs, Expr):
        raise TypeError("only ConstantExpr right sides can be corrupted")
    return replace(
        identity,
        id=f"{identity.id}#corrupt{leaf_index}",
        rhs=perturb_rational_leaf(identity.rhs, leaf_index, rel),
    )
