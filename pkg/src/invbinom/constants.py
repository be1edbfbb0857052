"""Named constants and the expression trees for closed-form right sides.

Every named constant evaluates through an independent production pathway:
the Dirichlet L-values and zeta(3) reduce to Hurwitz zeta differences (the
four fixed sign patterns need no character machinery), the special
logarithms are direct logs of algebraic numbers, and the Catalan-like
constant is Im Li_3((1+i)/2).

:class:`ConstantExpr` trees encode closed forms over rationals, square
roots, the imaginary unit, named constants, polylog leaves (including one
depth >= 2 multiple-polylog leaf), the imaginary-part extractor, sums,
products, and integer powers.  Evaluation is deterministic for a fixed
precision context.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from mpmath import mp

from .hurwitz import _hurwitz_raw, zeta_int
from .polylog import li_raw, mpl_eval_raw
from .precision import (
    ApComplex,
    DEFAULT_CTX,
    PrecisionCtx,
    with_guard_retries,
)


class NamedConstant(enum.Enum):
    PI = "pi"
    CATALAN = "catalan"                  # sum (-1)^n/(2n+1)^2
    ZETA3 = "zeta3"
    BETA4 = "beta4"                      # sum (-1)^n/(2n+1)^4
    L_8_2_3 = "l_8_2_3"                  # sum (-1)^(n(n+1)/2)/(2n+1)^3
    L_8_4_4 = "l_8_4_4"                  # sum (-1)^n [(4n+1)^-4 + (4n+3)^-4]
    L_3_2_4 = "l_3_2_4"                  # sum [(3n+1)^-4 - (3n+2)^-4]
    L_12_4_3 = "l_12_4_3"                # 1,-1,-1,1 pattern mod 12 at weight 3
    CATALAN_LIKE = "catalan_like"        # Im Li_3((1+i)/2)
    LOG2 = "log2"
    LOG3 = "log3"
    LOG_GOLDEN = "log_golden"            # log((1+sqrt(5))/2)
    LOG5 = "log5"
    LOG_SILVER = "log_silver"            # log(1+sqrt(2))
    LOG_2_SQRT3 = "log_2_sqrt3"          # log(2+sqrt(3))
    GOLDEN = "golden"                    # (1+sqrt(5))/2


_constant_cache: dict = {}

_F = Fraction


def _hz(s: int, num: int, den: int):
    return _hurwitz_raw(s, _F(num, den), mp.mpf(10) ** (-mp.dps - 2))


def constant_raw(name: NamedConstant):
    """Value of a named constant at the current working precision."""
    key = (name, mp.prec)
    if key in _constant_cache:
        return _constant_cache[key]
    if name is NamedConstant.PI:
        value = +mp.pi
    elif name is NamedConstant.CATALAN:
        value = (_hz(2, 1, 4) - _hz(2, 3, 4)) / 16
    elif name is NamedConstant.ZETA3:
        value = zeta_int(3)
    elif name is NamedConstant.BETA4:
        value = (_hz(4, 1, 4) - _hz(4, 3, 4)) / 256
    elif name is NamedConstant.L_8_2_3:
        value = (_hz(3, 1, 8) - _hz(3, 3, 8) - _hz(3, 5, 8) + _hz(3, 7, 8)) / 512
    elif name is NamedConstant.L_8_4_4:
        value = (_hz(4, 1, 8) + _hz(4, 3, 8) - _hz(4, 5, 8) - _hz(4, 7, 8)) / 4096
    elif name is NamedConstant.L_3_2_4:
        value = (_hz(4, 1, 3) - _hz(4, 2, 3)) / 81
    elif name is NamedConstant.L_12_4_3:
        value = (_hz(3, 1, 12) - _hz(3, 5, 12) - _hz(3, 7, 12) + _hz(3, 11, 12)) / 1728
    elif name is NamedConstant.CATALAN_LIKE:
        value = li_raw(3, mp.mpc(1, 1) / 2).imag
    elif name is NamedConstant.LOG2:
        value = mp.log(2)
    elif name is NamedConstant.LOG3:
        value = mp.log(3)
    elif name is NamedConstant.LOG_GOLDEN:
        value = mp.log((1 + mp.sqrt(5)) / 2)
    elif name is NamedConstant.LOG5:
        value = mp.log(5)
    elif name is NamedConstant.LOG_SILVER:
        value = mp.log(1 + mp.sqrt(2))
    elif name is NamedConstant.LOG_2_SQRT3:
        value = mp.log(2 + mp.sqrt(3))
    elif name is NamedConstant.GOLDEN:
        value = (1 + mp.sqrt(5)) / 2
    else:  # pragma: no cover
        raise ValueError(f"unknown constant {name}")
    _constant_cache[key] = value
    return value


def named_constant(name: NamedConstant, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    def attempt(c: PrecisionCtx) -> ApComplex:
        with c.working():
            return ApComplex.wrap(constant_raw(name), c.digits)

    return with_guard_retries(attempt, ctx)


# ---------------------------------------------------------------------------
# expression trees
# ---------------------------------------------------------------------------


class Expr:
    """Marker base class for constant-expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Rat(Expr):
    value: Fraction


@dataclass(frozen=True)
class Sqrt(Expr):
    value: Fraction  # square root of a positive rational

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise ValueError("Sqrt leaf requires a positive rational")


@dataclass(frozen=True)
class ImUnit(Expr):
    pass


@dataclass(frozen=True)
class Const(Expr):
    name: NamedConstant


@dataclass(frozen=True)
class Li(Expr):
    order: int
    arg: Expr

    def __post_init__(self) -> None:
        if not 1 <= self.order <= 4:
            raise ValueError("Li leaf order must lie in 1..4")


@dataclass(frozen=True)
class Mpl(Expr):
    weights: Tuple[int, ...]
    args: Tuple[Expr, ...]


@dataclass(frozen=True)
class Im(Expr):
    arg: Expr


@dataclass(frozen=True)
class Sum(Expr):
    terms: Tuple[Expr, ...]


@dataclass(frozen=True)
class Prod(Expr):
    factors: Tuple[Expr, ...]


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError("Pow exponent must be non-negative")


# compact builders used heavily by the identity catalog
def q(num: int, den: int = 1) -> Rat:
    return Rat(_F(num, den))


def rt(num, den: int = 1) -> Sqrt:
    return Sqrt(_F(num, den))


I_UNIT = ImUnit()


def c_(name: NamedConstant) -> Const:
    return Const(name)


def li_(order: int, arg: Expr) -> Li:
    return Li(order, arg)


def im_(arg: Expr) -> Im:
    return Im(arg)


def add_(*terms: Expr) -> Sum:
    return Sum(tuple(terms))


def mul_(*factors: Expr) -> Prod:
    return Prod(tuple(factors))


def pow_(base: Expr, exponent: int) -> Pow:
    return Pow(base, exponent)


def eval_raw(expr: Expr):
    """Evaluate an expression tree to mpc at the current working precision."""
    if isinstance(expr, Rat):
        return mp.mpc(mp.mpf(expr.value.numerator) / expr.value.denominator)
    if isinstance(expr, Sqrt):
        return mp.mpc(mp.sqrt(mp.mpf(expr.value.numerator) / expr.value.denominator))
    if isinstance(expr, ImUnit):
        return mp.mpc(0, 1)
    if isinstance(expr, Const):
        return mp.mpc(constant_raw(expr.name))
    if isinstance(expr, Li):
        return li_raw(expr.order, eval_raw(expr.arg))
    if isinstance(expr, Mpl):
        return mpl_eval_raw(expr.weights, tuple(eval_raw(a) for a in expr.args))
    if isinstance(expr, Im):
        return mp.mpc(eval_raw(expr.arg).imag)
    if isinstance(expr, Sum):
        return sum((eval_raw(t) for t in expr.terms), mp.mpc(0))
    if isinstance(expr, Prod):
        acc = mp.mpc(1)
        for f in expr.factors:
            acc *= eval_raw(f)
        return acc
    if isinstance(expr, Pow):
        return eval_raw(expr.base) ** expr.exponent
    raise TypeError(f"not a ConstantExpr node: {expr!r}")


def eval_expr(expr: Expr, ctx: PrecisionCtx = DEFAULT_CTX) -> ApComplex:
    """Evaluate a ConstantExpr; retries with doubled guard digits on failure."""
    def attempt(c: PrecisionCtx) -> ApComplex:
        with c.working():
            return ApComplex.wrap(eval_raw(expr), c.digits)

    return with_guard_retries(attempt, ctx)


def rational_leaf_count(expr: Expr) -> int:
    """Number of Rat leaves in depth-first order (perturbation indexing)."""
    if isinstance(expr, Rat):
        return 1
    if isinstance(expr, (Sqrt, ImUnit, Const)):
        return 0
    if isinstance(expr, Li):
        return rational_leaf_count(expr.arg)
    if isinstance(expr, Mpl):
        return sum(rational_leaf_count(a) for a in expr.args)
    if isinstance(expr, Im):
        return rational_leaf_count(expr.arg)
    if isinstance(expr, Pow):
        return rational_leaf_count(expr.base)
    if isinstance(expr, (Sum, Prod)):
        children = expr.terms if isinstance(expr, Sum) else expr.factors
        return sum(rational_leaf_count(ch) for ch in children)
    raise TypeError(f"not a ConstantExpr node: {expr!r}")


def perturb_rational_leaf(expr: Expr, index: int,
                          rel: Fraction = _F(1, 1000)) -> Expr:
    """Return a copy with the index-th Rat leaf scaled by (1 + rel)."""
    new_expr, remaining = _perturb(expr, index, rel)
    if remaining >= 0:
        raise IndexError(f"expression has no rational leaf #{index}")
    return new_expr


def _perturb(expr: Expr, index: int, rel: Fraction):
    if isinstance(expr, Rat):
        if index == 0:
            return Rat(expr.value * (1 + rel)), -1
        return expr, index - 1
    if isinstance(expr, (Sqrt, ImUnit, Const)):
        return expr, index
    if isinstance(expr, Li):
        arg, index = _perturb(expr.arg, index, rel)
        return Li(expr.order, arg), index
    if isinstance(expr, Mpl):
        args = []
        for a in expr.args:
            a2, index = _perturb(a, index, rel)
            args.append(a2)
        return Mpl(expr.weights, tuple(args)), index
    if isinstance(expr, Im):
        arg, index = _perturb(expr.arg, index, rel)
        return Im(arg), index
    if isinstance(expr, Pow):
        base, index = _perturb(expr.base, index, rel)
        return Pow(base, expr.exponent), index
    if isinstance(expr, Sum):
        terms = []
        for t in expr.terms:
            t2, index = _perturb(t, index, rel)
            terms.append(t2)
        return Sum(tuple(terms)), index
    if isinstance(expr, Prod):
        factors = []
        for f in expr.factors:
            f2, index = _perturb(f, index, rel)
            factors.append(f2)
        return Prod(tuple(factors)), index
    raise TypeError(f"not a ConstantExpr node: {expr!r}")
