"""Arbitrary-precision inverse central-binomial series, polylogarithms,
and an identity-verification harness.

The package evaluates S_k(z) = sum_n z^n / ((2n+1)^k C(2n,n)) by three
independent pathways (direct series, closed forms over polylogarithmic
constants, and tanh-sinh contour quadrature of integral representations)
and verifies a built-in catalog of explicit identities to a user-chosen
digit count.
"""

from .precision import (
    ApComplex,
    BranchTrackingError,
    DivergenceError,
    EvaluationError,
    NonFiniteError,
    PrecisionCtx,
    PrecisionUnreachableError,
    QuadratureError,
)
from .bernoulli import bernoulli_fraction, ensure_bernoulli
from .hurwitz import hurwitz_zeta
from .constants import NamedConstant, eval_expr, named_constant
from .polylog import GplWord, MplSpec, gpl_eval, gpl_to_mpl, li, mpl_direct, mpl_to_gpl
from .quadrature import (
    QuadResult,
    Segment,
    integrate_segment,
    s3_alternating_contour,
    s3_positive_integral,
    sk_alternating_contour,
    sk_line_integral,
)
from .series import (
    SeriesSpec,
    WParam,
    alternating_w_series,
    chudnovsky_series,
    s0_closed,
    s1_closed,
    s_series,
    trilog_identity_lhs,
    trilog_identity_rhs,
)
from .catalog import Identity, builtin_catalog
from .verify import VerificationReport, verify, verify_all
from .words import WordCombination, integrand_word_expansion, remove_trailing_zeros, shuffle

__version__ = "0.1.0"

__all__ = [
    "ApComplex",
    "PrecisionCtx",
    "EvaluationError",
    "PrecisionUnreachableError",
    "DivergenceError",
    "NonFiniteError",
    "BranchTrackingError",
    "QuadratureError",
    "bernoulli_fraction",
    "ensure_bernoulli",
    "hurwitz_zeta",
    "NamedConstant",
    "named_constant",
    "eval_expr",
    "li",
    "MplSpec",
    "mpl_direct",
    "GplWord",
    "gpl_eval",
    "gpl_to_mpl",
    "mpl_to_gpl",
    "Segment",
    "QuadResult",
    "integrate_segment",
    "s3_positive_integral",
    "s3_alternating_contour",
    "sk_alternating_contour",
    "sk_line_integral",
    "SeriesSpec",
    "s_series",
    "s0_closed",
    "s1_closed",
    "chudnovsky_series",
    "WParam",
    "alternating_w_series",
    "trilog_identity_lhs",
    "trilog_identity_rhs",
    "Identity",
    "builtin_catalog",
    "verify",
    "verify_all",
    "VerificationReport",
    "WordCombination",
    "shuffle",
    "remove_trailing_zeros",
    "integrand_word_expansion",
    "__version__",
]
