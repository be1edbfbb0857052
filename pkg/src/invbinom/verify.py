"""Verification engine: evaluate both sides of catalog identities and
compare, single or batch, with deterministic parallel fan-out.

digits_agreed uses the relative difference against max(1, |rhs|) so
identities with values near 1 and near pi^3 are scored on one scale.
Batch runs fan out across worker processes (mpmath precision state is
process-global, so processes rather than threads); every task is a fixed
(identity id, precision) pair, which makes reports bitwise independent of
the worker count.
"""

from __future__ import annotations

import concurrent.futures
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from mpmath import mp

from .bernoulli import ensure_bernoulli
from .catalog import (
    ChudnovskyLhs,
    ExprLhs,
    Identity,
    SeriesLhs,
    TrilogFamily,
    WSeriesLhs,
    builtin_catalog,
    catalog_by_id,
    trilog_family_samples,
)
from .constants import Expr, eval_raw
from .precision import ApComplex, DEFAULT_CTX, EvaluationError, PrecisionCtx
from .series import (
    SeriesSpec,
    WParam,
    alternating_w_series,
    chudnovsky_series,
    s_series,
    trilog_identity_lhs,
    trilog_identity_rhs,
)


@dataclass(frozen=True)
class VerificationReport:
    id: str
    lhs_value: Optional[ApComplex]
    rhs_value: Optional[ApComplex]
    abs_diff: object            # mpf
    digits_agreed: float
    precision_used: int
    elapsed_ms: float
    status: str                 # pass | fail | error
    anchor: str = ""
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _evaluate_lhs(lhs, ctx: PrecisionCtx) -> "mp.mpc":
    if isinstance(lhs, SeriesLhs):
        value = s_series(SeriesSpec(lhs.k, lhs.z), ctx).mpc
        if lhs.scale is not None:
            with ctx.working():
                value = eval_raw(lhs.scale) * value
        return value
    if isinstance(lhs, ChudnovskyLhs):
        return chudnovsky_series(ctx).mpc
    if isinstance(lhs, ExprLhs):
        with ctx.working():
            return eval_raw(lhs.expr)
    if isinstance(lhs, WSeriesLhs):
        return alternating_w_series(lhs.k, lhs.w, ctx).mpc
    raise TypeError(f"unknown lhs kind {lhs!r}")


def _digits_agreed(abs_diff, rhs_mag, cap: int) -> float:
    if abs_diff == 0:
        return float(cap)
    rel = abs_diff / max(mp.mpf(1), rhs_mag)
    return min(float(cap), float(-mp.log10(rel)))


def _sample_w(sample):
    kind = sample[0]
    if kind == "real":
        return mp.mpc(mp.mpf(sample[1]), 0)
    if kind == "circle":
        return mp.mpc(mp.cos(mp.mpf(sample[1])), mp.sin(mp.mpf(sample[1])))
    return mp.mpc(mp.mpf(sample[1]), mp.mpf(sample[2]))


def verify(identity: Identity, ctx: PrecisionCtx = DEFAULT_CTX) -> VerificationReport:
    """Evaluate lhs and rhs of one identity and compare."""
    start = time.perf_counter()
    cap = ctx.wdigits
    try:
        if isinstance(identity.lhs, TrilogFamily):
            worst = None
            with ctx.working():
                samples = trilog_family_samples(identity.lhs)
                ws = [_sample_w(s) for s in samples]
            for w in ws:
                lhs = trilog_identity_lhs(WParam(w), ctx)
                rhs = trilog_identity_rhs(WParam(w), ctx)
                with ctx.working():
                    diff = abs(lhs.mpc - rhs.mpc)
                    if worst is None or diff > worst[0]:
                        worst = (diff, lhs, rhs)
            abs_diff, lhs_v, rhs_v = worst
        else:
            lhs_mpc = _evaluate_lhs(identity.lhs, ctx)
            with ctx.working():
                rhs_mpc = eval_raw(identity.rhs)
                abs_diff = abs(lhs_mpc - rhs_mpc)
            lhs_v = ApComplex.wrap(lhs_mpc, ctx.digits)
            rhs_v = ApComplex.wrap(rhs_mpc, ctx.digits)
        with ctx.working():
            digits = _digits_agreed(abs_diff, abs(rhs_v.mpc), cap)
        status = "pass" if digits >= identity.min_digits else "fail"
        detail = ""
    except EvaluationError as exc:
        elapsed = (time.perf_counter() - start) * 1000.0
        return VerificationReport(
            id=identity.id, lhs_value=None, rhs_value=None,
            abs_diff=mp.inf, digits_agreed=0.0,
            precision_used=ctx.digits, elapsed_ms=elapsed,
            status="error", anchor=identity.anchor, detail=str(exc),
        )
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        id=identity.id, lhs_value=lhs_v, rhs_value=rhs_v,
        abs_diff=abs_diff, digits_agreed=digits,
        precision_used=ctx.digits, elapsed_ms=elapsed,
        status=status, anchor=identity.anchor, detail=detail,
    )


def _verify_builtin_by_id(args) -> VerificationReport:
    ident_id, digits, guard = args
    identity = catalog_by_id()[ident_id]
    return verify(identity, PrecisionCtx(digits, guard))


def verify_all(ctx: PrecisionCtx = DEFAULT_CTX, workers: int = 1,
               catalog: Optional[Sequence[Identity]] = None) -> list[VerificationReport]:
    """Verify a catalog (builtin by default), reports in catalog order.

    Results are a pure function of (catalog, ctx); the worker count only
    affects wall time.  Per-entry errors become status="error" reports and
    never abort the batch.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    entries = tuple(builtin_catalog() if catalog is None else catalog)
    ensure_bernoulli(4 * ctx.wdigits + 80)  # fill the shared cache before forking
    if workers == 1 or catalog is not None or len(entries) <= 1:
        return [verify(ident, ctx) for ident in entries]
    tasks = [(ident.id, ctx.digits, ctx.guard) for ident in entries]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_builtin_by_id, tasks))


def report_row(report: VerificationReport) -> dict:
    """Stable serialization of one report (no timing fields)."""
    return {
        "id": report.id,
        "status": report.status,
        "digits_agreed": round(report.digits_agreed, 2),
        "abs_diff": mp.nstr(mp.mpf(report.abs_diff), 3) if mp.isfinite(report.abs_diff) else "inf",
        "precision_used": report.precision_used,
        "anchor": report.anchor,
    }
