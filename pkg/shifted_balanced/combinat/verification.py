"""Exhaustive desk-scale check that the bijection matches SYT(λ) with BS(λ)."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

from shifted_balanced.combinat.bijections import TrapezoidContext, bs_to_syt, syt_to_bs
from shifted_balanced.combinat.schemas import TrapezoidComparison, VerificationReport
from shifted_balanced.combinat.shapes import (
    ShiftedTableau,
    StrictPartition,
    enumerate_bs_bruteforce,
    enumerate_syt,
    hook_length_formula_count,
    is_balanced,
)
from shifted_balanced.config import settings
from shifted_balanced.errors import InternalInvariantError, ShiftedBalancedError

logger = logging.getLogger(__name__)


def _round_trip(
    tableau: ShiftedTableau, ctx: TrapezoidContext
) -> tuple[ShiftedTableau | None, ShiftedTableau | None, str | None]:
    try:
        image = syt_to_bs(ctx.shape, tableau, ctx.d, ctx.r)
        back = bs_to_syt(ctx.shape, image, ctx.d, ctx.r)
    except (ShiftedBalancedError, InternalInvariantError) as exc:
        return None, None, f"{list(tableau.rows)}: {exc}"
    return image, back, None


def verify_shape(
    shape: StrictPartition,
    d: int | None = None,
    r: int | None = None,
    oracle: bool = True,
    cap: int | None = None,
    workers: int | None = None,
) -> VerificationReport:
    ctx = TrapezoidContext.build(shape, d, r)
    syts = list(enumerate_syt(shape, cap))
    hook_count = hook_length_formula_count(shape)
    workers = settings.verify_workers if workers is None else workers

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda t: _round_trip(t, ctx), syts))

    failures = [message for _, _, message in results if message is not None]
    images = [image for image, _, _ in results if image is not None]
    round_trip = not failures and all(back == t for t, (_, back, _) in zip(syts, results))
    all_balanced = all(is_balanced(image) for image in images)
    distinct = len(set(images)) == len(images)

    oracle_count = oracle_match = None
    bs_cap = settings.bs_cap if cap is None else cap
    if oracle and shape.size <= bs_cap:
        found = set(enumerate_bs_bruteforce(shape, bs_cap))
        oracle_count = len(found)
        oracle_match = found == set(images)

    passed = (
        not failures
        and len(syts) == hook_count
        and all_balanced
        and distinct
        and round_trip
        and oracle_match is not False
    )
    logger.info("verified shape %s at Z(%d, %d): %s", shape, ctx.d, ctx.r, "PASS" if passed else "FAIL")
    return VerificationReport(
        shape=list(shape.parts),
        d=ctx.d,
        r=ctx.r,
        syt_count=len(syts),
        hook_count=hook_count,
        bs_count=len(set(images)),
        all_balanced=all_balanced,
        distinct=distinct,
        round_trip=round_trip,
        oracle_count=oracle_count,
        oracle_match=oracle_match,
        failures=failures,
        passed=passed,
    )


def compare_trapezoid_choices(shape: StrictPartition, cap: int | None = None) -> TrapezoidComparison:
    """How many SYT get the same image at the minimal r and at r + 1. Informational."""
    low = TrapezoidContext.build(shape)
    high = TrapezoidContext.build(shape, r=low.r + 1)
    total = agreeing = 0
    for tableau in enumerate_syt(shape, cap):
        total += 1
        if syt_to_bs(shape, tableau, low.d, low.r) == syt_to_bs(shape, tableau, high.d, high.r):
            agreeing += 1
    return TrapezoidComparison(
        shape=list(shape.parts), r_min=low.r, r_alt=high.r, total=total, agreeing=agreeing
    )
