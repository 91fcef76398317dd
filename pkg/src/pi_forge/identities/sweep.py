"""
Bulk certification of an identity over a rectangle of (m, k).

Cells are independent. With ``workers > 1`` whole rows of fixed m are
farmed out to a process pool; ``Executor.map`` keeps rows in submission
order, so the reports always come back ordered by (m, k).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

import structlog

from pi_forge.config import get_settings
from pi_forge.identities.binomial import verify
from pi_forge.models.identities import IdentityId, IdentityReport
from pi_forge.models.runs import SweepResult

logger = structlog.get_logger(__name__)


def _row_ks(identity_id: IdentityId, m: int, k_max: int, exploratory: bool) -> range:
    if identity_id is IdentityId.IV3 and not exploratory:
        return range(m, k_max + 1)
    return range(k_max + 1)


def _verify_row(
    identity_id: IdentityId, m: int, k_max: int, exploratory: bool
) -> list[IdentityReport]:
    return [
        verify(identity_id, m, k, exploratory=exploratory)
        for k in _row_ks(identity_id, m, k_max, exploratory)
    ]


def sweep(
    identity_id: IdentityId | str,
    m_max: int | None = None,
    k_max: int | None = None,
    *,
    workers: int | None = None,
    exploratory: bool = False,
) -> SweepResult:
    """Certify an identity at every admissible (m, k) with m ≤ m_max, k ≤ k_max.

    IV3 is restricted to k ≥ m unless ``exploratory`` is set, in which case
    the k < m cells are included and marked non-normative.

    Args:
        identity_id: IV1, IV2 or IV3 (case-insensitive)
        m_max: Upper bound on m (default from settings)
        k_max: Upper bound on k (default from settings)
        workers: Worker processes (default from settings; 1 runs inline)
        exploratory: Include IV3 cells outside k ≥ m

    Returns:
        SweepResult with the reports ordered by (m, k)
    """
    settings = get_settings().sweep
    identity = IdentityId.parse(identity_id)
    m_max = settings.m_max if m_max is None else m_max
    k_max = settings.k_max if k_max is None else k_max
    workers = settings.workers if workers is None else workers
    if m_max < 0 or k_max < 0:
        raise ValueError(f"Sweep bounds must be non-negative, got m_max = {m_max}, k_max = {k_max}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    run = SweepResult(
        identity_id=identity,
        m_max=m_max,
        k_max=k_max,
        workers=workers,
        exploratory=exploratory,
    )
    start_time = time.monotonic()
    rows = range(m_max + 1)
    n = len(rows)

    try:
        if workers == 1:
            for m in rows:
                run.reports.extend(_verify_row(identity, m, k_max, exploratory))
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for reports in pool.map(
                    _verify_row,
                    [identity] * n,
                    rows,
                    [k_max] * n,
                    [exploratory] * n,
                ):
                    run.reports.extend(reports)
    except Exception as e:
        logger.error("sweep_failed", identity_id=identity.value, error=str(e))
        run.complete(error=str(e))
        raise

    run.complete()
    logger.info(
        "sweep_completed",
        **run.summary_dict(),
        elapsed=round(time.monotonic() - start_time, 3),
    )
    for failure in run.failures:
        logger.warning(
            "identity_falsified",
            identity_id=failure.identity_id.value,
            m=failure.m,
            k=failure.k,
            lhs=str(failure.lhs),
        )
    return run
