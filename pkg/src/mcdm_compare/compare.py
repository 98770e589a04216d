"""Rank-vector comparison: Spearman coefficients and agreement counts."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np
import numpy.typing as npt

from .core import DataError

__all__ = ["ComparisonReport", "agreement", "spearman_naive", "spearman_tie_adjusted"]


def _pair(a: npt.ArrayLike, b: npt.ArrayLike) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.size != b.size:
        raise DataError(f"rank vector length mismatch: {a.size} vs {b.size}")
    if a.size < 2:
        raise DataError(f"m >= 2 required to compare rankings (got {a.size})")
    if not (np.isfinite(a).all() and np.isfinite(b).all()):
        raise DataError("rank vectors must be finite")
    return a, b


def spearman_naive(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """``1 - 6 * sum(D**2) / (m * (m**2 - 1))`` with ``D = a - b``.

    No tie correction is applied, so the value can fall outside ``[-1, 1]``
    when either vector contains ties.
    """
    a, b = _pair(a, b)
    m = a.size
    d2 = float(np.sum((a - b) ** 2))
    return 1.0 - 6.0 * d2 / (m * (m * m - 1))


def spearman_tie_adjusted(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """Pearson correlation of the two rank vectors; always in ``[-1, 1]``.

    Raises :class:`DataError` when either vector is constant.
    """
    a, b = _pair(a, b)
    da = a - a.mean()
    db = b - b.mean()
    sa = math.fsum(da * da)
    sb = math.fsum(db * db)
    if sa == 0 or sb == 0:
        raise DataError("correlation undefined for a constant rank vector")
    r = math.fsum(da * db) / math.sqrt(sa * sb)
    return max(-1.0, min(1.0, r))


@dataclass(frozen=True)
class ComparisonReport:
    spearman_naive: float
    spearman_tie_adjusted: float | None
    exact_matches: int
    sum_sq_diff: float
    max_abs_diff: float
    m: int

    def as_dict(self) -> dict:
        return asdict(self)


def agreement(a: Sequence[float] | npt.ArrayLike, b: Sequence[float] | npt.ArrayLike) -> ComparisonReport:
    """Summarize how closely two aligned rank vectors agree.

    ``spearman_tie_adjusted`` is ``None`` if one vector is constant.
    """
    a, b = _pair(a, b)
    d = a - b
    try:
        adjusted: float | None = spearman_tie_adjusted(a, b)
    except DataError:
        adjusted = None
    return ComparisonReport(
        spearman_naive=spearman_naive(a, b),
        spearman_tie_adjusted=adjusted,
        exact_matches=int(np.count_nonzero(d == 0)),
        sum_sq_diff=float(np.sum(d * d)),
        max_abs_diff=float(np.max(np.abs(d))),
        m=int(a.size),
    )
