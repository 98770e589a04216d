"""The four ranking methods: MOORA, RAM, FUCA and CURLI.

Every method takes a :class:`~mcdm_compare.core.DecisionMatrix` whose
criteria carry direction and weight, and returns a
:class:`~mcdm_compare.core.MethodResult`. Pass ``criteria`` to override the
matrix's own criteria for a single call.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .core import (
    ConfigError,
    Criterion,
    DecisionMatrix,
    Direction,
    MethodResult,
    RankOrder,
    TiePolicy,
    column_ranks,
    rank_scores,
    validate,
)
from .normalize import apply_weights, sum_normalize, vector_normalize

__all__ = [
    "METHODS",
    "CANONICAL_ORDER",
    "curli",
    "curli_score_table",
    "fuca",
    "moora",
    "ram",
    "run_method",
]

CANONICAL_ORDER: dict[str, RankOrder] = {
    "moora": RankOrder.DESCENDING,
    "ram": RankOrder.DESCENDING,
    "fuca": RankOrder.ASCENDING,
    "curli": RankOrder.ASCENDING,
}


def _resolve(matrix: DecisionMatrix, criteria: Sequence[Criterion] | None) -> DecisionMatrix:
    if criteria is not None:
        matrix = matrix.with_criteria(criteria)
    validate(matrix).raise_for_violations()
    return matrix


def _benefit_mask(matrix: DecisionMatrix) -> np.ndarray:
    return np.array([c.direction is Direction.BENEFIT for c in matrix.criteria])


def _result(name, matrix, scores, policy, **details) -> MethodResult:
    order = CANONICAL_ORDER[name]
    policy = TiePolicy(policy)
    return MethodResult(
        method=name.upper(),
        alternatives=matrix.alternatives,
        scores=scores,
        ranks=rank_scores(scores, order, policy),
        order=order,
        policy=policy,
        details=details,
    )


def moora(
    matrix: DecisionMatrix,
    criteria: Sequence[Criterion] | None = None,
    policy: TiePolicy | str = TiePolicy.COMPETITION,
) -> MethodResult:
    """Ratio-system MOORA with averaged benefit and cost parts.

    ``Q_i = P_i - R_i`` where ``P_i`` is the mean of the weighted
    vector-normalized benefit values of row ``i`` and ``R_i`` the mean over
    cost criteria. An empty benefit or cost set contributes 0. The largest
    ``Q`` ranks first.
    """
    matrix = _resolve(matrix, criteria)
    v = apply_weights(vector_normalize(matrix), matrix.criteria).values
    benefit = _benefit_mask(matrix)
    m = v.shape[0]
    p = v[:, benefit].sum(axis=1) / benefit.sum() if benefit.any() else np.zeros(m)
    r = v[:, ~benefit].sum(axis=1) / (~benefit).sum() if (~benefit).any() else np.zeros(m)
    q = p - r
    return _result("moora", matrix, q, policy, P=p, R=r, Q=q)


def ram(
    matrix: DecisionMatrix,
    criteria: Sequence[Criterion] | None = None,
    policy: TiePolicy | str = TiePolicy.COMPETITION,
) -> MethodResult:
    """Root Assessment Method.

    With ``S+`` and ``S-`` the row sums of the weighted sum-normalized benefit
    and cost values, the score is ``(2 + S+) ** (1 / (2 + S-))``. Larger is
    better.
    """
    matrix = _resolve(matrix, criteria)
    y = apply_weights(sum_normalize(matrix), matrix.criteria).values
    benefit = _benefit_mask(matrix)
    s_plus = y[:, benefit].sum(axis=1)
    s_minus = y[:, ~benefit].sum(axis=1)
    ri = (2.0 + s_plus) ** (1.0 / (2.0 + s_minus))
    return _result("ram", matrix, ri, policy, Splus=s_plus, Sminus=s_minus, RI=ri)


def _exact_weighted_sum(ranks: np.ndarray, weights: np.ndarray) -> np.ndarray:
    # Rows whose weighted rank sums are mathematically equal must compare
    # equal, otherwise float noise (e.g. 91 * (1/6) summed in different
    # orders) turns genuine ties into arbitrary strict orders.
    ws = [Fraction(float(w)) for w in weights]
    return np.array([float(sum((Fraction(float(r)) * w for r, w in zip(row, ws)), Fraction(0))) for row in ranks])


def fuca(
    matrix: DecisionMatrix,
    criteria: Sequence[Criterion] | None = None,
    policy: TiePolicy | str = TiePolicy.COMPETITION,
) -> MethodResult:
    """Weighted rank-sum method.

    Each column is ranked (rank 1 = best value under the criterion's
    direction) and the score is ``S_i = sum_j r_ij * w_j``. The smallest
    score ranks first. Works on any finite data, no normalization involved.

    The weighted sum is accumulated exactly so that equal rank sums tie.
    """
    matrix = _resolve(matrix, criteria)
    r = column_ranks(matrix, policy)
    s = _exact_weighted_sum(r, matrix.weights)
    return _result("fuca", matrix, s, policy, column_ranks=r)


def curli_score_table(matrix: DecisionMatrix) -> np.ndarray:
    """Net pairwise wins ``P[i, j]`` of alternative ``i`` under criterion ``j``.

    Against each other alternative, ``i`` scores +1 when its value is larger
    (benefit) or smaller (cost), -1 in the opposite case and 0 on equality.
    """
    x = matrix.values
    signs = np.sign(x[:, None, :] - x[None, :, :]).sum(axis=1)
    flip = np.where(_benefit_mask(matrix), 1.0, -1.0)
    return (signs * flip).astype(np.int64)


def curli(
    matrix: DecisionMatrix,
    criteria: Sequence[Criterion] | None = None,
    policy: TiePolicy | str = TiePolicy.COMPETITION,
) -> MethodResult:
    """CURLI pairwise-comparison scores ``R_i = sum_j P_ij``; smallest ranks first.

    Weights are ignored. Note the orientation: an alternative that wins its
    comparisons collects a large score and hence a large rank number. On
    smaller-is-better data (such as the bundled indicator ranks) declaring the
    criteria as benefit makes rank 1 the best alternative; with directions
    declared truthfully, rank 1 is the worst.
    """
    matrix = _resolve(matrix, criteria)
    table = curli_score_table(matrix)
    r = table.sum(axis=1)
    return _result("curli", matrix, r.astype(float), policy, P=table, R=r)


METHODS: dict[str, Callable[..., MethodResult]] = {
    "moora": moora,
    "ram": ram,
    "fuca": fuca,
    "curli": curli,
}


def run_method(
    name: str,
    matrix: DecisionMatrix,
    criteria: Sequence[Criterion] | None = None,
    policy: TiePolicy | str = TiePolicy.COMPETITION,
) -> MethodResult:
    try:
        fn = METHODS[name.strip().lower()]
    except KeyError:
        raise ConfigError(f"unknown method {name!r} (choose from {', '.join(METHODS)})") from None
    return fn(matrix, criteria, policy)
