"""Column normalization (vector and sum schemes) and weighting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .core import Criterion, DataError, DecisionMatrix, ConfigError, validate

__all__ = [
    "NormalizedMatrix",
    "WeightedMatrix",
    "apply_weights",
    "sum_normalize",
    "vector_normalize",
]


@dataclass(frozen=True, eq=False)
class NormalizedMatrix:
    values: np.ndarray
    scheme: Literal["vector", "sum"]


@dataclass(frozen=True, eq=False)
class WeightedMatrix:
    values: np.ndarray
    scheme: Literal["vector", "sum"]


def _checked_values(matrix: DecisionMatrix) -> np.ndarray:
    validate(matrix).raise_for_violations()
    x = matrix.values
    neg = np.argwhere(x < 0)
    if neg.size:
        i, j = neg[0]
        raise DataError(
            f"criterion {matrix.criteria[j].name!r}: negative value {x[i, j]:g} at cell ({i + 1},{j + 1}); "
            "normalization requires non-negative data"
        )
    return x


def _column_sums(x: np.ndarray) -> np.ndarray:
    # row-index order accumulation, no pairwise summation
    total = np.zeros(x.shape[1])
    for row in x:
        total = total + row
    return total


def vector_normalize(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Divide each column by its Euclidean norm ``sqrt(sum_i x_ij**2)``."""
    x = _checked_values(matrix)
    norms = np.sqrt(_column_sums(x * x))
    for j in np.flatnonzero(norms == 0):
        raise DataError(f"criterion {matrix.criteria[j].name!r}: all-zero column cannot be vector-normalized")
    out = x / norms
    out.setflags(write=False)
    return NormalizedMatrix(out, "vector")


def sum_normalize(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Divide each column by its sum ``sum_i x_ij``."""
    x = _checked_values(matrix)
    sums = _column_sums(x)
    for j in np.flatnonzero(sums <= 0):
        raise DataError(f"criterion {matrix.criteria[j].name!r}: column sum must be positive, got {sums[j]:g}")
    out = x / sums
    out.setflags(write=False)
    return NormalizedMatrix(out, "sum")


def apply_weights(normalized: NormalizedMatrix, criteria: Sequence[Criterion] | Sequence[float]) -> WeightedMatrix:
    """Multiply column ``j`` by the weight of criterion ``j``."""
    weights = np.array([c.weight if isinstance(c, Criterion) else float(c) for c in criteria])
    if weights.shape != (normalized.values.shape[1],):
        raise ConfigError(
            f"weight count mismatch: expected {normalized.values.shape[1]}, got {weights.size}"
        )
    out = normalized.values * weights
    out.setflags(write=False)
    return WeightedMatrix(out, normalized.scheme)
