"""Decision matrices, criteria and the score-to-rank conversion shared by all methods."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import numpy.typing as npt

__all__ = [
    "ConfigError",
    "DataError",
    "DecisionMatrix",
    "Direction",
    "Criterion",
    "MCDMError",
    "MethodResult",
    "RankOrder",
    "TiePolicy",
    "ValidationReport",
    "column_ranks",
    "rank_scores",
    "validate",
]


class MCDMError(Exception):
    """Base class for every error raised by this package."""


class DataError(MCDMError, ValueError):
    """Invalid or unparseable input data."""


class ConfigError(MCDMError, ValueError):
    """Inconsistent analysis configuration (weights, directions, policies)."""


class Direction(str, enum.Enum):
    BENEFIT = "benefit"
    COST = "cost"

    @classmethod
    def parse(cls, token: str | Direction) -> Direction:
        if isinstance(token, Direction):
            return token
        try:
            return cls(token.strip().lower())
        except ValueError:
            raise ConfigError(f"unknown direction {token!r} (expected 'benefit' or 'cost')") from None

    def flipped(self) -> Direction:
        return Direction.COST if self is Direction.BENEFIT else Direction.BENEFIT


class TiePolicy(str, enum.Enum):
    """How equal scores are turned into ranks.

    ``COMPETITION`` gives tied items the smallest rank of their group (1, 2, 2, 4),
    ``ORDINAL`` breaks ties by input position and ``AVERAGE`` assigns the mean of
    the spanned ranks (1, 2.5, 2.5, 4).
    """

    COMPETITION = "competition"
    ORDINAL = "ordinal"
    AVERAGE = "average"


class RankOrder(str, enum.Enum):
    ASCENDING = "ascending"  # smallest score gets rank 1
    DESCENDING = "descending"  # largest score gets rank 1


def _clean_name(name: str) -> str:
    return str(name).strip()


@dataclass(frozen=True)
class Criterion:
    name: str
    direction: Direction = Direction.COST
    weight: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "name", _clean_name(self.name))
        object.__setattr__(self, "direction", Direction.parse(self.direction))
        weight = float(self.weight)
        if not math.isfinite(weight) or weight <= 0:
            raise ConfigError(f"criterion {self.name!r}: weight must be a positive finite number, got {self.weight!r}")
        object.__setattr__(self, "weight", weight)


def _readonly(values: npt.ArrayLike) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class DecisionMatrix:
    """An ``m x n`` table of raw criterion values, one row per alternative.

    Construction never raises on content problems (wrong shape, NaN, duplicate
    names); use :func:`validate` to list them. The ranking methods refuse
    invalid matrices.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[Criterion, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alternatives", tuple(_clean_name(a) for a in self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "values", _readonly(self.values))

    @classmethod
    def from_values(
        cls,
        values: npt.ArrayLike,
        alternatives: Sequence[str] | None = None,
        criteria: Sequence[str | Criterion] | None = None,
        directions: Sequence[str | Direction] | str | Direction | None = None,
        weights: Sequence[float] | None = None,
    ) -> DecisionMatrix:
        """Build a matrix from a 2-D array, filling in defaults.

        Missing alternative names become ``A1..Am`` and criterion names
        ``C1..Cn``. Directions default to cost and weights to ``1/n``. A single
        direction is applied to every criterion.
        """
        arr = np.array(values, dtype=float)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        m, n = arr.shape if arr.ndim == 2 else (0, 0)
        if alternatives is None:
            alternatives = [f"A{i + 1}" for i in range(m)]
        if criteria is None:
            criteria = [f"C{j + 1}" for j in range(n)]
        names_only = not all(isinstance(c, Criterion) for c in criteria)
        crits = tuple(
            c if isinstance(c, Criterion) else Criterion(c, weight=1.0 / max(n, 1)) for c in criteria
        )
        matrix = cls(tuple(alternatives), crits, arr)
        if names_only and weights is None:
            weights = [1.0 / n] * n
        if directions is not None or weights is not None:
            matrix = matrix.with_policy(directions=directions, weights=weights)
        return matrix

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.alternatives), len(self.criteria))

    @property
    def criterion_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.criteria)

    @property
    def directions(self) -> tuple[Direction, ...]:
        return tuple(c.direction for c in self.criteria)

    @property
    def weights(self) -> np.ndarray:
        return np.array([c.weight for c in self.criteria])

    def with_criteria(self, criteria: Sequence[Criterion]) -> DecisionMatrix:
        criteria = tuple(criteria)
        if len(criteria) != len(self.criteria):
            raise ConfigError(
                f"criterion count mismatch: matrix has {len(self.criteria)} columns, got {len(criteria)} criteria"
            )
        return DecisionMatrix(self.alternatives, criteria, self.values)

    def with_policy(
        self,
        directions: Sequence[str | Direction] | str | Direction | None = None,
        weights: Sequence[float] | None = None,
    ) -> DecisionMatrix:
        """Return a copy with new directions and/or weights.

        ``None`` keeps the current value. Use :meth:`equal_weights` for ``1/n``.
        """
        n = len(self.criteria)
        if directions is None:
            dirs = [c.direction for c in self.criteria]
        elif isinstance(directions, (str, Direction)):
            dirs = [Direction.parse(directions)] * n
        else:
            dirs = [Direction.parse(d) for d in directions]
            if len(dirs) != n:
                raise ConfigError(f"direction count mismatch: expected {n}, got {len(dirs)}")
        if weights is None:
            ws = [c.weight for c in self.criteria]
        else:
            ws = [float(w) for w in weights]
            if len(ws) != n:
                raise ConfigError(f"weight count mismatch: expected {n}, got {len(ws)}")
        return self.with_criteria(Criterion(c.name, d, w) for c, d, w in zip(self.criteria, dirs, ws))

    def equal_weights(self) -> DecisionMatrix:
        n = len(self.criteria)
        return self.with_policy(weights=[1.0 / n] * n)

    def take(self, rows: Sequence[int]) -> DecisionMatrix:
        """Rows reordered (or subset) by index."""
        rows = list(rows)
        return DecisionMatrix(tuple(self.alternatives[i] for i in rows), self.criteria, self.values[rows])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecisionMatrix):
            return NotImplemented
        return (
            self.alternatives == other.alternatives
            and self.criteria == other.criteria
            and self.values.shape == other.values.shape
            and bool(np.array_equal(self.values, other.values))
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_for_violations(self) -> None:
        if self.violations:
            raise DataError("invalid decision matrix: " + "; ".join(self.violations))


def _duplicates(names: Iterable[str]) -> list[str]:
    seen: set[str] = set()
    dups: list[str] = []
    for name in names:
        if name in seen and name not in dups:
            dups.append(name)
        seen.add(name)
    return dups


def validate(matrix: DecisionMatrix) -> ValidationReport:
    """Collect every structural problem with ``matrix``.

    Cell positions in messages are 1-based ``(row, column)``. Non-positive
    values are only warnings here, because the rank-based methods accept them;
    the normalization step rejects them on its own.
    """
    violations: list[str] = []
    warnings: list[str] = []
    m, n = matrix.shape
    values = matrix.values

    if m < 2:
        violations.append(f"m >= 2 required (got {m} alternatives)")
    if n < 1:
        violations.append("n >= 1 required (got 0 criteria)")
    if values.ndim != 2 or values.shape != (m, n):
        violations.append(f"values have shape {values.shape}, expected ({m}, {n}) from the name lists")
        return ValidationReport(tuple(violations), tuple(warnings))

    for name in _duplicates(matrix.alternatives):
        violations.append(f"duplicate alternative name {name!r}")
    for name in _duplicates(matrix.criterion_names):
        violations.append(f"duplicate criterion name {name!r}")
    for name in matrix.alternatives:
        if not name:
            violations.append("empty alternative name")
            break

    for i, j in zip(*np.nonzero(~np.isfinite(values))):
        violations.append(f"non-finite value {values[i, j]} at cell ({i + 1},{j + 1})")
    finite = np.where(np.isfinite(values), values, 1.0)
    for i, j in zip(*np.nonzero(finite <= 0)):
        warnings.append(f"non-positive value {values[i, j]:g} at cell ({i + 1},{j + 1})")

    return ValidationReport(tuple(violations), tuple(warnings))


def rank_scores(
    scores: Sequence[float] | npt.ArrayLike,
    order: RankOrder | str = RankOrder.DESCENDING,
    policy: TiePolicy | str = TiePolicy.COMPETITION,
) -> np.ndarray:
    """Convert scores to ranks aligned with the input order.

    Scores compare by exact equality: two scores tie only if they are the same
    float. Ranks are returned as floats so that ``AVERAGE`` halves are exact.

    Examples
    --------
    >>> rank_scores([3.0, 1.0, 1.0, 2.0], "ascending", "average").tolist()
    [4.0, 1.5, 1.5, 3.0]
    """
    order = RankOrder(order)
    policy = TiePolicy(policy)
    s = np.asarray(scores, dtype=float).ravel()
    if s.size == 0:
        raise DataError("cannot rank an empty score vector")
    bad = np.flatnonzero(~np.isfinite(s))
    if bad.size:
        raise DataError(f"non-finite score {s[bad[0]]} at index {bad[0]}")

    key = s if order is RankOrder.ASCENDING else -s
    idx = np.argsort(key, kind="stable")
    ranks = np.empty(s.size, dtype=float)
    start = 0
    while start < s.size:
        stop = start + 1
        while stop < s.size and key[idx[stop]] == key[idx[start]]:
            stop += 1
        group = idx[start:stop]
        if policy is TiePolicy.COMPETITION:
            ranks[group] = start + 1
        elif policy is TiePolicy.ORDINAL:
            # stable argsort already leaves the group in input order
            ranks[group] = np.arange(start + 1, stop + 1)
        else:
            ranks[group] = (start + 1 + stop) / 2.0
        start = stop
    return ranks


def column_ranks(matrix: DecisionMatrix, policy: TiePolicy | str = TiePolicy.COMPETITION) -> np.ndarray:
    """Rank alternatives within each criterion; rank 1 is the best value.

    Benefit criteria rank the largest value first, cost criteria the smallest.
    """
    validate(matrix).raise_for_violations()
    out = np.empty(matrix.values.shape, dtype=float)
    for j, crit in enumerate(matrix.criteria):
        order = RankOrder.DESCENDING if crit.direction is Direction.BENEFIT else RankOrder.ASCENDING
        out[:, j] = rank_scores(matrix.values[:, j], order, policy)
    return out


@dataclass(frozen=True, eq=False)
class MethodResult:
    """Scores and ranks produced by one ranking method.

    ``details`` carries the method's intermediate quantities (for example the
    benefit and cost parts of a MOORA score).
    """

    method: str
    alternatives: tuple[str, ...]
    scores: np.ndarray
    ranks: np.ndarray
    order: RankOrder
    policy: TiePolicy
    details: dict[str, np.ndarray] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "scores", _readonly(self.scores))
        object.__setattr__(self, "ranks", _readonly(self.ranks))
        for key, value in self.details.items():
            arr = np.array(value)
            arr.setflags(write=False)
            self.details[key] = arr

    def rank_of(self, alternative: str) -> float:
        return float(self.ranks[self.alternatives.index(alternative)])

    def score_of(self, alternative: str) -> float:
        return float(self.scores[self.alternatives.index(alternative)])
