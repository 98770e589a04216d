"""CSV ingestion and the bundled bank case-study fixtures.

Matrix files look like::

    alternative,C1,C2,C3
    ABB,13,14,15
    ACB,18,10,11

Reference rankings use the header ``alternative,rank``. Numbers must match
``-?digits(.digits)?``; exponents and thousands separators are rejected so
parsing never depends on locale.
"""

from __future__ import annotations

import csv
import io
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import BinaryIO, TextIO, Union

import numpy as np

from .core import Criterion, DataError, DecisionMatrix, validate

__all__ = [
    "MatrixDocument",
    "PublishedRankings",
    "ReferenceRanking",
    "builtin_bank_dataset",
    "builtin_camels_reference",
    "dump_matrix_csv",
    "dump_reference_csv",
    "load_matrix_csv",
    "load_reference_csv",
    "published_rankings",
]

Source = Union[str, os.PathLike, bytes, BinaryIO, TextIO]

_NUMBER = re.compile(r"-?\d+(\.\d+)?")


@dataclass(frozen=True, eq=False)
class MatrixDocument:
    matrix: DecisionMatrix
    source: str


@dataclass(frozen=True, eq=False)
class ReferenceRanking:
    names: tuple[str, ...]
    ranks: np.ndarray
    label: str = "reference"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReferenceRanking):
            return NotImplemented
        return self.names == other.names and bool(np.array_equal(self.ranks, other.ranks))

    __hash__ = None  # type: ignore[assignment]

    def aligned_to(self, names: tuple[str, ...] | list[str]) -> np.ndarray:
        """Ranks reordered to follow ``names``; the name sets must be identical."""
        names = tuple(names)
        missing = sorted(set(names) - set(self.names))
        extra = sorted(set(self.names) - set(names))
        if missing or extra or len(names) != len(self.names):
            parts = []
            if missing:
                parts.append(f"not in {self.label}: {', '.join(missing)}")
            if extra:
                parts.append(f"only in {self.label}: {', '.join(extra)}")
            raise DataError("alternative name sets differ (" + "; ".join(parts or ["duplicate names"]) + ")")
        index = {n: i for i, n in enumerate(self.names)}
        return self.ranks[[index[n] for n in names]]


def _read_text(source: Source) -> tuple[str, str]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            raw = fh.read()
        label = os.fspath(source)
    elif isinstance(source, bytes):
        raw, label = source, "<bytes>"
    else:
        raw = source.read()
        label = getattr(source, "name", "<stream>")
    if isinstance(raw, bytes):
        try:
            text = raw.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise DataError(f"{label}: not valid UTF-8 ({exc})") from None
    else:
        text = raw
    return text, str(label)


def _rows(text: str, label: str) -> list[tuple[int, list[str]]]:
    rows = [(n, [c.strip() for c in row]) for n, row in enumerate(csv.reader(io.StringIO(text)), start=1)]
    while rows and not any(rows[-1][1]):
        rows.pop()
    if not rows:
        raise DataError(f"{label}: empty file")
    return rows


def _number(cell: str, line: int, column: int, label: str) -> float:
    if not _NUMBER.fullmatch(cell):
        raise DataError(f"{label}: non-numeric cell {cell!r} at line {line}, column {column}")
    return float(cell)


def _check_unique(names: list[str], what: str, label: str) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise DataError(f"{label}: duplicate {what} name {name!r}")
        seen.add(name)


def load_matrix_csv(source: Source) -> MatrixDocument:
    """Parse a decision-matrix CSV.

    Criteria come back with cost direction and equal weights ``1/n``; the
    file carries no analysis policy.
    """
    text, label = _read_text(source)
    rows = _rows(text, label)
    (_, header), body = rows[0], rows[1:]
    if len(header) < 2 or not header[0]:
        raise DataError(f"{label}: header must be 'alternative,<criterion>,...'")
    crit_names = header[1:]
    _check_unique(crit_names, "criterion", label)
    if not body:
        raise DataError(f"{label}: empty body")

    names: list[str] = []
    values: list[list[float]] = []
    for line, row in body:
        if len(row) != len(header):
            raise DataError(f"{label}: ragged row at line {line} ({len(row)} cells, expected {len(header)})")
        names.append(row[0])
        values.append([_number(cell, line, col, label) for col, cell in enumerate(row[1:], start=2)])
    _check_unique(names, "alternative", label)

    n = len(crit_names)
    matrix = DecisionMatrix(tuple(names), tuple(Criterion(c, weight=1.0 / n) for c in crit_names), np.array(values))
    validate(matrix).raise_for_violations()
    return MatrixDocument(matrix, label)


def load_reference_csv(source: Source, label: str | None = None) -> ReferenceRanking:
    """Parse an ``alternative,rank`` file.

    ``label`` defaults to the file name without extension.
    """
    text, src = _read_text(source)
    rows = _rows(text, src)
    (_, header), body = rows[0], rows[1:]
    if len(header) != 2:
        raise DataError(f"{src}: header must be 'alternative,rank'")
    if not body:
        raise DataError(f"{src}: empty body")
    names: list[str] = []
    ranks: list[float] = []
    for line, row in body:
        if len(row) != 2:
            raise DataError(f"{src}: ragged row at line {line}")
        rank = _number(row[1], line, 2, src)
        if rank < 1:
            raise DataError(f"{src}: rank must be >= 1, got {row[1]} at line {line}")
        names.append(row[0])
        ranks.append(rank)
    _check_unique(names, "alternative", src)
    arr = np.array(ranks)
    arr.setflags(write=False)
    if label is None:
        stem = os.path.splitext(os.path.basename(src))[0]
        label = stem if not stem.startswith("<") else "reference"
    return ReferenceRanking(tuple(names), arr, label)


def _fmt(x: float) -> str:
    if float(x).is_integer():
        return str(int(x))
    return np.format_float_positional(float(x), trim="-")


def dump_matrix_csv(matrix: DecisionMatrix) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["alternative", *matrix.criterion_names])
    for name, row in zip(matrix.alternatives, matrix.values):
        writer.writerow([name, *(_fmt(v) for v in row)])
    return out.getvalue()


def dump_reference_csv(names, ranks) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["alternative", "rank"])
    for name, rank in zip(names, ranks):
        writer.writerow([name, _fmt(rank)])
    return out.getvalue()


def _data_bytes(name: str) -> bytes:
    return resources.files(__package__).joinpath("data", name).read_bytes()


@lru_cache(maxsize=None)
def builtin_bank_dataset() -> MatrixDocument:
    """The 30 Vietnamese banks by six indicator ranks C1..C6 (smaller is better)."""
    doc = load_matrix_csv(_data_bytes("banks.csv"))
    return MatrixDocument(doc.matrix, "builtin:banks")


@lru_cache(maxsize=None)
def builtin_camels_reference() -> ReferenceRanking:
    """Published CAMELS ranks of the same 30 banks, in the same order."""
    return load_reference_csv(_data_bytes("camels.csv"), label="CAMELS")


@dataclass(frozen=True, eq=False)
class PublishedRankings:
    """Scores and ranks for each method as printed in the case study, rounded to 4 decimals."""

    alternatives: tuple[str, ...]
    scores: dict[str, np.ndarray]
    ranks: dict[str, np.ndarray]
    camels: np.ndarray


@lru_cache(maxsize=None)
def published_rankings() -> PublishedRankings:
    text = _data_bytes("published_rankings.csv").decode("utf-8")
    rows = _rows(text, "builtin:published_rankings")
    header = rows[0][1]
    body = [r for _, r in rows[1:]]
    cols = {h: [r[k] for r in body] for k, h in enumerate(header)}
    methods = ("moora", "ram", "fuca", "curli")
    return PublishedRankings(
        alternatives=tuple(cols["alternative"]),
        scores={m: np.array(cols[f"{m}_score"], dtype=float) for m in methods},
        ranks={m: np.array(cols[f"{m}_rank"], dtype=float) for m in methods},
        camels=np.array(cols["camels_rank"], dtype=float),
    )
