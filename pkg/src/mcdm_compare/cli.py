"""Command-line front end: ``rank``, ``compare`` and ``replicate``.

Exit status: 0 success, 1 data error, 2 configuration error, 3 replication drift.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager
from typing import Iterator, Sequence

import numpy as np

from .compare import ComparisonReport, agreement
from .core import ConfigError, DataError, DecisionMatrix, MethodResult, TiePolicy
from .datasets import builtin_bank_dataset, builtin_camels_reference, load_matrix_csv, load_reference_csv
from .methods import METHODS, run_method
from .replication import ReplicationReport, replicate, round_half_away

EXIT_OK, EXIT_DATA, EXIT_CONFIG, EXIT_DRIFT = 0, 1, 2, 3


def _num(x: float | None):
    """JSON number: integral values as ints, others at 12 significant digits."""
    if x is None:
        return None
    x = float(x)
    if x.is_integer():
        return int(x)
    return float(f"{x:.12g}")


def _short(x: float | None) -> str:
    if x is None:
        return "n/a"
    x = float(x)
    if x.is_integer():
        return str(int(x))
    return f"{round_half_away(x):.4f}"


def _score_col(scores) -> list[str]:
    # integer-valued score vectors (CURLI) print without decimals
    if all(float(v).is_integer() for v in scores):
        return [str(int(v)) for v in scores]
    return [f"{round_half_away(v):.4f}" for v in scores]


def _full(x: float) -> str:
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def _parse_list(text: str | None, what: str) -> list[str] | None:
    if text is None:
        return None
    items = [t.strip() for t in text.split(",")]
    if not all(items):
        raise ConfigError(f"empty entry in --{what}")
    return items


def _parse_methods(text: str) -> list[str]:
    names = [m.lower() for m in _parse_list(text, "method") or []]
    for m in names:
        if m not in METHODS:
            raise ConfigError(f"unknown method {m!r} (choose from {', '.join(METHODS)})")
    return names


def _configure(matrix: DecisionMatrix, args: argparse.Namespace) -> DecisionMatrix:
    n = len(matrix.criteria)
    directions = _parse_list(args.directions, "directions")
    if directions is not None and len(directions) == 1:
        directions = directions * n
    elif directions is None:
        directions = ["cost"] * n
    weights: list[float] | None = None
    if args.weights is not None:
        try:
            weights = [float(w) for w in _parse_list(args.weights, "weights") or []]
        except ValueError:
            raise ConfigError(f"--weights must be numbers, got {args.weights!r}") from None
        if len(weights) != n:
            raise ConfigError(f"weight count mismatch: {len(weights)} weights for {n} criteria")
    if len(directions) != n:
        raise ConfigError(f"direction count mismatch: {len(directions)} directions for {n} criteria")
    matrix = matrix.with_policy(directions=directions, weights=weights)
    return matrix if weights is not None else matrix.equal_weights()


def _load_matrix(path: str | None) -> DecisionMatrix:
    return builtin_bank_dataset().matrix if path is None else load_matrix_csv(path).matrix


def _result_json(res: MethodResult, comparison: ComparisonReport | None = None) -> dict:
    out = {
        "method": res.method,
        "alternatives": list(res.alternatives),
        "scores": [_num(s) for s in res.scores],
        "ranks": [_num(r) for r in res.ranks],
    }
    if comparison is not None:
        out["comparison"] = _comparison_json(comparison)
    return out


def _comparison_json(cmp: ComparisonReport) -> dict:
    return {
        "spearman_naive": _num(cmp.spearman_naive),
        "spearman_tie_adjusted": _num(cmp.spearman_tie_adjusted),
        "exact_matches": cmp.exact_matches,
        "sum_sq_diff": _num(cmp.sum_sq_diff),
        "max_abs_diff": _num(cmp.max_abs_diff),
    }


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(c.rjust(w) if k else c.ljust(w) for k, (c, w) in enumerate(zip(r, widths))))
    return "\n".join(lines) + "\n"


def _csv(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def _render_comparison_text(cmp: ComparisonReport, fmt: str) -> str:
    rows = [
        ("spearman_naive", cmp.spearman_naive),
        ("spearman_tie_adjusted", cmp.spearman_tie_adjusted),
        ("exact_matches", cmp.exact_matches),
        ("sum_sq_diff", cmp.sum_sq_diff),
        ("max_abs_diff", cmp.max_abs_diff),
    ]
    if fmt == "csv":
        return _csv(["statistic", "value"], [(k, "" if v is None else _full(v)) for k, v in rows])
    return _table(["statistic", "value"], [(k, _short(v)) for k, v in rows])


# -- commands ---------------------------------------------------------------


def cmd_rank(args: argparse.Namespace) -> tuple[str, int]:
    methods = _parse_methods(args.method)
    matrix = _configure(_load_matrix(args.input), args)
    results = [run_method(m, matrix, policy=args.ties) for m in methods]

    if args.format == "json":
        payload = [_result_json(r) for r in results]
        return _dumps(payload[0] if len(payload) == 1 else payload), EXIT_OK
    if args.format == "csv":
        rows = [(r.method, a, _full(s), _full(k)) for r in results for a, s, k in zip(r.alternatives, r.scores, r.ranks)]
        return _csv(["method", "alternative", "score", "rank"], rows), EXIT_OK
    headers = ["alternative"]
    for r in results:
        headers += [f"{r.method} score", f"{r.method} rank"]
    cols = [_score_col(r.scores) for r in results]
    rows = []
    for i, name in enumerate(matrix.alternatives):
        row = [name]
        for r, col in zip(results, cols):
            row += [col[i], _short(r.ranks[i])]
        rows.append(row)
    return _table(headers, rows), EXIT_OK


def cmd_compare(args: argparse.Namespace) -> tuple[str, int]:
    reference = builtin_camels_reference() if args.reference is None else load_reference_csv(args.reference)
    result: MethodResult | None = None
    if args.method is not None:
        methods = _parse_methods(args.method)
        if len(methods) != 1:
            raise ConfigError("compare takes exactly one --method")
        matrix = _configure(_load_matrix(args.input), args)
        result = run_method(methods[0], matrix, policy=args.ties)
        names, ranks, label = result.alternatives, result.ranks, result.method
    else:
        if args.input is None:
            raise ConfigError("compare needs --input (a rank file) or --method")
        ranking = load_reference_csv(args.input)
        names, ranks, label = ranking.names, ranking.ranks, ranking.label
    cmp = agreement(ranks, reference.aligned_to(names))

    if args.format == "json":
        out = {
            "method": label,
            "alternatives": list(names),
            "scores": None if result is None else [_num(s) for s in result.scores],
            "ranks": [_num(r) for r in ranks],
            "reference": reference.label,
            "comparison": _comparison_json(cmp),
        }
        return _dumps(out), EXIT_OK
    return _render_comparison_text(cmp, args.format), EXIT_OK


def _replication_json(rep: ReplicationReport) -> dict:
    return {
        "alternatives": list(rep.alternatives),
        "methods": {
            m: {
                "scores": [_num(s) for s in r.scores],
                "ranks": [_num(k) for k in r.ranks],
                "published_scores": [_num(s) for s in rep.published_scores[m]],
                "published_ranks": [_num(k) for k in rep.published_ranks[m]],
                "comparison": _comparison_json(rep.engine_vs_camels[m]),
                "published_comparison": _comparison_json(rep.published_vs_camels[m]),
            }
            for m, r in rep.results.items()
        },
        "camels": [_num(k) for k in rep.camels],
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail, "failing_cells": list(c.failing_cells)}
            for c in rep.checks
        ],
        "discrepancies": [{"cell": d.cell, "note": d.note} for d in rep.discrepancies],
        "observations": list(rep.observations),
        "ok": rep.ok,
    }


def _replication_text(rep: ReplicationReport, fmt: str) -> str:
    methods = list(rep.results)
    if fmt == "csv":
        headers = ["alternative"]
        for m in methods:
            headers += [f"{m}_score", f"{m}_rank", f"{m}_published_score", f"{m}_published_rank"]
        headers.append("camels_rank")
        rows = []
        for i, name in enumerate(rep.alternatives):
            row = [name]
            for m in methods:
                r = rep.results[m]
                row += [
                    _full(r.scores[i]),
                    _full(r.ranks[i]),
                    _full(rep.published_scores[m][i]),
                    _full(rep.published_ranks[m][i]),
                ]
            row.append(_full(rep.camels[i]))
            rows.append(row)
        return _csv(headers, rows)

    parts = ["Scores and ranks (engine, published rank in brackets)\n"]
    headers = ["alternative"]
    for m in methods:
        headers += [f"{m.upper()} score", "rank"]
    headers.append("CAMELS")
    cols = {m: _score_col(rep.results[m].scores) for m in methods}
    rows = []
    for i, name in enumerate(rep.alternatives):
        row = [name]
        for m in methods:
            r = rep.results[m]
            rank = _short(r.ranks[i])
            pub = _short(rep.published_ranks[m][i])
            row += [cols[m][i], rank if rank == pub else f"{rank} [{pub}]"]
        row.append(_short(rep.camels[i]))
        rows.append(row)
    parts.append(_table(headers, rows))

    parts.append("\nSpearman coefficients vs CAMELS\n")
    rows = []
    for m in methods:
        e, p = rep.engine_vs_camels[m], rep.published_vs_camels[m]
        rows.append(
            [
                m.upper(),
                _short(e.spearman_naive),
                _short(e.spearman_tie_adjusted),
                str(e.exact_matches),
                _short(e.sum_sq_diff),
                _short(p.spearman_naive),
            ]
        )
    parts.append(
        _table(["method", "naive", "tie-adjusted", "matches", "sum D^2", "naive (published ranks)"], rows)
    )

    parts.append("\nChecks\n")
    for c in rep.checks:
        mark = "PASS" if c.passed else "FAIL"
        cells = f" [{', '.join(c.failing_cells)}]" if c.failing_cells and not c.passed else ""
        parts.append(f"  {mark}  {c.name}: {c.detail}{cells}\n")
    parts.append("\nDiscrepancy log\n")
    for d in rep.discrepancies:
        parts.append(f"  - {d.cell}: {d.note}\n")
    parts.append("\nObservations\n")
    for o in rep.observations:
        parts.append(f"  - {o}\n")
    if not rep.ok:
        parts.append("\nreplication drift: " + "; ".join(c for d in rep.drift for c in (d.failing_cells or (d.name,))) + "\n")
    return "".join(parts)


def cmd_replicate(args: argparse.Namespace) -> tuple[str, int]:
    rep = replicate(args.ties)
    text = _dumps(_replication_json(rep)) if args.format == "json" else _replication_text(rep, args.format)
    return text, EXIT_OK if rep.ok else EXIT_DRIFT


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ties", choices=[p.value for p in TiePolicy], default="competition")
    common.add_argument("--format", choices=["table", "csv", "json"], default="table")
    common.add_argument("--output", metavar="PATH", help="write here instead of standard output")

    policy = argparse.ArgumentParser(add_help=False)
    policy.add_argument("--weights", metavar="W1,W2,...", help="positive weights, one per criterion (default equal)")
    policy.add_argument(
        "--directions", metavar="D1,D2,...", help="benefit|cost per criterion, or one token for all (default cost)"
    )

    parser = argparse.ArgumentParser(prog="mcdm-compare", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", parents=[common, policy], help="score and rank a decision matrix")
    p.add_argument("--input", metavar="PATH", help="matrix CSV (default: bundled bank data)")
    p.add_argument("--method", default="fuca", metavar="LIST", help="comma list of moora,ram,fuca,curli")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("compare", parents=[common, policy], help="compare a ranking with a reference ranking")
    p.add_argument("--input", metavar="PATH", help="rank CSV (alternative,rank), or a matrix CSV with --method")
    p.add_argument("--reference", metavar="PATH", help="reference rank CSV (default: bundled CAMELS ranks)")
    p.add_argument("--method", metavar="NAME", help="rank --input (or the bundled matrix) with this method first")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("replicate", parents=[common], help="rerun the bank case study and check it")
    p.set_defaults(func=cmd_replicate)
    return parser


@contextmanager
def _sink(path: str | None) -> Iterator:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DataError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    with _sink(args.output) as out:
        out.write(text)
    if code == EXIT_DRIFT:
        print("error: replication drift", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
