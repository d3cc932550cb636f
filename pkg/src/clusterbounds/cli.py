"""Command-line front end.

Subcommands: ``table``, ``extremes``, ``adjusted``, ``enumerate``,
``scan-conjecture``.  Reports are JSON on stdout (or ``--out``); optional
figures land in ``--figures DIR``.  Exit codes: 0 success, 2 input error,
3 unsupported operation, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, figures
from .errors import BudgetExceededError, InputError, UnsupportedIndexError
from .extremal import Objective, canonicalize, extremal_tables, k_range, maximize, minimize
from .indices import (
    IndexKind,
    IndexValue,
    expected_index,
    index,
    max_adjusted_index,
)
from .oracle import (
    DEFAULT_BUDGET,
    MarginalSpec,
    enumerate_tables,
    extremize_q_bruteforce,
    scan_conjecture_3x3,
)
from .report import (
    RunReport,
    canonical_payload,
    conjecture_payload,
    digest_inputs,
    extremal_payload,
    index_value_payload,
    pair_counts_payload,
    table_payload,
)
from .table import ContingencyTable, pair_counts, q_statistic, table_from_labels

_KINDS = {
    "rand": IndexKind.RAND,
    "adjusted-rand": IndexKind.ADJUSTED_RAND,
    "ari": IndexKind.ADJUSTED_RAND,
    "jaccard": IndexKind.JACCARD,
    "fowlkes-mallows": IndexKind.FOWLKES_MALLOWS,
    "fm": IndexKind.FOWLKES_MALLOWS,
}


def _parse_marginals(text: str, flag: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"{flag} must be a comma-separated list of integers") from exc
    return values


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _read_labels(path: str) -> tuple[list[str], list[str], str]:
    text = _read_text(path)
    first: list[str] = []
    second: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = [p.strip() for p in stripped.split(",")]
        if len(parts) != 2 or not all(parts):
            raise InputError(f"{path}: line {lineno}: expected two comma-separated labels")
        first.append(parts[0])
        second.append(parts[1])
    if not first:
        raise InputError(f"{path}: no observations found")
    return first, second, text


def _read_table_file(path: str) -> tuple[ContingencyTable, str]:
    text = _read_text(path)
    rows: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            rows.append([int(p.strip()) for p in stripped.split(",")])
        except ValueError as exc:
            raise InputError(
                f"{path}: line {lineno}: expected comma-separated integer counts"
            ) from exc
    if not rows:
        raise InputError(f"{path}: no rows found")
    return ContingencyTable.from_counts(rows), text


def _figures_dir(args) -> Path | None:
    if not getattr(args, "figures", None):
        return None
    directory = Path(args.figures)
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def _note_figure(path: Path) -> None:
    print(f"figure: {path}", file=sys.stderr)


def _all_indices_payload(p) -> dict:
    return {kind.value: index_value_payload(index(kind, p)) for kind in IndexKind}


# --------------------------------------------------------------------- #
# Subcommand handlers: each returns (RunReport, exit_code).
# --------------------------------------------------------------------- #


def cmd_table(args) -> tuple[RunReport, int]:
    first, second, raw = _read_labels(args.labels_file)
    t = table_from_labels(first, second)
    p = pair_counts(t)
    results = {
        "table": table_payload(t),
        "pair_counts": pair_counts_payload(p),
        "q": q_statistic(t),
        "indices": _all_indices_payload(p),
    }
    out_dir = _figures_dir(args)
    if out_dir is not None:
        _note_figure(figures.save_table_heatmap(t, out_dir / "table.png"))
    digest = digest_inputs({"command": "table", "labels": raw})
    return RunReport("table", digest, results, __version__), 0


def cmd_extremes(args) -> tuple[RunReport, int]:
    rows = _parse_marginals(args.rows, "--rows")
    cols = _parse_marginals(args.cols, "--cols")
    c = canonicalize(rows, cols, sum(rows))
    lo, hi = k_range(c)
    best = maximize(c)
    worst = minimize(c)
    results = {
        "row_marginals": list(rows),
        "col_marginals": list(cols),
        "n": c.n,
        "canonical": canonical_payload(c),
        "k_range": {"low": lo, "high": hi},
        "maximum": extremal_payload(best),
        "minimum": extremal_payload(worst),
    }
    out_dir = _figures_dir(args)
    if out_dir is not None:
        _note_figure(figures.save_q_profile(c, best, worst, out_dir / "q_profile.png"))
    digest = digest_inputs({"command": "extremes", "rows": list(rows), "cols": list(cols)})
    return RunReport("extremes", digest, results, __version__), 0


def _adjusted_conventional(observed: IndexValue, expected: IndexValue) -> IndexValue:
    """(index - E) / (1 - E): the correction with the generic upper bound 1."""
    if not (observed.is_defined and expected.is_defined):
        return IndexValue.undefined("index or expectation undefined for this table")
    denominator = 1 - expected.as_fraction()
    if denominator == 0:
        return IndexValue.degenerate("null expectation already equals the generic maximum 1")
    return IndexValue.from_fraction((observed.as_fraction() - expected.as_fraction()) / denominator)


def cmd_adjusted(args) -> tuple[RunReport, int]:
    if (args.labels_file is None) == (args.table is None):
        raise InputError("provide a labels file or --table, but not both")
    if args.labels_file is not None:
        first, second, raw = _read_labels(args.labels_file)
        t = table_from_labels(first, second)
        source = {"labels": raw}
    else:
        t, raw = _read_table_file(args.table)
        source = {"table": raw}
    kind = _KINDS[args.kind]
    if t.shape == (2, 2):
        max_q = extremal_tables(t.row_marginals, t.col_marginals, t.n, Objective.MAXIMUM).q_value
        max_q_source = "closed_form"
    elif args.oracle:
        spec = MarginalSpec(t.row_marginals, t.col_marginals, t.n)
        max_q = extremize_q_bruteforce(spec, Objective.MAXIMUM, args.budget).q_value
        max_q_source = "enumeration"
    else:
        raise InputError(
            f"table is {t.shape[0]}x{t.shape[1]}; pass --oracle to find the maximum by enumeration"
        )
    observed = index(kind, pair_counts(t))
    expected = expected_index(kind, t)  # exits 3 for kinds without a closed form
    conventional = _adjusted_conventional(observed, expected)
    max_adjusted = max_adjusted_index(kind, t, max_q)
    results = {
        "kind": kind.value,
        "table": table_payload(t),
        "q": q_statistic(t),
        "max_q": max_q,
        "max_q_source": max_q_source,
        "index": index_value_payload(observed),
        "expected": index_value_payload(expected),
        "adjusted_conventional": index_value_payload(conventional),
        "adjusted_max_marginals": index_value_payload(max_adjusted),
    }
    out_dir = _figures_dir(args)
    if out_dir is not None:
        bars = {
            "index": observed.as_float(),
            "expected": expected.as_float(),
            "adjusted (max=1)": conventional.as_float(),
            "adjusted (max|marginals)": max_adjusted.as_float(),
        }
        _note_figure(figures.save_adjusted_bars(bars, kind.value, out_dir / "adjusted.png"))
    digest = digest_inputs(
        {
            "command": "adjusted",
            "kind": kind.value,
            "oracle": bool(args.oracle),
            "budget": args.budget,
            **source,
        }
    )
    return RunReport("adjusted", digest, results, __version__), 0


def cmd_enumerate(args) -> tuple[RunReport, int]:
    rows = _parse_marginals(args.rows, "--rows")
    cols = _parse_marginals(args.cols, "--cols")
    spec = MarginalSpec(rows, cols, sum(rows))
    objective = Objective.MAXIMUM if args.objective == "max" else Objective.MINIMUM
    digest = digest_inputs(
        {
            "command": "enumerate",
            "rows": list(rows),
            "cols": list(cols),
            "objective": args.objective,
            "budget": args.budget,
        }
    )
    base = {
        "row_marginals": list(rows),
        "col_marginals": list(cols),
        "n": spec.n,
        "objective": objective.value,
        "budget": args.budget,
    }
    try:
        q_values = [q_statistic(t) for t in enumerate_tables(spec, args.budget)]
    except BudgetExceededError:
        results = {**base, "partial": True, "tables_seen": args.budget}
        return RunReport("enumerate", digest, results, __version__), 4
    result = extremize_q_bruteforce(spec, objective, args.budget)
    results = {
        **base,
        "partial": False,
        "table_count": len(q_values),
        "extremal": extremal_payload(result),
    }
    if spec.shape == (2, 2):
        closed = extremal_tables(rows, cols, spec.n, objective)
        results["closed_form"] = extremal_payload(closed)
        results["agreement"] = (
            closed.q_value == result.q_value
            and closed.k_values is not None
            and result.k_values is not None
            and sorted(closed.k_values) == sorted(result.k_values)
            and {t.counts for t in closed.tables} == {t.counts for t in result.tables}
        )
    out_dir = _figures_dir(args)
    if out_dir is not None:
        _note_figure(
            figures.save_q_distribution(
                q_values, result.q_value, objective.value, out_dir / "q_distribution.png"
            )
        )
    return RunReport("enumerate", digest, results, __version__), 0


def cmd_scan_conjecture(args) -> tuple[RunReport, int]:
    report = scan_conjecture_3x3(args.n_max, args.budget)
    results = conjecture_payload(report)
    out_dir = _figures_dir(args)
    if out_dir is not None:
        _note_figure(figures.save_scan_summary(report, out_dir / "scan_summary.png"))
    print(
        f"scanned {report.cases_scanned} marginal pairs up to n={report.n_max} "
        f"in {report.elapsed_seconds:.2f}s: "
        f"{report.strict_violations} spec(s) with no contained maximizer, "
        f"{len(report.counterexamples)} non-contained maximizer(s)"
        + ("" if report.complete else " [incomplete: budget exhausted]"),
        file=sys.stderr,
    )
    digest = digest_inputs(
        {"command": "scan-conjecture", "n_max": args.n_max, "budget": args.budget}
    )
    return RunReport("scan-conjecture", digest, results, __version__), 0 if report.complete else 4


# --------------------------------------------------------------------- #
# Parser and entry point
# --------------------------------------------------------------------- #


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", help="write the JSON report to this file instead of stdout")
    sub.add_argument("--figures", help="directory for matplotlib figures rendered alongside the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clusterbounds",
        description="Pair-counting clustering agreement and its exact extrema at fixed cluster sizes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_table = subparsers.add_parser(
        "table", help="cross-tabulate a two-column labels file and report pair counts and indices"
    )
    p_table.add_argument("labels_file")
    _add_output_flags(p_table)
    p_table.set_defaults(handler=cmd_table)

    p_ext = subparsers.add_parser(
        "extremes", help="closed-form extremal tables for 2x2 marginals"
    )
    p_ext.add_argument("--rows", required=True, help="row cluster sizes, e.g. 6,4")
    p_ext.add_argument("--cols", required=True, help="column cluster sizes, e.g. 7,3")
    _add_output_flags(p_ext)
    p_ext.set_defaults(handler=cmd_extremes)

    p_adj = subparsers.add_parser(
        "adjusted", help="chance-corrected index with both normalizations"
    )
    p_adj.add_argument("labels_file", nargs="?", help="two-column labels file")
    p_adj.add_argument("--table", help="file with one row of comma-separated counts per line")
    p_adj.add_argument("--kind", choices=sorted(_KINDS), default="rand")
    p_adj.add_argument(
        "--oracle",
        action="store_true",
        help="allow tables larger than 2x2 and find the maximum Q by enumeration",
    )
    p_adj.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_output_flags(p_adj)
    p_adj.set_defaults(handler=cmd_adjusted)

    p_enum = subparsers.add_parser(
        "enumerate", help="enumerate all tables with the given marginals and extremize Q by scanning"
    )
    p_enum.add_argument("--rows", required=True)
    p_enum.add_argument("--cols", required=True)
    p_enum.add_argument("--objective", choices=("max", "min"), default="max")
    p_enum.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_output_flags(p_enum)
    p_enum.set_defaults(handler=cmd_enumerate)

    p_scan = subparsers.add_parser(
        "scan-conjecture",
        help="survey 3x3 maximal-agreement tables for the biggest-cluster containment property",
    )
    p_scan.add_argument("--n-max", type=int, default=12)
    p_scan.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_output_flags(p_scan)
    p_scan.set_defaults(handler=cmd_scan_conjecture)

    return parser


def _emit(report: RunReport, args) -> None:
    text = report.to_json()
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, code = args.handler(args)
        _emit(report, args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except UnsupportedIndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
