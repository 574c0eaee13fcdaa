"""Command-line front end.

Three subcommands: `compute` streams coefficients of the mex-partition
series, `verify` runs the named verification suites, and `scan` sweeps
residue classes for parity congruence candidates.  Every record stream
can be rendered as an aligned table, JSON lines or CSV, and the same
invocation always produces byte-identical output.

Exit codes: 0 success (all checks passed), 1 a verification found a
counterexample, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import genfun, verify

MAX_INT_LIMIT = 10_000

_COLUMNS = {
    "coefficient": ("t", "n", "value"),
    "report": ("theorem_id", "range", "passed", "counterexample", "detail"),
    "claim": ("t", "modulus", "residue", "checked_bound", "status", "witness"),
}


def _odd_t_option(ctx, param, value):
    if value < 1 or value % 2 == 0:
        raise click.BadParameter("t must be an odd positive integer")
    return value


def _cell(value, fmt: str) -> str:
    if value is None:
        return "" if fmt == "csv" else "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _render(kind: str, records: list[dict], fmt: str) -> str:
    columns = _COLUMNS[kind]
    if fmt == "jsonl":
        lines = [
            json.dumps({"kind": kind, **{c: rec[c] for c in columns}}, separators=(",", ":"))
            for rec in records
        ]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("kind",) + columns)
        for rec in records:
            writer.writerow([kind] + [_cell(rec[c], "csv") for c in columns])
        return buf.getvalue()
    rows = [[_cell(rec[c], "table") for c in columns] for rec in records]
    widths = [max(len(col), *(len(row[i]) for row in rows)) if rows else len(col)
              for i, col in enumerate(columns)]
    lines = ["  ".join(col.ljust(widths[i]) for i, col in enumerate(columns)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def _emit(kind: str, records: list[dict], fmt: str, out: str | None) -> None:
    text = _render(kind, records, fmt)
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


_limit_option = click.option(
    "--limit",
    type=click.IntRange(min=1),
    default=1000,
    show_default=True,
    envvar="MEXPARITY_LIMIT",
    help="Exclusive bound on indices (override default via MEXPARITY_LIMIT).",
)
_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(("table", "jsonl", "csv")),
    default="table",
    show_default=True,
    help="Output format: aligned table, JSON lines, or CSV.",
)
_out_option = click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write records to FILE instead of stdout.",
)


@click.group()
def main():
    """Partition-parity toolkit: exact q-series, enumeration oracles and
    congruence verification for mex-defined partition counts."""


@main.command()
@click.option("--t", "t", type=int, default=1, show_default=True, callback=_odd_t_option,
              help="Odd parameter t of the mex statistic (A = a = t).")
@_limit_option
@click.option("--mod2/--int", "mod2", default=None,
              help="Coefficient domain: parity bits or exact integers "
                   "[default: --int for t < 5, --mod2 for t >= 5].")
@_format_option
@_out_option
def compute(t: int, limit: int, mod2: bool | None, fmt: str, out: str | None):
    """Print the count (or its parity) for every weight 0 <= n < limit."""
    if mod2 is None:
        mod2 = t >= 5
    if not mod2 and limit > MAX_INT_LIMIT:
        raise click.UsageError(
            f"--int is capped at limit {MAX_INT_LIMIT}; use --mod2 for larger sweeps"
        )
    series = genfun.ptt_mod2_series(t, limit) if mod2 else genfun.ptt_series(t, limit)
    coeffs = series.coeffs
    records = [{"t": t, "n": n, "value": coeffs[n]} for n in range(limit)]
    _emit("coefficient", records, fmt, out)


@main.command("verify")
@click.option("--suite", type=click.Choice(verify.SUITES), default="all", show_default=True,
              help="Which verification suite to run.")
@_limit_option
@_format_option
@_out_option
def verify_cmd(suite: str, limit: int, fmt: str, out: str | None):
    """Run a verification suite; exit 1 if any check finds a counterexample."""
    if limit < 2:
        raise click.UsageError("--limit must be at least 2")
    reports = verify.run_suite(suite, limit)
    _emit("report", [r.to_record() for r in reports], fmt, out)
    if any(not r.passed for r in reports):
        sys.exit(1)


@main.command()
@click.option("--t", "t", type=int, default=1, show_default=True, callback=_odd_t_option,
              help="Odd parameter t of the mex statistic.")
@click.option("--modulus", type=click.IntRange(min=1), default=2, show_default=True,
              help="Scan residue classes modulo this value.")
@_limit_option
@_format_option
@_out_option
def scan(t: int, modulus: int, limit: int, fmt: str, out: str | None):
    """Scan every residue class for all-even coefficients up to the limit.

    Emits one claim per class: refuted with its first witness, or
    verified-to-bound.  Scanning always exits 0; claims are evidence,
    not proofs.
    """
    if limit < 2:
        raise click.UsageError("--limit must be at least 2")
    claims = verify.scan_congruences(t, modulus, limit)
    _emit("claim", [c.to_record() for c in claims], fmt, out)


if __name__ == "__main__":
    main()
