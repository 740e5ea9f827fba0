"""Command line driver: ``ldp classify``, ``ldp counts`` and ``ldp verify``."""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Literal

import click

from .exact import ArithmeticOverflow
from .kstar import classify_kstar
from .records import RecordFormatError, RecordLine, from_line, to_line
from .toric import FwppRecord, classify_toric
from .verify import verify_kstar, verify_toric

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_ABORT = 3

Kind = Literal["toric", "kstar", "all"]


@dataclass(frozen=True)
class RunConfig:
    kind: Kind
    iota_min: int
    iota_max: int
    out: str | None = None
    fmt: Literal["jsonl", "csv"] = "jsonl"
    workers: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.iota_min <= self.iota_max:
            raise ValueError("need 1 <= iota_min <= iota_max")

    def kinds(self) -> list[str]:
        return ["toric", "kstar"] if self.kind == "all" else [self.kind]


def available_parallelism() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def parse_range(text: str) -> tuple[int, int]:
    """``"A..B"`` (inclusive) or a single ``"A"``."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError as exc:
        raise ValueError(f"expected A..B, got {text!r}") from exc
    if not 1 <= a <= b:
        raise ValueError(f"need 1 <= A <= B, got {text!r}")
    return a, b


def _classify_task(task: tuple[str, int]) -> tuple[str, int, list[str]]:
    kind, iota = task
    recs = classify_toric(iota) if kind == "toric" else classify_kstar(iota)
    lines = sorted((to_line(r) for r in recs), key=RecordLine.sort_key)
    return kind, iota, [line.to_json() for line in lines]


def run_tasks(tasks: list[tuple[str, int]], workers: int) -> dict[tuple[str, int], list[str]]:
    """Run classification tasks, serially or on a process pool.

    The result is keyed by task, so completion order never leaks into output.
    """
    results: dict[tuple[str, int], list[str]] = {}
    if workers <= 1 or len(tasks) <= 1:
        for t in tasks:
            kind, iota, lines = _classify_task(t)
            results[(kind, iota)] = lines
        return results
    # expensive indices first so the pool does not idle at the end
    ordered = sorted(tasks, key=lambda t: -t[1])
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for kind, iota, lines in pool.map(_classify_task, ordered, chunksize=1):
            results[(kind, iota)] = lines
    return results


def classify_lines(cfg: RunConfig) -> tuple[list[str], dict[tuple[str, int], int]]:
    tasks = [(k, i) for i in range(cfg.iota_min, cfg.iota_max + 1) for k in cfg.kinds()]
    results = run_tasks(tasks, cfg.workers)
    lines: list[str] = []
    counts: dict[tuple[str, int], int] = {}
    for kind, iota in sorted(results, key=lambda t: (t[1], t[0])):
        lines.extend(results[(kind, iota)])
        counts[(kind, iota)] = len(results[(kind, iota)])
    return lines, counts


def counts_table(max_iota: int, workers: int) -> list[tuple[int, int, int, int]]:
    """Rows ``(iota, mu_toric, nu_kstar, total)``."""
    tasks = [(k, i) for i in range(1, max_iota + 1) for k in ("toric", "kstar")]
    results = run_tasks(tasks, workers)
    rows = []
    for i in range(1, max_iota + 1):
        mu, nu = len(results[("toric", i)]), len(results[("kstar", i)])
        rows.append((i, mu, nu, mu + nu))
    return rows


def _counts_csv(rows: Iterable[tuple], header: Iterable[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(header))
    w.writerows(rows)
    return buf.getvalue()


def verify_line(line: RecordLine):
    rec = from_line(line)
    return verify_toric(rec) if isinstance(rec, FwppRecord) else verify_kstar(rec)


def _workers_option(f):
    return click.option(
        "--threads",
        "threads",
        type=click.IntRange(min=1),
        envvar="LDP_THREADS",
        default=None,
        help="Worker processes (default: available parallelism; env LDP_THREADS).",
    )(f)


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Classify log del Pezzo surfaces of Picard number one by Gorenstein index."""


@main.command()
@click.option("--kind", type=click.Choice(["toric", "kstar", "all"]), default="all", show_default=True)
@click.option("--iota", "iota_range", required=True, help="Inclusive range A..B.")
@click.option("--out", "out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]), default="jsonl", show_default=True)
@_workers_option
def classify(kind: str, iota_range: str, out: str | None, fmt: str, threads: int | None) -> None:
    """Classify surfaces for every index in the range.

    Per-index counts go to stdout.  With ``--out``, records are written as
    JSONL sorted by (iota, kind, id); ``--format csv`` writes the counts
    table instead.
    """
    try:
        lo, hi = parse_range(iota_range)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--iota") from exc
    cfg = RunConfig(kind, lo, hi, out, fmt, threads or available_parallelism())  # type: ignore[arg-type]
    try:
        lines, counts = classify_lines(cfg)
    except ArithmeticOverflow as exc:
        click.echo(f"aborted: {exc}", err=True)
        sys.exit(EXIT_ABORT)
    for (k, i), n in counts.items():
        click.echo(f"{k}\t{i}\t{n}")
    if out is None:
        return
    if fmt == "jsonl":
        payload = "".join(line + "\n" for line in lines)
    else:
        payload = _counts_csv(((k, i, n) for (k, i), n in counts.items()), ("kind", "iota", "count"))
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    except OSError as exc:
        click.echo(f"aborted: cannot write {out}: {exc}", err=True)
        sys.exit(EXIT_ABORT)


@main.command()
@click.option("--max-iota", type=click.IntRange(min=1), required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@_workers_option
def counts(max_iota: int, fmt: str, threads: int | None) -> None:
    """Table of (iota, mu_toric, nu_kstar, total) for iota = 1..max-iota, plus totals."""
    try:
        rows = counts_table(max_iota, threads or available_parallelism())
    except ArithmeticOverflow as exc:
        click.echo(f"aborted: {exc}", err=True)
        sys.exit(EXIT_ABORT)
    totals = tuple(sum(r[j] for r in rows) for j in (1, 2, 3))
    if fmt == "csv":
        click.echo(_counts_csv(rows, ("iota", "mu_toric", "nu_kstar", "total")), nl=False)
        click.echo(f"total,{totals[0]},{totals[1]},{totals[2]}")
    else:
        keys = ("iota", "mu_toric", "nu_kstar", "total")
        obj = {
            "rows": [dict(zip(keys, r)) for r in rows],
            "totals": dict(zip(keys[1:], totals)),
        }
        click.echo(json.dumps(obj))


@main.command()
@click.option("--in", "path", type=click.Path(exists=True, dir_okay=False), required=True)
def verify(path: str) -> None:
    """Re-check every record in a JSONL file; exit 1 if any check fails."""
    n = 0
    failed: list[str] = []
    bad: set[int] = set()
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, text in enumerate(fh, 1):
                if not text.strip():
                    continue
                n += 1
                try:
                    report = verify_line(RecordLine.from_json(text))
                except RecordFormatError as exc:
                    bad.add(lineno)
                    failed.append(f"line {lineno}: unreadable record: {exc}")
                    continue
                if not report.overall:
                    bad.add(lineno)
                    for name, _, expected, actual in report.failures():
                        failed.append(
                            f"line {lineno} ({report.subject}): {name}: expected {expected!r}, stored {actual!r}"
                        )
    except OSError as exc:
        click.echo(f"aborted: cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_ABORT)
    bad_lines = len(bad)
    for msg in failed[:20]:
        click.echo(msg, err=True)
    click.echo(f"{n} records, {n - bad_lines} passed, {bad_lines} failed", err=True)
    if failed:
        sys.exit(EXIT_VERIFY_FAILED)


if __name__ == "__main__":  # pragma: no cover
    main()
