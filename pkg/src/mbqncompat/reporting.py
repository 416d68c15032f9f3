"""CSV/JSON emission of experiment statistics and the mean-vs-N figure.

CSV schema (header included, one row per size and measure)::

    n,measure,mean,sem,trials,seed

Floats are written with ``repr`` so that parsing the file gives back the
exact values.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable
from dataclasses import asdict
from pathlib import Path

from mbqncompat.montecarlo import StatsRow

COLUMNS = ("n", "measure", "mean", "sem", "trials", "seed")


class StatsFormatError(ValueError):
    pass


def format_csv(rows: Iterable[StatsRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in rows:
        writer.writerow([r.n, r.measure, repr(float(r.mean)), repr(float(r.sem)), r.trials, r.seed])
    return buf.getvalue()


def format_json(rows: Iterable[StatsRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2) + "\n"


def parse_csv(text: str) -> list[StatsRow]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise StatsFormatError("empty stats file")
    for col in COLUMNS:
        if col not in reader.fieldnames:
            raise StatsFormatError(f"missing column {col!r}")
    rows = []
    for lineno, rec in enumerate(reader, start=2):
        try:
            rows.append(
                StatsRow(
                    n=int(rec["n"]),
                    measure=rec["measure"],
                    mean=float(rec["mean"]),
                    sem=float(rec["sem"]),
                    trials=int(rec["trials"]),
                    seed=int(rec["seed"]),
                )
            )
        except (TypeError, ValueError) as exc:
            raise StatsFormatError(f"line {lineno}: {exc}") from None
    return rows


def write_stats(rows: list[StatsRow], out: str | Path, fmt: str = "csv") -> None:
    if fmt == "csv":
        text = format_csv(rows)
    elif fmt == "json":
        text = format_json(rows)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    Path(out).write_text(text)


def plot_stats(rows: list[StatsRow], out: str | Path) -> None:
    """Mean supported tasks vs. N per measure, with +/-1 SEM bands."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    if not rows:
        raise StatsFormatError("no rows to plot")
    plt.rcParams["svg.hashsalt"] = "mbqncompat"
    fig, ax = plt.subplots(figsize=(5, 3.5))
    measures = list(dict.fromkeys(r.measure for r in rows))
    for name in measures:
        series = sorted((r for r in rows if r.measure == name), key=lambda r: r.n)
        ns = [r.n for r in series]
        means = [r.mean for r in series]
        (line,) = ax.plot(ns, means, marker="o", markersize=3, label=name)
        if len(series) > 1:
            ax.fill_between(
                ns,
                [r.mean - r.sem for r in series],
                [r.mean + r.sem for r in series],
                color=line.get_color(),
                alpha=0.25,
                linewidth=0,
            )
    ax.set_xlabel("network size N")
    ax.set_ylabel("supported tasks")
    ax.legend()
    fig.tight_layout()
    fmt = Path(out).suffix.lstrip(".") or "svg"
    fig.savefig(out, format=fmt, metadata={"Date": None} if fmt == "svg" else None)
    plt.close(fig)
