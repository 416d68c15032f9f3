"""Command-line front end: ``check``, ``simulate`` and ``plot``."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from mbqncompat.compatibility import gk_compatible, worst_case_compatible
from mbqncompat.errors import LiteralParseError
from mbqncompat.montecarlo import DEFAULT_SIZES, ExperimentConfig, Measure, run_experiment
from mbqncompat.reporting import StatsFormatError, parse_csv, plot_stats, write_stats
from mbqncompat.tasks import Task, format_tasks, parse_tasks
from mbqncompat.timing import partial_compatible
from mbqncompat.topology import parse_topology


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _measures(text: str) -> tuple[Measure, ...]:
    try:
        return tuple(Measure.parse(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _format_witness(tasks: Sequence[Task], paths) -> str:
    parts = []
    for t, p in zip(tasks, paths):
        via = "supplemental chain" if p is None else "-".join(map(str, p))
        parts.append(f"{t} via {via}")
    return "; ".join(parts)


def cmd_check(args: argparse.Namespace) -> int:
    topo = parse_topology(args.topology)
    g = topo.build()
    tasks = parse_tasks(args.tasks)
    mode, _, arg = args.mode.partition(":")
    print(f"topology: {topo}")
    print(f"tasks: {format_tasks(tasks)}")
    print(f"mode: {args.mode}")
    if mode == "worst_case":
        verdict = worst_case_compatible(g, tasks, args.max_len)
        ok = verdict.compatible
        print(f"verdict: {'compatible' if ok else 'incompatible'}")
        if ok:
            print(f"witness: {_format_witness(tasks, verdict.witness.paths)}")
        else:
            print(f"violated: {verdict.violated}")
    elif mode == "gk":
        k = int(arg)
        verdict, plan = gk_compatible(g, tasks, k, args.max_len)
        ok = verdict.compatible
        print(f"verdict: {'compatible' if ok else 'incompatible'}")
        if ok:
            print(f"witness: {_format_witness(tasks, verdict.witness.paths)}")
            print(f"plan: {plan.describe()} (cost {plan.cost})")
        else:
            print(f"violated: {verdict.violated}")
    elif mode == "partial":
        dt = int(arg)
        if len(tasks) != 2:
            raise LiteralParseError("partial mode takes exactly two tasks")
        ok = partial_compatible(g, tasks[0], tasks[1], dt)
        print(f"verdict: {'partial-compatible' if ok else 'not partial-compatible'}")
    else:
        raise LiteralParseError(f"unknown mode {args.mode!r}; expected worst_case, gk:K or partial:DT")
    return 0 if ok else 1


def cmd_simulate(args: argparse.Namespace) -> int:
    cfg = ExperimentConfig(
        sizes=args.sizes,
        trials=args.trials,
        measures=args.measure,
        seed=args.seed,
        topology=args.topology,
        shared_streams=args.shared_streams,
        workers=args.workers,
    )
    stats = run_experiment(cfg)
    write_stats(stats.rows, args.out, args.format)
    return 0


def cmd_plot(args: argparse.Namespace) -> int:
    rows = parse_csv(Path(args.stats).read_text())
    plot_stats(rows, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mbqn-compat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide compatibility of a task set")
    check.add_argument("--topology", required=True, help="path:N, ring:N, triangle or custom:FILE")
    check.add_argument("--tasks", required=True, help="comma-separated u->v literals")
    check.add_argument("--mode", default="worst_case", help="worst_case, gk:K or partial:DT")
    check.add_argument("--max-len", type=int, default=None, help="longest witness path, in vertices")
    check.set_defaults(func=cmd_check)

    sim = sub.add_parser("simulate", help="run the stochastic-arrival experiment")
    sim.add_argument("--sizes", type=_int_list, default=DEFAULT_SIZES)
    sim.add_argument("--trials", type=int, default=10_000)
    sim.add_argument("--measure", type=_measures, default=_measures("baseline,worst_case,gk:1"))
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--topology", choices=("path", "ring"), default="path")
    sim.add_argument("--shared-streams", action=argparse.BooleanOptionalAction, default=True)
    sim.add_argument("--workers", type=int, default=1)
    sim.add_argument("--out", required=True)
    sim.add_argument("--format", choices=("csv", "json"), default="csv")
    sim.set_defaults(func=cmd_simulate)

    plot = sub.add_parser("plot", help="render mean-vs-N curves from a stats CSV")
    plot.add_argument("stats", help="CSV written by 'simulate'")
    plot.add_argument("--out", required=True, help="output image, e.g. fig.svg")
    plot.set_defaults(func=cmd_plot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LiteralParseError, StatsFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
