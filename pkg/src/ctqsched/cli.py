"""Command-line harness.

Subcommands:

* ``simulate`` -- run one scheduler on a task file; prints a metrics block,
  plus the slice list (``task_id,start,end,round`` lines) with ``--gantt``.
* ``best-tq``  -- report the quantum minimizing average waiting time.
* ``compare``  -- fixed RR vs CTQ vs FCFS over seeded workloads, CSV or JSON.
* ``generate`` -- write a seeded random task file.

Exit codes: 0 success, 2 usage error, 3 input validation error, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analytic import best_quantum
from .ctq import CtqTrace, run_ctq
from .experiment import rows_to_csv, rows_to_json, run_comparison
from .model import (
    InvariantViolation,
    MetricsReport,
    Schedule,
    TaskSet,
    format_fraction,
    metrics_from_schedule,
)
from .simulate import simulate_fcfs, simulate_fixed_rr, simulate_wrr
from .workload import WorkloadSpec, generate, load_tasks, save_tasks


class UsageError(Exception):
    pass


def _read_tasks(path: str) -> TaskSet:
    return load_tasks(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _gantt_lines(schedule: Schedule) -> list[str]:
    return [f"{s.task_id},{s.start},{s.end},{s.round}" for s in schedule.slices]


def _metrics_lines(tasks: TaskSet, metrics: MetricsReport) -> list[str]:
    lines = [
        f"tasks: {tasks.n}",
        f"makespan: {metrics.makespan}",
        f"total_waiting: {metrics.total_waiting}",
        f"avg_waiting: {format_fraction(metrics.avg_waiting)}",
        f"avg_turnaround: {format_fraction(metrics.avg_turnaround)}",
        f"context_switches: {metrics.total_context_switches}",
    ]
    for m in metrics.per_task:
        lines.append(
            f"task {m.task_id}: completion={m.completion} turnaround={m.turnaround} "
            f"waiting={m.waiting} switches={m.context_switches} slices={m.slice_count}"
        )
    return lines


def cmd_simulate(args: argparse.Namespace) -> int:
    tasks = _read_tasks(args.tasks)
    trace: CtqTrace | None = None
    if args.algo == "rr":
        if args.tq is None:
            raise UsageError("--tq is required for --algo rr")
        schedule = simulate_fixed_rr(tasks, args.tq)
    elif args.algo == "wrr":
        if args.tq is None:
            raise UsageError("--tq is required for --algo wrr")
        schedule = simulate_wrr(tasks, args.tq, args.reference_weight)
    elif args.algo == "fcfs":
        schedule = simulate_fcfs(tasks)
    else:  # ctq
        trace = run_ctq(tasks, args.first_tq)
        schedule = trace.schedule

    metrics = trace.metrics if trace is not None else metrics_from_schedule(schedule, tasks)
    lines = []
    if args.gantt:
        lines.extend(_gantt_lines(schedule))
    lines.append(f"algorithm: {args.algo}")
    if args.algo in ("rr", "wrr"):
        lines.append(f"quantum: {args.tq}")
    if args.algo == "wrr":
        lines.append(f"reference_weight: {args.reference_weight}")
    if trace is not None:
        lines.append(f"rounds: {len(trace.rounds)}")
        lines.append(f"tq_sequence: {'|'.join(map(str, trace.quantum_sequence))}")
    lines.extend(_metrics_lines(tasks, metrics))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_best_tq(args: argparse.Namespace) -> int:
    choice = best_quantum(_read_tasks(args.tasks))
    _emit(
        f"tq: {choice.quantum}\n"
        f"avg_waiting: {format_fraction(choice.avg_waiting)}\n"
        f"candidates_evaluated: {choice.candidates_evaluated}\n",
        args.out,
    )
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    rows = run_comparison(args.n, args.burst_min, args.burst_max, args.seed, args.runs)
    text = rows_to_json(rows) if args.format == "json" else rows_to_csv(rows)
    _emit(text, args.out)
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    spec = WorkloadSpec(
        n=args.n, burst_min=args.burst_min, burst_max=args.burst_max, seed=args.seed
    )
    _emit(save_tasks(generate(spec)), args.out)
    return 0


def _add_workload_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="number of tasks")
    parser.add_argument("--burst-min", type=int, default=1, help="smallest burst (tu)")
    parser.add_argument("--burst-max", type=int, required=True, help="largest burst (tu)")
    parser.add_argument("--seed", type=int, required=True, help="workload seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctqsched",
        description="Round-robin scheduling toolkit with per-round quantum optimization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run one scheduler on a task file")
    p.add_argument("--tasks", required=True, help="task file (id,burst[,weight] per line)")
    p.add_argument("--algo", required=True, choices=("rr", "ctq", "fcfs", "wrr"))
    p.add_argument("--tq", type=int, help="quantum for rr/wrr (tu)")
    p.add_argument("--first-tq", type=int, help="round-1 quantum for ctq (default: optimized)")
    p.add_argument("--reference-weight", type=int, default=10, help="wrr full-quantum weight")
    p.add_argument("--gantt", action="store_true", help="also print the slice list")
    p.add_argument("--out", help="write output to a file instead of stdout")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("best-tq", help="quantum minimizing average waiting time")
    p.add_argument("--tasks", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_best_tq)

    p = sub.add_parser("compare", help="fixed RR vs CTQ vs FCFS over seeded workloads")
    _add_workload_flags(p)
    p.add_argument("--runs", type=int, default=1, help="number of workloads")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="write a seeded random task file")
    _add_workload_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
