"""Comparison harness: fixed round robin vs CTQ vs FCFS on seeded workloads.

For each generated workload the fixed-RR arm gets the strongest fair
baseline: its quantum is the one the candidate scan picks for the initial
set. The CTQ arm starts from that same choice and re-optimizes every round.
Rows are exact (rationals rendered only at the CSV/JSON boundary) and the
whole run is a pure function of its arguments, so repeated invocations are
byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .analytic import best_quantum
from .ctq import run_ctq
from .model import TaskSet, format_fraction, metrics_from_schedule
from .simulate import simulate_fcfs, simulate_fixed_rr
from .workload import WorkloadSpec, generate

ALGORITHM_ORDER = ("rr", "ctq", "fcfs")

CSV_HEADER = (
    "workload_id,n,algorithm,tq_policy,avg_wt,avg_tat,"
    "context_switches,makespan,rounds,tq_sequence"
)


@dataclass(frozen=True)
class ExperimentRow:
    """One (workload, algorithm) result. Mean rows use workload_id "mean" and
    may carry fractional context-switch and makespan values."""

    workload_id: str
    n: int
    algorithm: str
    tq_policy: str
    avg_wt: Fraction
    avg_tat: Fraction
    context_switches: Fraction
    makespan: Fraction
    rounds: int | None = None
    tq_sequence: tuple[int, ...] | None = None


def _row(workload_id, tasks, algorithm, tq_policy, metrics, rounds=None, tq_sequence=None):
    return ExperimentRow(
        workload_id=workload_id,
        n=tasks.n,
        algorithm=algorithm,
        tq_policy=tq_policy,
        avg_wt=metrics.avg_waiting,
        avg_tat=metrics.avg_turnaround,
        context_switches=Fraction(metrics.total_context_switches),
        makespan=Fraction(metrics.makespan),
        rounds=rounds,
        tq_sequence=tq_sequence,
    )


def compare_workload(
    tasks: TaskSet, workload_id: str = "0"
) -> tuple[ExperimentRow, ExperimentRow, ExperimentRow]:
    """Run the three arms on one task set; rows in rr, ctq, fcfs order."""
    choice = best_quantum(tasks)
    rr_metrics = metrics_from_schedule(simulate_fixed_rr(tasks, choice.quantum), tasks)
    trace = run_ctq(tasks)
    fcfs_metrics = metrics_from_schedule(simulate_fcfs(tasks), tasks)
    return (
        _row(workload_id, tasks, "rr", str(choice.quantum), rr_metrics),
        _row(
            workload_id,
            tasks,
            "ctq",
            "optimized",
            trace.metrics,
            rounds=len(trace.rounds),
            tq_sequence=trace.quantum_sequence,
        ),
        _row(workload_id, tasks, "fcfs", "none", fcfs_metrics),
    )


def run_comparison(
    n: int, burst_min: int, burst_max: int, seed: int, runs: int
) -> list[ExperimentRow]:
    """Rows for ``runs`` seeded workloads plus one mean row per algorithm.

    Workload i uses seed ``seed + i`` (each hashed through SeedSequence, so
    adjacent seeds give independent streams). Ordering is deterministic:
    workloads by index, algorithms rr, ctq, fcfs; mean rows last.
    """
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    rows: list[ExperimentRow] = []
    for i in range(runs):
        tasks = generate(
            WorkloadSpec(n=n, burst_min=burst_min, burst_max=burst_max, seed=seed + i)
        )
        rows.extend(compare_workload(tasks, workload_id=str(i)))

    for algorithm in ALGORITHM_ORDER:
        arm = [r for r in rows if r.algorithm == algorithm]
        rows.append(
            ExperimentRow(
                workload_id="mean",
                n=n,
                algorithm=algorithm,
                tq_policy="mean",
                avg_wt=sum(r.avg_wt for r in arm) / runs,
                avg_tat=sum(r.avg_tat for r in arm) / runs,
                context_switches=sum(r.context_switches for r in arm) / runs,
                makespan=sum(r.makespan for r in arm) / runs,
            )
        )
    return rows


def rows_to_csv(rows: list[ExperimentRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                (
                    r.workload_id,
                    str(r.n),
                    r.algorithm,
                    r.tq_policy,
                    format_fraction(r.avg_wt),
                    format_fraction(r.avg_tat),
                    format_fraction(r.context_switches),
                    format_fraction(r.makespan),
                    "" if r.rounds is None else str(r.rounds),
                    "" if r.tq_sequence is None else "|".join(map(str, r.tq_sequence)),
                )
            )
        )
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[ExperimentRow]) -> str:
    payload = [
        {
            "workload_id": r.workload_id,
            "n": r.n,
            "algorithm": r.algorithm,
            "tq_policy": r.tq_policy,
            "avg_wt": format_fraction(r.avg_wt),
            "avg_tat": format_fraction(r.avg_tat),
            "context_switches": format_fraction(r.context_switches),
            "makespan": format_fraction(r.makespan),
            "rounds": r.rounds,
            "tq_sequence": None if r.tq_sequence is None else list(r.tq_sequence),
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2) + "\n"
