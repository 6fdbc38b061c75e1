"""Changeable Time Quantum (CTQ): round robin with a per-round quantum.

Each round every surviving task runs once, in FIFO order, for at most the
round's quantum. Between rounds the quantum is re-chosen by running the
closed-form candidate scan (:func:`ctqsched.analytic.best_quantum`) over the
survivors' residual work, so short stragglers get flushed out early while a
tail of long tasks degenerates into cheap FCFS-sized slices.

The quantum applies for exactly one round and is then re-optimized, even if
no task finished; waiting already accrued in earlier rounds is ignored by the
scan because it offsets every candidate equally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analytic import best_quantum
from .model import MetricsReport, Schedule, Slice, Task, TaskSet, metrics_from_schedule

Survivors = tuple[tuple[int, int], ...]  # (task_id, residual tu), FIFO order


@dataclass(frozen=True)
class RoundRecord:
    """What one round saw and did. ``survivors_before`` holds the residual
    work of every task entering the round, in their original queue order."""

    number: int
    quantum: int
    survivors_before: Survivors
    completed: tuple[int, ...]
    chosen_by: str  # "user_supplied" or "optimized"


@dataclass(frozen=True)
class CtqTrace:
    rounds: tuple[RoundRecord, ...]
    schedule: Schedule
    metrics: MetricsReport

    @property
    def quantum_sequence(self) -> tuple[int, ...]:
        return tuple(r.quantum for r in self.rounds)


def residual_times(tasks: TaskSet, quanta_used: tuple[int, ...] | list[int]) -> Survivors:
    """Residual work of each task after the given completed rounds.

    A task that survived every round so far necessarily ran each full
    quantum, so its residual is simply burst minus the sum of past quanta;
    tasks at or below zero have finished and are dropped. An empty history
    returns the original bursts.
    """
    spent = sum(quanta_used)
    return tuple(
        (task.id, task.burst - spent) for task in tasks if task.burst - spent > 0
    )


def run_round(
    survivors: Survivors, quantum: int, clock: int, number: int
) -> tuple[tuple[Slice, ...], Survivors, int]:
    """Dispatch each survivor once for min(quantum, residual) tu.

    Returns the emitted slices, the survivors still holding work, and the
    advanced clock.
    """
    if not survivors:
        raise ValueError("cannot run a round with no survivors")
    if quantum < 1:
        raise ValueError(f"quantum must be at least 1 tu, got {quantum}")
    slices = []
    after = []
    for task_id, residual in survivors:
        run = min(quantum, residual)
        slices.append(Slice(task_id, clock, clock + run, number))
        clock += run
        if residual > run:
            after.append((task_id, residual - run))
    return tuple(slices), tuple(after), clock


def run_ctq(tasks: TaskSet, first_quantum: int | None = None) -> CtqTrace:
    """Run CTQ to completion and return the full trace.

    Round 1 uses ``first_quantum`` when supplied; otherwise it, like every
    later round, uses the quantum that minimizes the closed-form average
    waiting time of the current residual set.
    """
    if tasks.n == 0:
        raise ValueError("cannot schedule an empty task set")
    if first_quantum is not None and first_quantum < 1:
        raise ValueError(f"first quantum must be at least 1 tu, got {first_quantum}")

    survivors: Survivors = tuple((task.id, task.burst) for task in tasks)
    rounds = []
    slices: list[Slice] = []
    clock = 0
    number = 1
    while survivors:
        if number == 1 and first_quantum is not None:
            quantum, chosen_by = first_quantum, "user_supplied"
        else:
            residual_set = TaskSet(
                tuple(Task(id=tid, burst=residual) for tid, residual in survivors)
            )
            quantum, chosen_by = best_quantum(residual_set).quantum, "optimized"
        before = survivors
        round_slices, survivors, clock = run_round(before, quantum, clock, number)
        still_alive = {tid for tid, _ in survivors}
        rounds.append(
            RoundRecord(
                number=number,
                quantum=quantum,
                survivors_before=before,
                completed=tuple(tid for tid, _ in before if tid not in still_alive),
                chosen_by=chosen_by,
            )
        )
        slices.extend(round_slices)
        number += 1

    schedule = Schedule(tuple(slices), clock)
    return CtqTrace(tuple(rounds), schedule, metrics_from_schedule(schedule, tasks))
