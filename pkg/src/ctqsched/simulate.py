"""Slice-by-slice executors: fixed round robin, FCFS, and weighted round robin.

These run the actual dispatch loop and emit the full timeline. They are the
baseline arms of every experiment and the ground truth the closed-form math
in :mod:`ctqsched.analytic` is checked against.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .model import Schedule, Slice, TaskSet

ALGORITHMS = ("fixed_rr", "fcfs", "wrr")


@dataclass(frozen=True)
class SimConfig:
    """Selects a baseline executor. ``quantum`` is required for fixed_rr and
    wrr; ``wrr_reference_weight`` is the weight that maps to a full quantum."""

    algorithm: str
    quantum: int | None = None
    wrr_reference_weight: int = 10

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}, expected one of {ALGORITHMS}")
        if self.algorithm in ("fixed_rr", "wrr") and (self.quantum is None or self.quantum < 1):
            raise ValueError(f"{self.algorithm} requires a quantum of at least 1 tu")
        if self.wrr_reference_weight < 1:
            raise ValueError("reference weight must be at least 1")


def _require_tasks(tasks: TaskSet) -> None:
    if tasks.n == 0:
        raise ValueError("cannot simulate an empty task set")


def simulate_fixed_rr(tasks: TaskSet, quantum: int) -> Schedule:
    """Fixed-quantum round robin over a cyclic FIFO queue.

    Each dispatch runs min(quantum, remaining) tu; a task finishing exactly at
    the quantum boundary completes within that slice, and finished tasks leave
    the queue. ``Slice.round`` counts the dispatched task's runs so far.
    """
    _require_tasks(tasks)
    if quantum < 1:
        raise ValueError(f"quantum must be at least 1 tu, got {quantum}")
    return _run_cyclic(tasks, {task.id: quantum for task in tasks})


def simulate_fcfs(tasks: TaskSet) -> Schedule:
    """First-come first-served: one slice per task, in queue order."""
    _require_tasks(tasks)
    slices = []
    clock = 0
    for task in tasks:
        slices.append(Slice(task.id, clock, clock + task.burst, 1))
        clock += task.burst
    return Schedule(tuple(slices), clock)


def simulate_wrr(tasks: TaskSet, quantum: int, reference_weight: int = 10) -> Schedule:
    """Weighted round robin: task k's dispatch length scales with its weight.

    A task with the reference weight receives the full quantum; others get
    floor(quantum * weight / reference_weight), clamped to at least 1 tu so
    every dispatch makes progress.
    """
    _require_tasks(tasks)
    if quantum < 1:
        raise ValueError(f"quantum must be at least 1 tu, got {quantum}")
    if reference_weight < 1:
        raise ValueError(f"reference weight must be at least 1, got {reference_weight}")
    shares = {
        task.id: max(1, quantum * task.weight // reference_weight) for task in tasks
    }
    return _run_cyclic(tasks, shares)


def _run_cyclic(tasks: TaskSet, share: dict[int, int]) -> Schedule:
    queue = deque((task.id, task.burst) for task in tasks)
    dispatches = {task.id: 0 for task in tasks}
    slices = []
    clock = 0
    while queue:
        task_id, left = queue.popleft()
        run = min(share[task_id], left)
        dispatches[task_id] += 1
        slices.append(Slice(task_id, clock, clock + run, dispatches[task_id]))
        clock += run
        if left > run:
            queue.append((task_id, left - run))
    return Schedule(tuple(slices), clock)


def simulate(tasks: TaskSet, config: SimConfig) -> Schedule:
    """Dispatch to the executor selected by ``config``."""
    if config.algorithm == "fixed_rr":
        return simulate_fixed_rr(tasks, config.quantum)
    if config.algorithm == "fcfs":
        return simulate_fcfs(tasks)
    return simulate_wrr(tasks, config.quantum, config.wrr_reference_weight)
