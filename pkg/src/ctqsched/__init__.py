"""Deterministic round-robin scheduling toolkit.

Closed-form waiting times for fixed-quantum round robin, a slice-by-slice
simulator that doubles as their ground truth, and the Changeable Time
Quantum (CTQ) scheduler that re-optimizes the quantum every round.
"""

from .analytic import (
    QuantumChoice,
    RoundRobinProfile,
    TaskWait,
    best_quantum,
    full_quanta,
    last_slice_start,
    waiting_profile,
)
from .ctq import CtqTrace, RoundRecord, residual_times, run_ctq, run_round
from .experiment import (
    ExperimentRow,
    compare_workload,
    rows_to_csv,
    rows_to_json,
    run_comparison,
)
from .model import (
    InvariantViolation,
    MetricsReport,
    Schedule,
    Slice,
    Task,
    TaskMetrics,
    TaskSet,
    format_fraction,
    metrics_from_schedule,
)
from .simulate import (
    SimConfig,
    simulate,
    simulate_fcfs,
    simulate_fixed_rr,
    simulate_wrr,
)
from .workload import TaskFileError, WorkloadSpec, generate, load_tasks, save_tasks

__version__ = "0.1.0"

__all__ = [
    "QuantumChoice",
    "RoundRobinProfile",
    "TaskWait",
    "best_quantum",
    "full_quanta",
    "last_slice_start",
    "waiting_profile",
    "CtqTrace",
    "RoundRecord",
    "residual_times",
    "run_ctq",
    "run_round",
    "ExperimentRow",
    "compare_workload",
    "rows_to_csv",
    "rows_to_json",
    "run_comparison",
    "InvariantViolation",
    "MetricsReport",
    "Schedule",
    "Slice",
    "Task",
    "TaskMetrics",
    "TaskSet",
    "format_fraction",
    "metrics_from_schedule",
    "SimConfig",
    "simulate",
    "simulate_fcfs",
    "simulate_fixed_rr",
    "simulate_wrr",
    "TaskFileError",
    "WorkloadSpec",
    "generate",
    "load_tasks",
    "save_tasks",
]
