"""Desk-scale benchmark: fixed RR (best initial quantum) vs CTQ vs FCFS.

Runs the comparison harness over seeded workloads and prints the per-run
rows plus the mean rows. The fixed-RR arm is the strongest fair baseline --
it already uses the quantum that minimizes average waiting for the initial
queue -- so CTQ's wins come from workloads whose optimal quantum changes
once the short tasks drain out.
"""

from ctqsched import format_fraction, run_comparison

rows = run_comparison(n=8, burst_min=1, burst_max=120, seed=2024, runs=8)

print(f"{'workload':>8} {'algo':>5} {'tq_policy':>10} {'avg_wt':>10} "
      f"{'avg_tat':>10} {'switches':>8} {'rounds':>6}")
for row in rows:
    print(
        f"{row.workload_id:>8} {row.algorithm:>5} {row.tq_policy:>10}"
        f" {format_fraction(row.avg_wt):>10} {format_fraction(row.avg_tat):>10}"
        f" {format_fraction(row.context_switches):>8}"
        f" {'' if row.rounds is None else row.rounds:>6}"
    )

means = {row.algorithm: row for row in rows if row.workload_id == "mean"}
gain = means["rr"].avg_wt - means["ctq"].avg_wt
print(f"\nmean waiting-time gain of CTQ over best-quantum RR: {format_fraction(gain)} tu")
print("(equal rows are workloads whose best initial quantum already covers the")
print("largest burst, where CTQ degenerates to the same single-round schedule)")
