"""Command-line harness: subcommands, formats, exit codes."""

import json

import pytest

from ctqsched import Schedule, Slice, TaskSet, load_tasks, metrics_from_schedule
from ctqsched.cli import main
from ctqsched.experiment import CSV_HEADER


@pytest.fixture
def mixed_five(tmp_path):
    path = tmp_path / "mixed.tasks"
    path.write_text("1,20\n2,20\n3,5\n4,3\n5,1\n")
    return str(path)


@pytest.fixture
def long_then_short(tmp_path):
    path = tmp_path / "rr.tasks"
    path.write_text("1,24\n2,3\n3,3\n")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSimulate:
    def test_rr_gantt_dump(self, capsys, long_then_short):
        code, out, _ = run_cli(
            capsys, "simulate", "--tasks", long_then_short, "--algo", "rr",
            "--tq", "4", "--gantt",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[:8] == [
            "1,0,4,1", "2,4,7,1", "3,7,10,1", "1,10,14,2",
            "1,14,18,3", "1,18,22,4", "1,22,26,5", "1,26,30,6",
        ]
        assert "makespan: 30" in lines
        assert "context_switches: 1" in lines

    def test_rr_unit_quantum_metrics(self, capsys, mixed_five):
        code, out, _ = run_cli(
            capsys, "simulate", "--tasks", mixed_five, "--algo", "rr", "--tq", "1",
        )
        assert code == 0
        assert "avg_waiting: 17" in out
        assert "avg_turnaround: 26.8" in out
        assert "context_switches: 44" in out

    def test_ctq_metrics_and_sequence(self, capsys, mixed_five):
        code, out, _ = run_cli(
            capsys, "simulate", "--tasks", mixed_five, "--algo", "ctq",
            "--first-tq", "1",
        )
        assert code == 0
        assert "tq_sequence: 1|2|2|15" in out
        assert "rounds: 4" in out
        assert "avg_waiting: 14.2" in out
        assert "avg_turnaround: 24" in out
        assert "context_switches: 9" in out

    def test_gantt_dump_recomputes_to_printed_metrics(self, capsys, mixed_five):
        _, out, _ = run_cli(
            capsys, "simulate", "--tasks", mixed_five, "--algo", "ctq",
            "--first-tq", "1", "--gantt",
        )
        slices = []
        for line in out.splitlines():
            if ":" in line:
                break
            task_id, start, end, rnd = map(int, line.split(","))
            slices.append(Slice(task_id, start, end, rnd))
        tasks = TaskSet.from_bursts([20, 20, 5, 3, 1])
        report = metrics_from_schedule(Schedule.from_slices(slices), tasks)
        assert f"total_waiting: {report.total_waiting}" in out
        assert f"context_switches: {report.total_context_switches}" in out

    def test_writes_to_file(self, tmp_path, capsys, long_then_short):
        out_path = tmp_path / "result.txt"
        code, out, _ = run_cli(
            capsys, "simulate", "--tasks", long_then_short, "--algo", "fcfs",
            "--out", str(out_path),
        )
        assert code == 0
        assert out == ""
        assert "makespan: 30" in out_path.read_text()

    def test_missing_quantum_is_usage_error(self, capsys, long_then_short):
        code, _, err = run_cli(capsys, "simulate", "--tasks", long_then_short, "--algo", "rr")
        assert code == 2
        assert "--tq" in err

    def test_bad_task_file_is_validation_error(self, tmp_path, capsys):
        path = tmp_path / "bad.tasks"
        path.write_text("1,0\n")
        code, _, err = run_cli(capsys, "simulate", "--tasks", str(path), "--algo", "fcfs")
        assert code == 3
        assert "line 1" in err

    def test_missing_file_is_validation_error(self, capsys):
        code, _, err = run_cli(capsys, "simulate", "--tasks", "/nope.tasks", "--algo", "fcfs")
        assert code == 3
        assert err


class TestBestTq:
    @pytest.mark.parametrize(
        "text,expected",
        [("1,19\n2,19\n3,4\n4,2\n", 2), ("1,15\n2,15\n", 15), ("1,7\n", 7)],
    )
    def test_choices(self, tmp_path, capsys, text, expected):
        path = tmp_path / "q.tasks"
        path.write_text(text)
        code, out, _ = run_cli(capsys, "best-tq", "--tasks", str(path))
        assert code == 0
        assert f"tq: {expected}" in out

    def test_reports_scan_size(self, tmp_path, capsys):
        path = tmp_path / "q.tasks"
        path.write_text("1,19\n2,19\n3,4\n4,2\n")
        _, out, _ = run_cli(capsys, "best-tq", "--tasks", str(path))
        assert "candidates_evaluated: 19" in out
        assert "avg_waiting: 16.25" in out


class TestCompare:
    def test_csv_shape_and_order(self, capsys):
        code, out, _ = run_cli(
            capsys, "compare", "--n", "4", "--burst-min", "1", "--burst-max", "30",
            "--seed", "11", "--runs", "3",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == CSV_HEADER
        body = [line.split(",") for line in lines[1:]]
        assert len(body) == 3 * 3 + 3
        assert [row[2] for row in body] == ["rr", "ctq", "fcfs"] * 4
        assert [row[0] for row in body[:6]] == ["0", "0", "0", "1", "1", "1"]
        assert all(row[0] == "mean" for row in body[-3:])
        # ctq rows carry rounds and the |-joined quantum sequence
        ctq_rows = [row for row in body if row[2] == "ctq" and row[0] != "mean"]
        for row in ctq_rows:
            assert int(row[8]) == len(row[9].split("|"))

    def test_thirty_run_sweep_keeps_ctq_mean_at_or_below_rr(self, capsys):
        from fractions import Fraction

        code, out, _ = run_cli(
            capsys, "compare", "--n", "5", "--burst-min", "1", "--burst-max", "500",
            "--seed", "31", "--runs", "30",
        )
        assert code == 0
        body = [line.split(",") for line in out.splitlines()[1:]]
        assert len(body) == 90 + 3
        means = {row[2]: row for row in body if row[0] == "mean"}
        assert Fraction(means["ctq"][4]) <= Fraction(means["rr"][4])

    def test_identical_bursts_make_ctq_equal_fcfs(self, capsys):
        _, out, _ = run_cli(
            capsys, "compare", "--n", "5", "--burst-min", "20", "--burst-max", "20",
            "--seed", "3", "--runs", "1",
        )
        rows = {line.split(",")[2]: line.split(",") for line in out.splitlines()[1:4]}
        assert rows["ctq"][4:8] == rows["fcfs"][4:8]

    def test_repeat_invocations_are_byte_identical(self, capsys):
        args = (
            "compare", "--n", "5", "--burst-min", "1", "--burst-max", "100",
            "--seed", "7", "--runs", "4",
        )
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "compare", "--n", "3", "--burst-min", "1", "--burst-max", "20",
            "--seed", "5", "--runs", "2", "--format", "json",
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 2 * 3 + 3
        assert rows[1]["algorithm"] == "ctq"
        assert rows[1]["tq_policy"] == "optimized"
        assert isinstance(rows[1]["tq_sequence"], list)
        assert rows[0]["rounds"] is None

    def test_invalid_spec_exits_3(self, capsys):
        code, _, err = run_cli(
            capsys, "compare", "--n", "0", "--burst-min", "1", "--burst-max", "10",
            "--seed", "1",
        )
        assert code == 3
        assert err


class TestGenerate:
    def test_round_trips_through_loader(self, tmp_path, capsys):
        out_path = tmp_path / "w.tasks"
        code, _, _ = run_cli(
            capsys, "generate", "--n", "6", "--burst-min", "1", "--burst-max", "500",
            "--seed", "42", "--out", str(out_path),
        )
        assert code == 0
        tasks = load_tasks(out_path.read_text())
        assert tasks.n == 6
        assert all(1 <= t.burst <= 500 for t in tasks)

    def test_deterministic_output(self, capsys):
        args = ("generate", "--n", "5", "--burst-min", "1", "--burst-max", "500", "--seed", "42")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second
        assert first.splitlines()[0] == "1,45"


class TestUsage:
    def test_unknown_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_required_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["best-tq"])
        assert exc.value.code == 2
