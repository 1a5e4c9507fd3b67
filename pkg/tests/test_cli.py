import math

import numpy as np
import pytest

from eigenfloor.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_kv(out):
    pairs = {}
    for line in out.strip().splitlines():
        key, _, value = line.partition("=")
        pairs.setdefault(key, []).append(value)
    return pairs


def test_bounds_traces_identity(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--traces", "3", "3", "3")
    assert code == 0
    kv = parse_kv(out)
    assert float(kv["laguerre"][0]) == 1.0
    assert float(kv["gap_ratio"][0]) == 1.0
    assert kv["q"] == ["2"]


def test_bounds_traces_values_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--traces", "1.75", "1.3125", "3")
    assert code == 0
    kv = parse_kv(out)
    assert float(kv["laguerre"][0]) == pytest.approx(0.9762842159261823, rel=1e-15)
    assert float(kv["gap_upper"][0]) == pytest.approx(1.2440710539815456, rel=1e-15)
    # every float printed must round-trip through its own repr
    for key, values in kv.items():
        if key == "q":
            continue
        assert repr(float(values[0])) == values[0]


def test_bounds_infeasible_exit_2(capsys):
    code, _, err = run_cli(capsys, "bounds", "--traces", "1", "2", "3")
    assert code == 2
    assert "infeasible" in err


def test_bounds_matrix_file(capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("tri\n2\n2.0 2.0\n-1.0\n")
    code, out, _ = run_cli(capsys, "bounds", str(path))
    assert code == 0
    kv = parse_kv(out)
    # eigenvalues 1 and 3: traces (4/3, 10/9)
    assert float(kv["alpha"][0]) == pytest.approx((10.0 / 9.0) / (4.0 / 3.0) ** 2, rel=1e-14)


def test_bounds_parse_error_exit_1(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("tri\n2\n2.0\n-1.0\n")
    code, _, err = run_cli(capsys, "bounds", str(path))
    assert code == 1
    assert "parse" in err


def test_bounds_usage_error_exit_1(capsys):
    code, _, _ = run_cli(capsys, "bounds", "--traces", "1", "2")
    assert code == 1
    code, _, _ = run_cli(capsys, "bounds", "--traces", "1.5", "1.25", "2.5")
    assert code == 1


def test_sweep_deterministic_and_sound(capsys, tmp_path):
    out1 = tmp_path / "s1.csv"
    out2 = tmp_path / "s2.csv"
    for out in (out1, out2):
        code, _, _ = run_cli(
            capsys, "sweep", "--m", "5", "--samples", "50", "--seed", "7", "--out", str(out)
        )
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().strip().splitlines()
    assert lines[0] == "# eigenfloor-sweep v1"
    assert lines[1].split(",")[:3] == ["sample_id", "alpha", "lambda_min"]
    assert len(lines) == 52
    for row in lines[2:]:
        fields = row.split(",")
        alpha, lam, lag, gap = (float(v) for v in fields[1:5])
        assert 0.2 <= alpha < 1.0
        assert lag * (1 - 1e-10) <= lam <= gap * (1 + 1e-10)


def test_sweep_io_failure_exit_3(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "sweep", "--samples", "1", "--out", str(tmp_path / "nope" / "x.csv")
    )
    assert code == 3
    assert "i/o" in err


def test_extremal_pass(capsys):
    code, out, _ = run_cli(capsys, "extremal", "--traces", "3", "3", "3")
    assert code == 0
    kv = parse_kv(out)
    assert kv["status"] == ["pass"]
    assert float(kv["laguerre_rel_gap"][0]) <= 1e-12

    code, out, _ = run_cli(
        capsys, "extremal", "--traces", "1.75", "1.3125", "3", "--epsilon", "1e-8"
    )
    assert code == 0
    assert parse_kv(out)["status"] == ["pass"]


def test_extremal_infeasible_exit_2(capsys):
    code, _, _ = run_cli(capsys, "extremal", "--traces", "1", "2", "3")
    assert code == 2


def test_dqds_golden(capsys, tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("bidiag\n2\n1.0 1.0\n1.0\n")
    log = tmp_path / "log.csv"
    code, out, _ = run_cli(capsys, "dqds", str(path), "--strategy", "laguerre", "--log", str(log))
    assert code == 0
    kv = parse_kv(out)
    sigmas = [float(v) for v in kv["sigma"]]
    golden = (1 + math.sqrt(5)) / 2
    assert sigmas == pytest.approx([golden, golden - 1], rel=1e-12)
    log_lines = log.read_text().strip().splitlines()
    assert log_lines[0] == "# eigenfloor-dqds-log v1"
    assert log_lines[1] == "sweep_id,shift,smallest_q"
    assert len(log_lines) == 2 + int(kv["iterations"][0])


def test_dqds_diagonal_no_sweeps(capsys, tmp_path):
    path = tmp_path / "d.txt"
    path.write_text("bidiag\n3\n3.0 1.0 2.0\n0.0 0.0\n")
    code, out, _ = run_cli(capsys, "dqds", str(path))
    assert code == 0
    kv = parse_kv(out)
    assert kv["iterations"] == ["0"]
    assert [float(v) for v in kv["sigma"]] == [3.0, 2.0, 1.0]


def test_dqds_strategy_comparison(capsys, tmp_path):
    rng = np.random.default_rng(100)
    m = 30
    d = 10.0 ** rng.uniform(-0.5, 0.5, m)
    s = 10.0 ** rng.uniform(-0.5, 0.5, m - 1)
    path = tmp_path / "b.txt"
    path.write_text(
        "bidiag\n%d\n%s\n%s\n"
        % (m, " ".join(repr(float(v)) for v in d), " ".join(repr(float(v)) for v in s))
    )
    code, out, _ = run_cli(capsys, "dqds", str(path), "--strategy", "laguerre")
    assert code == 0
    lag_iters = int(parse_kv(out)["iterations"][0])
    code, out, err = run_cli(capsys, "dqds", str(path), "--strategy", "zero")
    if code == 0:
        zero_iters = int(parse_kv(out)["iterations"][0])
    else:
        assert code == 5
        zero_iters = 30 * m
    assert lag_iters <= zero_iters


def test_dqds_rejects_tri_input(capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("tri\n2\n2.0 2.0\n-1.0\n")
    code, _, err = run_cli(capsys, "dqds", str(path))
    assert code == 1
    assert "bidiag" in err


def test_unknown_command_exit_1(capsys):
    code, _, _ = run_cli(capsys, "frobnicate")
    assert code == 1
