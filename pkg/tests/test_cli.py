import subprocess
import sys

import pytest

from zetabound import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def result_line(out):
    return [l for l in out.splitlines() if l.startswith("RESULT ")][-1]


def test_eval_first_zero(capsys):
    code, out, _ = run(capsys, "eval", "--t", "14.1347251417")
    assert code == 0
    lo = float(result_line(out).split("lo=")[1].split()[0])
    assert 0 <= lo < 1e-6
    assert "method=EM" in result_line(out)


def test_eval_interval_rs(capsys):
    code, out, _ = run(capsys, "eval", "--t", "10000", "--t-hi", "10000.001")
    assert code == 0 and "method = RS" in out


def test_check_theorem(capsys):
    code, out, _ = run(
        capsys, "check-theorem", "--k", "1.16", "--theta", "7.5", "--a0", "3.37", "--t0", "5.867e9", "--target", "0.732"
    )
    assert code == 0
    for name in ("D1 =", "D2 =", "D3 =", "D4 =", "D5 ="):
        assert name in out
    assert "status=PASS" in result_line(out)


def test_check_theorem_fails_at_half(capsys):
    code, out, _ = run(capsys, "check-theorem", "--target", "0.5")
    assert code == 1 and "status=FAIL" in result_line(out)


def test_check_theorem_infeasible(capsys):
    code, out, _ = run(capsys, "check-theorem", "--t0", "1e5")
    assert code == 1 and "reason=infeasible" in out


def test_params_file(capsys, tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("k = 1.16\ntheta = 7.5\na0 = 3.37\nt0 = 5.867e9\n")
    code, _, _ = run(capsys, "check-theorem", "--params", str(p))
    assert code == 0


def test_missing_params_file(capsys, tmp_path):
    code, out, err = run(capsys, "check-theorem", "--params", str(tmp_path / "nope.txt"))
    assert code == 1 and "error:" in err


def test_verify_range_small(capsys):
    code, out, _ = run(capsys, "verify-range", "--lo", "100", "--hi", "101", "--a", "0.732")
    assert code == 0 and "pieces=1024" in result_line(out)


def test_verify_range_fail(capsys):
    code, out, _ = run(capsys, "verify-range", "--lo", "2", "--hi", "3", "--a", "0.45", "--max-depth", "0")
    assert code == 1


def test_records_and_table(capsys, tmp_path):
    path = tmp_path / "rec.txt"
    code, _, _ = run(capsys, "records", "--lo", "2", "--hi", "5", "--out", str(path))
    assert code == 0 and path.read_text().startswith("# zeta-records v1")
    code, out, _ = run(capsys, "table", "--lo", "2", "--hi", "5", "--records", str(path))
    assert code == 0 and "A = 0." in out
    A = result_line(out).split("A=")[1].split()[0]
    code, out, _ = run(capsys, "table", "--lo", "2", "--hi", "5", "--records", str(path), "--expect", A)
    assert code == 0
    code, out, _ = run(capsys, "table", "--lo", "2", "--hi", "5", "--records", str(path), "--expect", "0.9")
    assert code == 1


def test_records_long_run_gate(capsys, tmp_path):
    code, _, err = run(capsys, "records", "--lo", "999", "--hi", "1001", "--out", str(tmp_path / "x"))
    assert code == 1 and "long-run" in err


def test_crossover(capsys):
    code, out, _ = run(capsys, "crossover", "--lo", "200", "--hi", "300")
    assert code == 0
    line = result_line(out)
    lo = float(line.split("lo=")[1].split()[0])
    hi = float(line.split("hi=")[1].split()[0])
    assert lo <= 226.7088 <= hi and hi - lo <= 1e-3


def test_crossover_no_sign_change(capsys):
    code, _, err = run(capsys, "crossover", "--lo", "300", "--hi", "400")
    assert code == 1 and "no certified sign change" in err


def test_min_q(capsys):
    code, out, _ = run(capsys, "min-q")
    assert code == 0 and "certified=true" in out


def test_optimize_small(capsys, tmp_path):
    out_path = tmp_path / "best.txt"
    code, out, _ = run(
        capsys,
        "optimize-params",
        "--k-range", "1.15", "1.17",
        "--theta-range", "7", "8",
        "--a0-range", "3.3", "3.4",
        "--grid", "3",
        "--rounds", "1",
        "--threads", "1",
        "--target", "0.732",
        "--out", str(out_path),
    )
    assert code == 0 and out_path.read_text().startswith("k = ")


def test_check_lemmas_small(capsys):
    code, out, _ = run(capsys, "check-lemmas", "--which", "12m", "--trials", "20", "--max-len", "5", "--moments", "100")
    assert code == 0 and out.count("PASS") >= 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["eval"],
        ["eval", "--t", "abc"],
        ["verify-range", "--lo", "2", "--hi", "3", "--a", "0.7", "--terms", "9"],
        ["eval", "--t", "5", "--digits", "0"],
        ["frobnicate"],
    ],
)
def test_bad_flags(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(argv)
    assert exc.value.code == 2


def test_domain_error_is_reported(capsys):
    code, _, err = run(capsys, "eval", "--t", "0.01")
    assert code == 1 and "error:" in err


def test_byte_identical_output():
    argv = [sys.executable, "-m", "zetabound.cli", "eval", "--t", "300", "--digits", "15"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and b"RESULT command=eval" in a
