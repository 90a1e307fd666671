import json
import subprocess
import sys

import pytest

from harnack.cli import SWEEP_HEADER, format_sweep, main, parse_sweep, sweep_rows


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# -- sweep ------------------------------------------------------------------

def test_sweep_header_and_rows(capsys):
    code, out, _ = run(["sweep", "--c", "1", "--t-min", "0", "--t-max", "0.5", "--step", "0.1"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ",".join(SWEEP_HEADER)
    assert len(lines) == 7
    first = [float(v) for v in lines[1].split(",")]
    assert first == [0, 1, 1, 1, 1, 1, 1]


def test_sweep_degenerates_at_c_one():
    row = next(r for r in sweep_rows(1.0, 0.0, 0.5, 0.5) if r.t == 0.5)
    assert row.classical_hi == row.strong_hi
    assert row.classical_hi == pytest.approx(3, rel=1e-15)
    assert row.u1 == pytest.approx(3, rel=1e-15)


def test_sweep_c_zero():
    row = next(r for r in sweep_rows(0.0, 0.0, 0.5, 0.5) if r.t == 0.5)
    assert row.strong_hi == pytest.approx(5 / 3, rel=1e-15)
    assert row.u1 == pytest.approx(5 / 3, rel=1e-15)


def test_sweep_row_invariants():
    for c in (0.0, 0.3, 1.0):
        for r in sweep_rows(c):
            assert r.classical_lo <= r.strong_lo <= r.strong_hi <= r.classical_hi
            assert r.u1 == pytest.approx(r.strong_hi, rel=1e-9)
            assert r.u2 == pytest.approx(r.strong_lo, rel=1e-9)


def test_sweep_csv_round_trip(tmp_path, capsys):
    path = tmp_path / "sweep.csv"
    code, out, _ = run(["sweep", "--c", "0.37", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    parsed = parse_sweep(path.read_text())
    assert parsed == sweep_rows(0.37)
    assert format_sweep(parsed) == path.read_text()


def test_sweep_is_deterministic(capsys):
    _, a, _ = run(["sweep", "--c", "0.5"], capsys)
    _, b, _ = run(["sweep", "--c", "0.5"], capsys)
    assert a == b


@pytest.mark.parametrize("argv", [
    ["sweep", "--c", "1.5"],
    ["sweep", "--c", "0.5", "--t-min", "0.6", "--t-max", "0.5"],
    ["sweep", "--c", "0.5", "--t-max", "1.0"],
    ["sweep", "--c", "0.5", "--step", "0"],
])
def test_sweep_bad_range(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2 and out == "" and err


# -- extremal ---------------------------------------------------------------

def table(out):
    return {line[:14].strip(): float(line[14:]) for line in out.strip().splitlines()}


def test_extremal_at_origin(capsys):
    code, out, _ = run(["extremal", "--c", "0.5", "--x", "0"], capsys)
    t = table(out)
    assert code == 0
    assert t["u1(x)"] == 1 and t["u2(x)"] == 1
    assert t["|grad u1(0)|"] == pytest.approx(1, abs=1e-6)


def test_extremal_c_one(capsys):
    _, out, _ = run(["extremal", "--c", "1", "--x", "0.5"], capsys)
    t = table(out)
    assert t["u1(x)"] == pytest.approx(3, rel=1e-15)
    assert t["gap_u1"] <= 1e-9


def test_extremal_c_zero(capsys):
    _, out, _ = run(["extremal", "--c", "0", "--x", "0.9"], capsys)
    assert table(out)["u1(x)"] == pytest.approx(1.81 / 0.19, rel=1e-13)


@pytest.mark.parametrize("argv", [["extremal", "--c", "2", "--x", "0.1"],
                                  ["extremal", "--c", "0.5", "--x", "1.0"]])
def test_extremal_bad_range(argv, capsys):
    assert run(argv, capsys)[0] == 2


# -- disc-image -------------------------------------------------------------

def test_disc_image_json(capsys):
    code, out, _ = run(["disc-image", "--b", "1", "--r", "0.5", "--json"], capsys)
    info = json.loads(out)
    assert code == 0
    assert info["center"] == pytest.approx(5 / 3, rel=1e-15)
    assert info["radius"] == pytest.approx(4 / 3, rel=1e-15)
    assert info["re_interval"] == pytest.approx([1 / 3, 3], rel=1e-15)


def test_disc_image_homogeneous(capsys):
    _, one, _ = run(["disc-image", "--b", "1", "--r", "0.5", "--json"], capsys)
    _, two, _ = run(["disc-image", "--b", "2", "--r", "0.5", "--json"], capsys)
    one, two = json.loads(one), json.loads(two)
    assert two["center"] == pytest.approx(2 * one["center"], rel=1e-15)
    assert two["radius"] == pytest.approx(2 * one["radius"], rel=1e-15)


def test_disc_image_near_one(capsys):
    code, out, _ = run(["disc-image", "--b", "1", "--r", "0.999999"], capsys)
    assert code == 0
    assert "center" in out and "inf" not in out


@pytest.mark.parametrize("b, r", [("0", "0.5"), ("1", "1"), ("1", "0")])
def test_disc_image_bad_range(b, r, capsys):
    assert run(["disc-image", "--b", b, "--r", r], capsys)[0] == 2


# -- verify -----------------------------------------------------------------

def test_verify_writes_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, err = run(["verify", "--trials", "500", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    report = json.loads(path.read_text())
    assert report["pass"] is True
    assert "main_theorem" in err


def test_verify_zero_tolerance_fails_with_witness(capsys):
    code, out, _ = run(["verify", "--trials", "500", "--tol", "main_theorem=0"], capsys)
    assert code == 1
    rec = next(r for r in json.loads(out)["suites"] if r["suite"] == "main_theorem")
    assert rec["violations"] > 0 and rec["witness"]["measure"]


def test_verify_io_error(tmp_path, capsys):
    code, _, err = run(["verify", "--trials", "10", "--out", str(tmp_path / "no" / "r.json")], capsys)
    assert code == 3 and err


@pytest.mark.parametrize("argv", [
    ["verify", "--trials", "0"],
    ["verify", "--rmax", "1.2"],
])
def test_verify_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == 2


@pytest.mark.parametrize("argv", [
    ["verify", "--tol", "bogus=1"],
    ["verify", "--tol", "main_theorem"],
    ["verify", "--seed", "x"],
    ["frobnicate"],
])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "harnack", "verify", "--trials", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert proc.stdout == "" and "trials" in proc.stderr
