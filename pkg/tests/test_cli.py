import csv
import io
import json
import subprocess
import sys
from importlib import resources

import numpy as np
import pytest

from qpfloquet import cli
from qpfloquet.qpseq import EquationCoefficients

EXAMPLE = resources.files("qpfloquet") / "data" / "example_p3.json"
SWEEP = resources.files("qpfloquet") / "data" / "example_sweep_p2.json"


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "qpfloquet", *map(str, args)],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=60,
    )


def problem(tmp_path, a, b, c, ratio=1, sweep=None, name="p.json"):
    data = {"coefficients": EquationCoefficients.from_values(a, b, c, ratio).to_dict()}
    if sweep is not None:
        data["sweep"] = sweep
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


def rows(text):
    return list(csv.reader(io.StringIO(text)))


class TestParam:
    def test_scalar_all_methods(self, tmp_path):
        out = run("param", problem(tmp_path, [2], [3], [2]), "--method", "all")
        assert out.returncode == 0, out.stderr
        rec = json.loads(out.stdout)
        assert [r["method"] for r in rec["results"]] == ["closed", "recurrence", "oracle"]
        assert all(r["q"] == pytest.approx([0.75, 0]) for r in rec["results"])
        assert max(rec["deltas"].values()) < 1e-12

    def test_single_method(self, capsys):
        assert cli.main(["param", str(EXAMPLE), "--method", "oracle"]) == 0
        rec = json.loads(capsys.readouterr().out)
        assert set(rec) == {"method", "q", "gamma"} and rec["method"] == "oracle"

    def test_csv(self, capsys):
        assert cli.main(["param", str(EXAMPLE), "--method", "all", "--output", "csv"]) == 0
        table = rows(capsys.readouterr().out)
        assert table[0] == ["method", "q_re", "q_im", "gamma_re", "gamma_im"]
        assert [r[0] for r in table[1:]] == ["closed", "recurrence", "oracle"]

    def test_stdin(self):
        out = run("param", stdin=EXAMPLE.read_text())
        assert out.returncode == 0 and "closed" in out.stdout

    def test_malformed_json(self):
        out = run("param", stdin="{not json")
        assert out.returncode == 2 and out.stdout == "" and "malformed" in out.stderr

    def test_missing_field(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"a": {"period": 1, "ratio": [1, 0], "base": [[1, 0]]}}))
        assert run("param", path).returncode == 2

    def test_capacity(self, tmp_path):
        path = problem(tmp_path, [1] * 20, [0.5] * 20, [1] * 20)
        out = run("param", path, "--method", "closed")
        assert out.returncode == 3 and out.stdout == ""
        assert run("param", path, "--method", "oracle").returncode == 0

    def test_deterministic(self):
        first = run("param", EXAMPLE, "--method", "all").stdout
        assert first and first == run("param", EXAMPLE, "--method", "all").stdout


class TestSolve:
    def test_constant(self, tmp_path, capsys):
        assert cli.main(["solve", str(problem(tmp_path, [1], [2], [1])), "--lo", "-3", "--hi", "3"]) == 0
        table = rows(capsys.readouterr().out)
        assert table[0] == ["k", "re", "im"]
        assert [float(r[1]) for r in table[1:]] == [1.0] * 7

    def test_second_kind(self, tmp_path, capsys):
        path = problem(tmp_path, [1], [0.6], [1])
        assert cli.main(["solve", str(path), "--m=-1", "--z0", "0", "--z1", "1", "--lo=-1", "--hi", "4"]) == 0
        table = rows(capsys.readouterr().out)[1:]
        from qpfloquet.chebyshev import U

        for k, re, im in table:
            assert complex(float(re), float(im)) == pytest.approx(U(int(k), 0.3), abs=1e-14)

    def test_zero(self, tmp_path, capsys):
        assert cli.main(["solve", str(problem(tmp_path, [1j, 2], [3, 1], [1, 1])), "--z0", "0", "--z1", "0"]) == 0
        assert all(float(r[1]) == 0 and float(r[2]) == 0 for r in rows(capsys.readouterr().out)[1:])

    def test_bad_window(self, tmp_path):
        assert cli.main(["solve", str(problem(tmp_path, [1], [2], [1])), "--lo", "3", "--hi", "5"]) == 2


class TestCheck:
    def test_periodic_example(self, tmp_path, capsys):
        assert cli.main(["check", str(problem(tmp_path, [1, 1], [1, 4], [1, 1]))]) == 0
        rec = json.loads(capsys.readouterr().out)
        assert rec["holds"] is True and len(rec["ratios"]) == 2
        assert rec["lhs"] == pytest.approx(rec["rhs"])

    def test_constant_solution(self, tmp_path, capsys):
        assert cli.main(["check", str(problem(tmp_path, [2], [2.5], [0.5]))]) == 0
        assert json.loads(capsys.readouterr().out)["holds"] is True

    def test_generic(self, tmp_path, capsys):
        assert cli.main(["check", str(problem(tmp_path, [1, 2j], [0.3, 1], [1 - 1j, 0.5]))]) == 0
        assert json.loads(capsys.readouterr().out)["holds"] is False

    def test_zero_ratio(self, tmp_path):
        assert cli.main(["check", str(problem(tmp_path, [1], [2], [1])), "--rhat", "0,0"]) == 2

    def test_negative_ratio(self, tmp_path, capsys):
        # Chebyshev with q = -1 has 1-periodic ratio -1
        assert cli.main(["check", str(problem(tmp_path, [1], [-2], [1])), "--rhat=-1,0"]) == 0
        assert json.loads(capsys.readouterr().out)["holds"] is True


class TestSweep:
    def test_free_band(self, tmp_path, capsys):
        sweep = {"lo": -3, "hi": 3, "steps": 13}
        assert cli.main(["sweep", str(problem(tmp_path, [1], [0], [1], sweep=sweep))]) == 0
        table = rows(capsys.readouterr().out)
        assert table[0] == ["E", "q_re", "q_im", "bounded"]
        for e, q_re, q_im, flag in table[1:]:
            assert float(q_re) == pytest.approx(float(e) / 2)
            assert (flag == "true") == (abs(float(e)) <= 2)

    def test_period_two(self, capsys):
        assert cli.main(["sweep", str(SWEEP)]) == 0
        v = json.loads(SWEEP.read_text())["sweep"]["potential"][1]
        for e, q_re, _, _ in rows(capsys.readouterr().out)[1:]:
            e = float(e)
            assert float(q_re) == pytest.approx((e * (e - v) - 2) / 2, abs=1e-12)

    def test_empty_grid(self, tmp_path, capsys):
        path = problem(tmp_path, [1], [0], [1], sweep={"lo": 0, "hi": 1, "steps": 0})
        assert cli.main(["sweep", str(path)]) == 0
        assert capsys.readouterr().out == "E,q_re,q_im,bounded\n"

    def test_missing_block(self, tmp_path):
        assert cli.main(["sweep", str(problem(tmp_path, [1], [0], [1]))]) == 2

    def test_requires_symmetric(self, tmp_path):
        path = problem(tmp_path, [1], [0], [2], sweep={"lo": 0, "hi": 1, "steps": 3})
        assert cli.main(["sweep", str(path)]) == 2


class TestWrappers:
    def test_enumerate(self, capsys):
        assert cli.main(["enumerate", "4", "2"]) == 0
        assert capsys.readouterr().out.split() == ["0101", "1010"]

    def test_enumerate_range(self):
        assert cli.main(["enumerate", "4", "3"]) == 2

    @pytest.mark.parametrize(
        "args, expected",
        [(["U", "0", "0.7,0.2"], 1), (["T", "4", "1"], 1), (["U", "-3", "0.5"], -1), (["T", "3", "-0.5"], 1)],
    )
    def test_chebyshev(self, capsys, args, expected):
        assert cli.main(["chebyshev", *args]) == 0
        rec = json.loads(capsys.readouterr().out)
        assert rec["value"] == pytest.approx([expected, 0], abs=1e-15)

    def test_chebyshev_non_finite(self):
        assert cli.main(["chebyshev", "T", "2", "nan"]) == 2


def test_fmt_normalises_negative_zero():
    assert cli.fmt(-0.0) == "0"
    assert cli.dumps({"x": [1.5, -0.0], "ok": True}) == '{"x": [1.5, 0], "ok": true}'
    assert np.isclose(float(cli.fmt(0.1)), 0.1)
