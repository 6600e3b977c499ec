import io
import json
import subprocess
import sys

import pytest

from zernsym.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_convert_j():
    assert run("convert", "--j", "46") == (0, "j=46 n=9 m=-1 k=4 ansi=49 r=1\n")


def test_convert_nm():
    code, out = run("convert", "--nm", "0,0")
    assert code == 0 and out.startswith("j=1 ")


def test_convert_ansi_scheme():
    assert run("convert", "--j", "13", "--scheme", "ansi") == (0, "j=13 n=4 m=2 k=1 ansi=13 r=3\n")


@pytest.mark.parametrize("nm, reason", [("3,2", "parity"), ("2,-4", "bound"), ("-1,1", "negative")])
def test_convert_invalid(nm, reason, capsys):
    code, out = run("convert", f"--nm={nm}")
    assert code == 1 and out == ""
    assert reason in capsys.readouterr().err


def test_convert_needs_exactly_one():
    assert run("convert")[0] == 1
    assert run("convert", "--j", "2", "--nm", "1,1")[0] == 1


def test_expr():
    assert run("expr", "--j", "11", "--normalized") == (0, "\\sqrt{5}(6\\rho^{4} -6\\rho^{2} +1 )\n")
    assert run("expr", "--j", "1", "--format", "plain") == (0, "1\n")
    code, out = run("expr", "--j", "12", "--format", "json")
    record = json.loads(out)
    assert code == 0
    assert record["coeffs"] == [4, -3] and record["powers"] == [4, 2]
    assert record["angular_kind"] == "cosine" and record["angular_frequency"] == 2


def test_expr_invalid_j():
    assert run("expr", "--j", "0")[0] == 1


def test_table_file(tmp_path):
    path = tmp_path / "z.tex"
    code, out = run("table", "--jmin", "5", "--jmax", "5", "--out", str(path))
    assert code == 0 and out.startswith("rows=1")
    text = path.read_text()
    assert "\\documentclass" not in text and " $5$" in text


def test_table_bad_range():
    assert run("table", "--jmin", "9", "--jmax", "3")[0] == 1


def test_table_io_error(tmp_path):
    code, _ = run("table", "--jmin", "1", "--jmax", "2", "--out", str(tmp_path / "missing" / "z.tex"))
    assert code == 2


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("--j", "1", "--rho", "0.3", "--theta", "1.0"), 1.0),
        (("--j", "2", "--rho", "0.5", "--theta", "0", "--unnormalized"), 0.5),
        (("--j", "4", "--rho", "1", "--theta", "0"), 3**0.5),
    ],
)
def test_eval(argv, expected):
    code, out = run("eval", *argv)
    assert code == 0
    assert float(out) == pytest.approx(expected, rel=1e-15)
    assert float(out) == float(repr(float(out)))


def test_eval_domain():
    assert run("eval", "--j", "4", "--rho", "1.2", "--theta", "0")[0] == 1


def test_check():
    code, out = run("check", "--jmax", "36", "--tol", "1e-8")
    assert code == 0 and "PASS" in out
    code, out = run("check", "--jmax", "1")
    dev = float(out.split("max_deviation=")[1].split()[0])
    assert code == 0 and dev <= 1e-12
    code, out = run("check", "--jmax", "10", "--angular-nodes", "4")
    assert code == 1 and "FAIL" in out


def test_unknown_command():
    assert run("bogus")[0] == 1


def test_deterministic_output():
    assert run("table", "--jmin", "1", "--jmax", "50") == run("table", "--jmin", "1", "--jmax", "50")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zernsym", "convert", "--j", "465"], capture_output=True, text=True, check=True
    )
    assert proc.stdout == "j=465 n=29 m=29 k=0 ansi=464 r=30\n"
