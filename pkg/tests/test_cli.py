import io
import subprocess
import sys

import pytest

from qlogic import bell, checks
from qlogic.cli import run_command


def run(argv):
    out = io.StringIO()
    code = run_command(argv, out)
    return code, dict(line.split("=", 1) for line in out.getvalue().splitlines())


@pytest.fixture
def context_file(tmp_path):
    p = tmp_path / "c2.ctx"
    p.write_text("space dim=2\nsub A = span((1, 0))\nsub B = span((1, 1))\nset S = r(A) | r(B)\n")
    return p


def test_eval(context_file):
    code, kv = run(["eval", "--context", str(context_file), "--formula", "A | ~A",
                    "--semantics", "quantum"])
    assert code == 0 and kv["result"] == "span((1, 0), (0, 1))"
    code, kv = run(["eval", "--context", str(context_file), "--formula", "~S"])
    assert code == 0 and kv["result"] == "empty"


def test_eval_all_semantics(context_file):
    code, kv = run(["eval", "--context", str(context_file), "--formula", "A -> B",
                    "--semantics", "all"])
    assert code == 0
    assert kv["quantum"].startswith("error")
    assert not kv["weak-heyting"].startswith("error")
    assert not kv["classical"].startswith("error")


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["eval", "--formula", "A"],
    ["eval", "--context", "CTX", "--formula", "A &"],
    ["eval", "--context", "CTX", "--formula", "!A", "--semantics", "quantum"],
    ["eval", "--context", "CTX", "--formula", "Z"],
    ["eval", "--context", "/nonexistent/file", "--formula", "A"],
    ["di", "--lattice", "mo9"],
    ["bell"],
    ["bell", "--angles", "0,x,1,2"],
    ["bell", "--angles", "0,1"],
    ["witness", "--dim", "1"],
    ["axioms", "--dim", "two"],
])
def test_usage_errors_exit_2(argv, context_file):
    argv = [str(context_file) if a == "CTX" else a for a in argv]
    code, kv = run(argv)
    assert code == 2 and "error" in kv


def test_axioms():
    code, kv = run(["axioms", "--dim", "2", "--trials", "30", "--seed", "3"])
    assert code == 0
    assert kv["axioms"] == "4/4 hold trials=30" and kv["bottom_law"] == "hold"


def test_axioms_violation_exit_1(monkeypatch):
    real = checks.check_axioms

    def broken(s1, s2, s3):
        res = real(s1, s2, s3)
        res["transitivity"] = False
        return res

    monkeypatch.setattr(checks, "check_axioms", broken)
    code, kv = run(["axioms", "--dim", "2", "--trials", "3"])
    assert code == 1
    assert kv["axioms"] == "3/4 hold trials=3"
    assert kv["fail.transitivity"] == "3" and "counterexample.S1" in kv


def test_iso():
    code, kv = run(["iso", "--dim", "2", "--trials", "20"])
    assert code == 0 and kv["trials"] == "20"
    assert all(kv[k] == "hold" for k in kv if k != "trials")


def test_di(tmp_path):
    code, kv = run(["di", "--lattice", "mo2", "--tables"])
    assert code == 0
    assert kv["count"] == "16" and kv["elements"] == "6" and kv["boolean"] == "true"
    assert len(kv["rpc[0]"].split(",")) == 16
    p = tmp_path / "n5.lat"
    p.write_text("lattice n=5\nleq 0 1\nleq 1 2\nleq 2 4\nleq 0 3\nleq 3 4\n")
    code, kv = run(["di", "--file", str(p)])
    assert code == 0 and kv["elements"] == "5"
    code, kv = run(["di", "--lattice", "mo3", "--cap", "4"])
    assert code == 2


def test_bell_commands():
    code, kv = run(["bell", "--angles", "0,60,90,30", "--degrees"])
    assert code == 0
    assert (kv["lhs"], kv["rhs"], kv["violated"]) == ("0.2500000", "0.1004809", "true")
    code, kv = run(["bell", "--scan", "8"])
    assert code == 0 and float(kv["margin"]) > 0.2
    code, kv = run(["bell", "--classical-sweep", "50"])
    assert (code, kv["models"], kv["violations"]) == (0, "66", "0")


def test_bell_violation_exit_1(monkeypatch):
    monkeypatch.setattr(bell, "classical_satisfies", lambda m: False)
    code, kv = run(["bell", "--classical-sweep", "1"])
    assert code == 1 and kv["violations"] == "17"


def test_witness():
    code, kv = run(["witness", "--dim", "2"])
    assert code == 0
    assert kv["K1"] == "span((1, 0))" and kv["K2"] == "span((0, 1))" and kv["K3"] == "span((1, 1))"
    assert kv["meet_over_join_lhs"] == "span((1, 0))" and kv["meet_over_join_rhs"] == "zero"
    assert kv["distributive"] == "false"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qlogic.cli", "witness"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "distributive=false" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "qlogic.cli", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2
