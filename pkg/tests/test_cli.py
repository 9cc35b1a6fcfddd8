from __future__ import annotations

import subprocess
import sys

import pytest

from cluster_editing.cli import main
from cluster_editing.generators import gen_named
from cluster_editing.io import serialize_instance


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name, code, word", [("c4", 0, "YES"), ("k23", 1, "NO")])
def test_solve_and_oracle(tmp_instance, capsys, name, code, word):
    path = tmp_instance(serialize_instance(gen_named(name)))
    assert run(capsys, "solve", str(path))[:2] == (code, word + "\n")
    assert run(capsys, "oracle", str(path))[:2] == (code, word + "\n")


def test_certificate_then_verify(tmp_instance, capsys):
    path = tmp_instance(serialize_instance(gen_named("cube")))
    code, out, _ = run(capsys, "solve", "--certificate", str(path))
    assert code == 0 and out.startswith("YES\n")
    cert = tmp_instance(out.split("\n", 1)[1], "cert.txt")
    assert run(capsys, "verify", str(path), str(cert))[:2] == (0, "OK\n")


def test_verify_reports_failure(tmp_instance, capsys):
    path = tmp_instance(serialize_instance(gen_named("p4")))
    cert = tmp_instance("d 1 2\nd 2 3\n", "cert.txt")
    code, out, _ = run(capsys, "verify", str(path), str(cert))
    assert code == 1 and "matching" in out


def test_decision_only_suppresses_certificate(tmp_instance, capsys):
    path = tmp_instance(serialize_instance(gen_named("c4")))
    assert run(capsys, "solve", "--certificate", "--decision-only", str(path))[1] == "YES\n"


def test_trace_goes_to_stderr(tmp_instance, capsys):
    path = tmp_instance(serialize_instance(gen_named("h-graph")))
    code, out, err = run(capsys, "solve", "--trace", str(path))
    assert out == "YES\n" and "NormalizeEdgeCut" in err


def test_input_error_exit_code(tmp_instance, capsys):
    path = tmp_instance("p cep11 2 1\ne 1 1\n")
    code, _, err = run(capsys, "solve", str(path))
    assert code == 2 and "self-loop" in err
    assert run(capsys, "solve", str(path) + ".missing")[0] == 2


def test_oracle_size_guard(tmp_instance, capsys):
    path = tmp_instance("p cep11 15 0\n")
    assert run(capsys, "oracle", str(path))[0] == 2


def test_gen_kinds(capsys):
    code, out, _ = run(capsys, "gen", "--kind", "named", "--name", "petersen")
    assert code == 0 and "p cep11 10 15" in out
    assert run(capsys, "gen", "--kind", "planted", "--n", "20", "--seed", "3")[1].startswith("p cep11 20")
    assert "p cep11 6 0" in run(capsys, "gen", "--kind", "random", "--n", "6", "--p", "0")[1]
    assert run(capsys, "gen", "--kind", "named")[0] == 2
    assert run(capsys, "gen", "--kind", "named", "--name", "nope")[0] == 2


def test_xcheck(capsys):
    code, out, _ = run(capsys, "xcheck", "--n-max", "8", "--samples", "60", "--seed", "1")
    assert code == 0 and "disagree=0" in out
    assert run(capsys, "xcheck", "--n-max", "20")[0] == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(serialize_instance(gen_named("k14")))
    proc = subprocess.run(
        [sys.executable, "-m", "cluster_editing", "solve", str(path)], capture_output=True, text=True
    )
    assert proc.returncode == 1 and proc.stdout == "NO\n"


def test_invariant_failure_exit_code(tmp_instance, capsys, monkeypatch):
    from cluster_editing import pipeline

    monkeypatch.setattr(pipeline, "step_cap", lambda n: 0)
    path = tmp_instance(serialize_instance(gen_named("h-graph")))
    code, _, err = run(capsys, "solve", str(path))
    assert code == 3 and "step cap" in err
