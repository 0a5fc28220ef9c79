from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ospinv.cli import main
from ospinv.suites import CATALOGUE, SUITES, run_suite


def run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_omega_rank_one(capsys):
    code, out, _ = run(["omega", "--m", "1", "--n", "0"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["degree"] == 1 and doc["text"] == "x1_1"
    code, out, _ = run(["omega", "--m", "1", "--n", "1", "--format", "text"], capsys)
    assert "x1_1^3 - 3*x1_1*θ1_1*θ2_1" in out


@pytest.mark.parametrize("args", [
    ["omega", "--m", "0", "--n", "1"],
    ["omega", "--m", "3", "--n", "3"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "invariance", "--m", "-1"],
    ["tensor", "--m", "1", "--n", "1", "--power", "12"],
    ["decompose", "--m", "1", "--n", "1"],
])
def test_usage_errors_exit_2(args, capsys):
    code, _, err = run(args, capsys)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_tensor(capsys):
    code, out, _ = run(["verify", "--suite", "tensor", "--m", "1", "--n", "1", "--power", "3"],
                       capsys)
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    vals = {c["name"]: c["values"] for c in doc["checks"] if "values" in c}
    assert vals["tensor-invariant"]["brute"] == 0 and vals["tensor-pseudo"]["brute"] == 1


def test_tensor_command_reports_bases(capsys):
    code, out, _ = run(["tensor", "--m", "1", "--n", "1", "--power", "2"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert (doc["extra"]["dim_inv"], doc["extra"]["dim_pseudo"]) == (1, 0)


def test_decompose_rows(capsys):
    code, out, _ = run(["decompose", "--m", "1", "--n", "1", "--bign", "2", "--degree", "3"],
                       capsys)
    rows = {r["d"]: r for r in json.loads(out)["extra"]["degrees"]}
    assert code == 0
    assert rows[1]["even_hook"] == [] and rows[1]["brute_inv"] == 0
    assert rows[2]["even_hook"] == [[2]] and rows[2]["brute_inv"] == rows[2]["formula_inv"] == 3
    assert rows[3]["pseudo_admissible"] == [[3]] and rows[3]["brute_pseudo"] == 4


def test_identities_suite(capsys):
    code, out, _ = run(["verify", "--suite", "identities", "--m", "1", "--n", "1", "--bign", "3"],
                       capsys)
    assert code == 0 and json.loads(out)["summary"]["fail"] == 0


def test_failure_exit_code(monkeypatch, capsys):
    import ospinv.suites as suites
    from ospinv.report import check
    monkeypatch.setitem(suites.RUNNERS, "pseudo",
                        lambda **_: ([check("reflection", {}, False, "forced")], {}))
    code, out, _ = run(["verify", "--suite", "pseudo"], capsys)
    assert code == 1 and json.loads(out)["summary"]["fail"] == 1


def test_reports_identical_across_worker_counts(tmp_path):
    outs = []
    for threads in ("1", "3"):
        path = tmp_path / f"r{threads}.json"
        assert main(["verify", "--suite", "decomposition", "--m", "1", "--n", "1", "--bign", "2",
                     "--degree", "4", "--threads", threads, "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_threads_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("OSPINV_THREADS", "2")
    path = tmp_path / "r.json"
    assert main(["verify", "--suite", "identities", "--bign", "2", "--out", str(path)]) == 0
    monkeypatch.setenv("OSPINV_THREADS", "1")
    again = tmp_path / "s.json"
    assert main(["verify", "--suite", "identities", "--bign", "2", "--out", str(again)]) == 0
    assert path.read_bytes() == again.read_bytes()


def test_every_check_name_is_catalogued():
    for name in SUITES:
        params = {"bign": 1} if name in ("identities", "structure") else {}
        if name == "tensor":
            params = {"power": 2}
        if name in ("decomposition", "generation"):
            params = {"bign": 1, "degree": 3}
        rep = run_suite(name, **params)
        assert rep.ok, name
        assert {c.name for c in rep.checks} <= set(CATALOGUE), name


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ospinv", "omega", "--m", "1", "--n", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["term_count"] == 2
