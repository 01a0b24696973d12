import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path


from quatunit import cli
from quatunit.errors import PrecisionFailure
from quatunit.literals import parse_instance
from quatunit.solver import reduction_bound

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def run_json(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if code == 0 and out.out else None), out.err


def test_solve_catalan(capsys):
    code, rep, err = run_json(capsys, "solve", "--input", str(INSTANCES / "catalan.json"), "--oracle-len", "12")
    assert code == 0 and "2 solution(s)" in err
    assert [s["f_value"][0] for s in rep["solutions"]] == ["3", "9"]
    assert rep["completeness_status"] == "ORACLE_WINDOW_ONLY"
    assert rep["config"] == {
        "subcommand": "solve",
        "input_path": str(INSTANCES / "catalan.json"),
        "oracle_len": 12,
        "precision_bits": 128,
        "element_cap": 10**7,
        "bound_sq": None,
        "n_max": None,
    }


def test_certificate_constant_parses_back(capsys):
    path = INSTANCES / "catalan.json"
    _, rep, _ = run_json(capsys, "bound", "--input", str(path), "--quiet")
    cert = reduction_bound(parse_instance(json.loads(path.read_text())))
    assert Fraction(rep["reduction"]["baker"]["C"]) == cert.baker.C
    assert rep["reduction"]["certified_H_cap"] == cert.H_cap


def test_invalid_input_exit_code(capsys):
    code, _, err = run_json(capsys, "solve", "--input", str(INSTANCES / "bad.json"))
    assert code == 1
    assert "gamma1.generators[0]" in err
    code, _, _ = run_json(capsys, "solve", "--input", str(INSTANCES / "missing.json"))
    assert code == 1
    code, _, _ = run_json(capsys, "solve")
    assert code == 1


def test_resource_limit_exit_code(capsys):
    code, _, err = run_json(capsys, "enumerate", "--input", str(INSTANCES / "pair_gen.json"), "--oracle-len", "6", "--element-cap", "3")
    assert code == 2 and "resource limit" in err


def test_precision_failure_exit_code(capsys, monkeypatch):
    def boom(cfg):
        raise PrecisionFailure("ran out of bits")

    monkeypatch.setitem(cli._DISPATCH, "bound", boom)
    code, _, err = run_json(capsys, "bound", "--input", str(INSTANCES / "catalan.json"))
    assert code == 3 and "precision failure" in err


def test_threads_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("QUATUNIT_THREADS", "2")
    assert cli._threads(None) == 2
    assert cli._threads(4) == 4
    monkeypatch.setenv("QUATUNIT_THREADS", "many")
    code, _, _ = run_json(capsys, "solve", "--input", str(INSTANCES / "catalan.json"))
    assert code == 1
    monkeypatch.delenv("QUATUNIT_THREADS")
    code, _, _ = run_json(capsys, "solve", "--input", str(INSTANCES / "catalan.json"), "--threads", "0")
    assert code == 1


def test_reports_identical_across_threads(tmp_path):
    texts = []
    for threads in (1, 3):
        out = tmp_path / f"r{threads}.json"
        code = cli.run(["solve", "--input", str(INSTANCES / "quaternion.json"), "--oracle-len", "5", "--threads", str(threads), "--output", str(out), "--quiet"])
        assert code == 0
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]


def test_enumerate_by_norm(capsys):
    code, rep, _ = run_json(capsys, "enumerate", "--input", str(INSTANCES / "pair_gen.json"), "--bound-sq", "4")
    assert code == 0
    # 1+i, 1+j and the four products of two generators
    assert len(rep["elements"]) == 6
    assert {e["norm"] for e in rep["elements"]} == {"2", "4"}


def test_locus_and_oracle(capsys):
    code, rep, _ = run_json(capsys, "locus", "--input", str(INSTANCES / "locus_re1.json"), "--oracle-len", "5")
    assert code == 0
    assert [s["f_value"] for s in rep["solutions"]] == [["1", "1", "0", "0"]]
    code, rep, _ = run_json(capsys, "oracle", "--input", str(INSTANCES / "catalan.json"), "--oracle-len", "6")
    assert code == 0 and len(rep["solutions"]) == 2 and rep["certificate"] is None


def test_dynamics_ops(capsys):
    code, rep, _ = run_json(capsys, "dynamics", "--input", str(INSTANCES / "identity.json"))
    assert code == 0 and rep["all_hold"] and rep["checks"] == 1000
    code, rep, _ = run_json(capsys, "dynamics", "--input", str(INSTANCES / "bridge.json"), "--oracle-len", "4")
    assert code == 0 and rep["verdict"] == "UNIT_EQUATION"
    assert rep["u"] != [0, 0]


def test_unknown_dynamics_op(capsys, tmp_path):
    p = tmp_path / "x.json"
    p.write_text('{"op": "teleport"}')
    code, _, err = run_json(capsys, "dynamics", "--input", str(p))
    assert code == 1 and "op" in err


def test_matrix_demo(capsys):
    code, rep, _ = run_json(capsys, "matrix-demo", "--n-max", "3")
    assert code == 0 and rep["all_verified"] and len(rep["pairs"]) == 3
    assert rep["pairs"][2]["g"] == [["1", "6"], ["0", "1"]]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quatunit", "matrix-demo", "--n-max", "2", "--quiet"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["all_verified"]
    assert proc.stderr == ""
