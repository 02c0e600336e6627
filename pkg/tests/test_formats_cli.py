import json
import subprocess
import sys

import numpy as np
import pytest

from subdesigns import design as de
from subdesigns import formats as fmt
from subdesigns import strongbridge as sb
from subdesigns import sumrank as sr
from subdesigns.cli import main as cli_main
from subdesigns.errors import FormatError
from subdesigns.gf import make_tower
from subdesigns.repro import pseudoregulus_design


def test_tower_round_trip(tmp_path):
    t = make_tower(3, 2, 2)
    blob = fmt.dumps(fmt.tower_to_json(t))
    again = fmt.tower_from_json(json.loads(blob))
    assert again is t  # cache hit on identical parameters
    assert fmt.dumps(fmt.tower_to_json(again)) == blob  # byte-stable


def test_design_round_trip():
    D = pseudoregulus_design(3, 2, 1, 2)
    blob = fmt.dumps(fmt.design_to_json(D))
    D2 = fmt.design_from_json(json.loads(blob))
    assert D2.members == D.members
    assert fmt.dumps(fmt.design_to_json(D2)) == blob


def test_subspace_rows_must_be_canonical():
    D = pseudoregulus_design(3, 2, 1, 2)
    obj = fmt.design_to_json(D)
    obj["members"][0][0], obj["members"][0][1] = obj["members"][0][1], obj["members"][0][0]
    with pytest.raises(FormatError):
        fmt.design_from_json(obj)


def test_code_round_trip():
    C = sr.code_from_system(pseudoregulus_design(3, 2, 1, 2))
    blob = fmt.dumps(fmt.code_to_json(C))
    C2 = fmt.code_from_json(json.loads(blob))
    assert np.array_equal(C2.generator, C.generator) and C2.lengths == C.lengths
    assert fmt.dumps(fmt.code_to_json(C2)) == blob


def test_strong_design_round_trip():
    S, _ = sb.cameron_liebler("point_pencil", 1, 3, 2)
    blob = fmt.dumps(fmt.strong_design_to_json(S))
    S2 = fmt.strong_design_from_json(json.loads(blob))
    assert [V.basis.tolist() for V in S2.members] == [V.basis.tolist() for V in S.members]
    assert fmt.dumps(fmt.strong_design_to_json(S2)) == blob


def test_histogram_csv():
    assert fmt.histogram_csv({2: 9, 0: 1}) == "weight,count\n0,1\n2,9\n"


# --- CLI ------------------------------------------------------------------------


def run_cli(*argv):
    return cli_main(list(argv))


def test_cli_construct_profile_classify(tmp_path, capsys):
    out = tmp_path / "design.json"
    assert run_cli("construct", "pseudoregulus", "--q", "3", "--m", "2", "--r", "1",
                   "--mus", "1,i+1", "-o", str(out)) == 0
    assert out.exists()
    capsys.readouterr()
    assert run_cli("profile", str(out), "--s", "1") == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["A_min"] == 1 and rep["non_degenerate"]
    assert run_cli("classify", str(out)) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["per_s"]["1"]["is_maximum"]


def test_cli_weights_msrd_cutting_srg_minimal(tmp_path, capsys):
    design = tmp_path / "d.json"
    code = tmp_path / "c.json"
    hist = tmp_path / "hist.csv"
    enum = tmp_path / "enum.csv"
    run_cli("construct", "pseudoregulus", "--q", "3", "--m", "2", "--r", "1",
            "--mus", "1,i+1", "-o", str(design))
    capsys.readouterr()
    assert run_cli("weights", str(design), "--hist-csv", str(hist), "--enumerator-csv", str(enum)) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["histogram"] == {"0": 2, "1": 8}
    assert hist.read_text().startswith("intersection,count")
    assert enum.read_text().splitlines()[0] == "weight,count"
    spectrum = tmp_path / "spec.csv"
    assert run_cli("msrd", str(design), "--emit-code", str(code),
                   "--spectrum-csv", str(spectrum)) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["is_msrd"] and rep["d"] == 3
    assert spectrum.read_text().splitlines()[0] == "weight,count"
    assert run_cli("cutting", str(design)) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["cutting"] is False and rep["witness_rows"]
    assert run_cli("minimal", str(code), "--method", "pairs") == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["minimal"] is False
    dot = tmp_path / "graph.dot"
    assert run_cli("srg", str(design), "--dot", str(dot)) == 0
    rep = json.loads(capsys.readouterr().out)
    assert (rep["v"], rep["K"]) == (81, 64)  # v = 9^2, K = N(q^m - 1) = 8 * 8
    assert dot.read_text().startswith("graph srg {")


def test_cli_dual_and_expander(tmp_path, capsys):
    design = tmp_path / "d.json"
    run_cli("construct", "twisted", "--q", "3", "--m", "3", "--k", "2",
            "--alphas", "1,2", "--eta", "0", "-o", str(design))
    capsys.readouterr()
    dual = tmp_path / "dual.json"
    assert run_cli("dual", "ordinary", str(design), "--s", "1", "--A", "1", "-o", str(dual)) == 0
    capsys.readouterr()
    assert dual.exists()
    assert run_cli("dual", "delsarte", str(design)) == 0
    capsys.readouterr()
    assert run_cli("expander", str(design), "--beta", "default", "--max-dim", "1",
                   "--target", "1/6", "2") == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["verdict"] is True and rep["per_dim"]["1"]["count"] == 364


def test_cli_strong_verbs(tmp_path, capsys):
    strong = tmp_path / "strong.json"
    assert run_cli("strong", "cameron-liebler", "--kind", "point_pencil",
                   "--n", "1", "--k", "3", "--q", "2", "-o", str(strong)) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["predicted"]["A"] == 8
    assert run_cli("strong", "verify", str(strong), "--s", "2") == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["A_min"] == 8


def test_cli_field_partition_and_direct_sum(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "sum.json"
    assert run_cli("construct", "field-partition", "--q", "2", "--m", "2", "--k", "3", "-o", str(a)) == 0
    capsys.readouterr()
    assert run_cli("construct", "direct-sum", str(a), str(a), "-o", str(b)) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["dims"] == [6, 6, 6]


def test_cli_errors_and_exit_codes(tmp_path, capsys):
    # module error -> exit 1 with machine-readable JSON
    assert run_cli("construct", "field-partition", "--q", "2", "--m", "2", "--k", "2") == 1
    err = json.loads(capsys.readouterr().out)
    assert err["error"] == "GcdViolation"
    # usage error -> argparse exits 2
    with pytest.raises(SystemExit) as exc:
        run_cli("no-such-verb")
    assert exc.value.code == 2
    # malformed file -> FormatError JSON
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert run_cli("classify", str(bad)) == 1
    err = json.loads(capsys.readouterr().out)
    assert err["error"] == "FormatError"


def test_cli_cap_and_threads(tmp_path, capsys):
    design = tmp_path / "d.json"
    run_cli("construct", "pseudoregulus", "--q", "3", "--m", "2", "--r", "1",
            "--mus", "1,i+1", "-o", str(design))
    capsys.readouterr()
    # a tiny cap trips EnumerationCapExceeded through the error path
    assert run_cli("--cap", "3", "profile", str(design), "--s", "1") == 1
    err = json.loads(capsys.readouterr().out)
    assert err["error"] == "EnumerationCapExceeded"
    # thread count does not change the report
    assert run_cli("--threads", "2", "weights", str(design)) == 0
    rep2 = json.loads(capsys.readouterr().out)
    assert run_cli("weights", str(design)) == 0
    rep1 = json.loads(capsys.readouterr().out)
    assert rep1 == rep2


def test_cli_minimal_accepts_design_json(tmp_path, capsys):
    design = tmp_path / "d.json"
    run_cli("construct", "field-partition", "--q", "2", "--m", "2", "--k", "3", "-o", str(design))
    capsys.readouterr()
    assert run_cli("minimal", str(design)) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["minimal"] is True


def test_cli_repro_single_criterion(capsys):
    assert run_cli("repro", "paper-examples", "--only", "7,8") == 0
    out = capsys.readouterr().out
    assert "[PASS] criterion 7" in out and "[PASS] criterion 8" in out


def test_cli_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "subdesigns.cli", "repro", "paper-examples", "--only", "9"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert "[PASS] criterion 9" in proc.stdout
