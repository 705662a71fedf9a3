import json
import subprocess
import sys

import pytest

from khcube.cli import RunConfig, main, parse_coefficients, run

from conftest import TREFOIL


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_homology_rows(capsys):
    code, out, _ = _run(capsys, "--pd", TREFOIL, "--coeff", "Z,F2,Fp:3", "--task", "homology,jones")
    assert code == 0
    data = json.loads(out)
    rows = {(r["i"], r["j"]): (r["rank"], r["torsion"]) for r in data["homology"]["Z"]}
    assert rows == {(-3, -9): (1, []), (-2, -7): (0, [2]), (-2, -5): (1, []), (0, -3): (1, []), (0, -1): (1, [])}
    assert sum(r["dim"] for r in data["homology"]["F2"]) == 6
    assert sum(r["dim"] for r in data["homology"]["Fp:3"]) == 4
    assert data["jones"] == [[-9, -1], [-5, 1], [-3, 1], [-1, 1]]
    assert data["input"]["n_minus"] == 3


def test_braid_input_and_reduced(capsys):
    code, out, _ = _run(capsys, "--braid", "1 1 1", "--reduced", "--basepoint", "1")
    assert code == 0
    rows = json.loads(out)["homology"]["Z"]
    assert [(r["i"], r["j"], r["rank"]) for r in rows] == [(-3, -8, 1), (-2, -6, 1), (0, -2, 1)]


def test_verify_exit_zero(capsys, tmp_path):
    path = tmp_path / "trefoil.pd"
    path.write_text(TREFOIL)
    code, out, _ = _run(capsys, "--pd", str(path), "--task", "verify", "--seed", "1")
    assert code == 0
    checks = {c["name"]: c["ok"] for c in json.loads(out)["verify"]["checks"]}
    assert all(checks.values())
    assert {"d_squared_zero", "euler_equals_oracle", "coherence", "moduli"} <= set(checks)


def test_bad_pd_exits_two(capsys):
    code, _, err = _run(capsys, "--pd", "X[1,2,2,1] X[3,4,4,5]")
    assert code == 2
    assert err.startswith("kh: InconsistentArcs")
    code, _, err = _run(capsys, "--pd", "/no/such/file.pd")
    assert code == 2


def test_argument_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--braid", "1 1 1", "--reduced"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["--braid", "1", "--task", "dance"])
    with pytest.raises(ValueError):
        parse_coefficients("Fp:4")
    assert parse_coefficients("Z, F2 ,Fp:7") == (0, 2, 7)
    with pytest.raises(ValueError):
        RunConfig(pd=TREFOIL, braid="1")


def test_bockstein_task():
    status, result = run(RunConfig(pd=TREFOIL, tasks=("bockstein",)))
    assert status == 0
    sq = result["sq1"]
    assert sq["squares_to_zero"]
    (block,) = [b for b in sq["maps"] if b["rank"]]
    assert (block["source"], block["target"]) == ([-3, -7], [-2, -7])


def test_flowcat_export(tmp_path, capsys):
    out = tmp_path / "fc.json"
    code, stdout, _ = _run(capsys, "--pd", TREFOIL, "--task", "flowcat", "--out", str(out))
    assert code == 0 and stdout == ""
    data = json.loads(out.read_text())["flowcat"]
    assert data["metadata"]["homological_shift"] == -3
    # one object per labeling: 2^3 + 3 * 2^2 + 3 * 2^1 + 2^2
    assert len(data["objects"]) == 30


def test_output_is_deterministic(tmp_path):
    outs = []
    for n in range(2):
        path = tmp_path / f"out{n}.json"
        subprocess.run([sys.executable, "-m", "khcube", "--braid", "1 -2 1 -2", "--task",
                        "homology,jones,verify,flowcat", "--coeff", "Z,F2", "--seed", "3",
                        "--out", str(path)], check=True)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
