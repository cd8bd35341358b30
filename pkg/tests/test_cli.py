import json
import shutil
import subprocess
import sys

import pytest

from associahedra.ainfinity import ground_field, random_ainf
from associahedra.chains import Chain, TensorChain
from associahedra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out.strip() else None, err


# ---------------------------------------------------------------- examples

def test_cells_k4(capsys):
    code, data, _ = run_json(capsys, "cells", "--complex", "K", "--n", "4")
    assert code == 0 and data["count"] == 11
    dims = sorted(c["dim"] for c in data["cells"])
    assert dims.count(0) == 5 and dims.count(1) == 5 and dims.count(2) == 1


def test_cells_text(capsys):
    code, out, _ = run(capsys, "cells", "--complex", "W", "--n", "3", "--dim", "0")
    assert code == 0
    assert out.strip().splitlines()[-1] == "3 cells"


def test_boundary(capsys):
    code, data, _ = run_json(capsys, "boundary", "--complex", "K", "--cell", "(***)")
    assert code == 0
    assert Chain.from_dict(data["boundary"]).to_dict() == data["boundary"]
    assert {t["tree"] for t in data["boundary"]["terms"]} == {"((**)*)", "(*(**))"}


def test_boundary_w(capsys):
    code, data, _ = run_json(capsys, "boundary", "--complex", "W", "--cell", "((**)*)")
    assert code == 0
    terms = {(t["tree"], tuple(t["nonmetric"])): t["coeff"] for t in data["boundary"]["terms"]}
    assert terms == {("(***)", ()): -1, ("((**)*)", (1,)): 1}


def test_compose(capsys):
    code, data, _ = run_json(capsys, "compose", "--complex", "K", "--left", "(**)", "--i", "1", "--right", "(**)")
    assert code == 0 and data["result"]["terms"] == [{"coeff": -1, "tree": "((**)*)"}]


def test_q_and_p(capsys):
    code, data, _ = run_json(capsys, "q", "--n", "3")
    assert code == 0 and len(data["q"]["terms"]) == 2
    code, data, _ = run_json(capsys, "q", "--cell", "((**)*)")
    assert code == 0 and data["q"]["terms"][0]["nonmetric"] == [1]
    code, data, _ = run_json(capsys, "p", "--cell", "(*(**))")
    assert code == 0 and data["p"]["terms"] == [{"coeff": 1, "tree": "(***)"}]


def test_diagonal_c3(capsys):
    code, out, _ = run(capsys, "diagonal", "--n", "3", "--method", "composite")
    assert code == 0
    assert len(out.strip().splitlines()) == 2
    code, out, _ = run(capsys, "diagonal", "--n", "3", "--shorthand")
    assert out.strip().splitlines() == ["+1  ((**)*) ⊗ (***)", "+1  (***) ⊗ (*(**))"]


def test_diagonal_methods_agree(capsys):
    _, a, _ = run_json(capsys, "diagonal", "--n", "5", "--method", "composite")
    _, b, _ = run_json(capsys, "diagonal", "--n", "5", "--method", "direct")
    assert a["diagonal"] == b["diagonal"]
    assert TensorChain.from_dict(a["diagonal"]).to_dict() == a["diagonal"]


def test_defects(capsys):
    code, data, _ = run_json(capsys, "defect", "--n", "3")
    assert code == 0 and data["is_cycle"] and len(data["boundary_of"]["terms"]) >= 1
    code, data, _ = run_json(capsys, "defect", "--n", "4", "--triple")
    assert code == 0 and data["kind"] == "coassociativity"
    assert len(data["boundary_of"]["terms"]) == 1
    code, out, _ = run(capsys, "defect", "--n", "5", "--triple")
    assert code == 0 and "not a cycle" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "boundary", "--max-n", "6")
    assert code == 0 and out.strip().endswith("all checks passed")
    code, data, _ = run_json(capsys, "verify", "--suite", "p-table")
    assert code == 0 and data["ok"]


def test_coassoc_search(capsys):
    code, data, _ = run_json(capsys, "coassoc-search")
    assert code == 0 and data["nonexistence"]
    assert [b["certified"] for b in data["branches"]] == [True, True]


def _write(tmp_path, name, alg):
    path = tmp_path / name
    path.write_text(alg.to_json())
    return str(path)


def test_tensor(tmp_path, capsys):
    a = _write(tmp_path, "a.json", random_ainf(1, dim=2, cap=4))
    b = _write(tmp_path, "b.json", ground_field(cap=4))
    code, data, _ = run_json(capsys, "tensor", "--a", a, "--b", b, "--max-arity", "4", "--check")
    assert code == 0
    assert data["check"]["product"]["ok"]
    assert len(data["product"]["basis"]) == 2


# ---------------------------------------------------------------- errors

@pytest.mark.parametrize("argv", [
    ["boundary", "--complex", "K", "--cell", "((*)*)"],
    ["cells", "--complex", "K", "--n", "0"],
    ["diagonal", "--n", "1"],
    ["compose", "--complex", "K", "--left", "(**)", "--i", "3", "--right", "(**)"],
    ["verify", "--suite", "nonsense"],
    ["coassoc-search", "--modulus", "1"],
    ["q", "--n", "3", "--cell", "(**)"],
    ["cells", "--complex", "X", "--n", "3"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_tensor_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    good = _write(tmp_path, "g.json", ground_field(cap=3))
    assert run(capsys, "tensor", "--a", str(bad), "--b", good, "--max-arity", "3")[0] == 2
    assert run(capsys, "tensor", "--a", good, "--b", good, "--max-arity", "5")[0] == 2
    assert run(capsys, "tensor", "--a", str(tmp_path / "missing.json"), "--b", good, "--max-arity", "3")[0] == 2


# ---------------------------------------------------------------- output stability

def test_json_is_byte_stable(capsys):
    argv = ["diagonal", "--n", "4", "--format", "json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    assert json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n" == first


def test_console_script():
    exe = shutil.which("associahedra")
    cmd = [exe] if exe else [sys.executable, "-m", "associahedra.cli"]
    proc = subprocess.run(cmd + ["cells", "--complex", "K", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[-1] == "3 cells"
