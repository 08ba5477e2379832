import json

import pytest

from isscodes.alist import from_alist, to_alist
from isscodes.cli import main
from isscodes.gf2 import BitMatrix


SPC2D = {"m": 4, "x": [[0, 1], [2, 3]], "z": [[0, 2], [1, 3]]}


@pytest.fixture
def spec_file(tmp_path):
    p = tmp_path / "code.json"
    p.write_text(json.dumps(SPC2D))
    return str(p)


def test_alist_round_trip():
    import random
    rng = random.Random(7)
    for _ in range(20):
        r, c = rng.randrange(1, 6), rng.randrange(1, 9)
        m = BitMatrix.from_bits(r, c, [rng.getrandbits(c) for _ in range(r)])
        assert from_alist(to_alist(m)) == m


def test_construct_outputs(tmp_path, spec_file):
    out = tmp_path / "out"
    assert main(["construct", "--spec", spec_file, "--out", str(out)]) == 0
    for name in ("hx.alist", "hz.alist", "hx.txt", "hz.txt",
                 "schedule.json", "circuit.txt", "params.json"):
        assert (out / name).exists()
    params = json.loads((out / "params.json").read_text())
    assert params["n"] == 16 and params["k"] == 2
    hx = from_alist((out / "hx.alist").read_text())
    assert hx == BitMatrix.from_text((out / "hx.txt").read_text())
    sched = json.loads((out / "schedule.json").read_text())
    assert len(sched["layers"]) == 4
    circuit = (out / "circuit.txt").read_text()
    assert "PREP+" in circuit and "CNOT" in circuit and "LAYER 3" in circuit


def test_verify_exit_codes(spec_file, capsys):
    assert main(["verify", "--spec", spec_file]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True
    assert report["distances"]["formula"] == {"d_x": 4, "d_z": 4}


def test_distance_methods(spec_file, capsys):
    assert main(["distance", "--spec", spec_file, "--method", "both"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["formula"] == {"d_x": 4, "d_z": 4}
    assert out["oracle"] == {"d_x": 4, "d_z": 4}


def test_distance_refusal(tmp_path, capsys):
    p = tmp_path / "big.json"
    p.write_text(json.dumps(
        {"m": 9, "x": [[0, 1, 2], [3, 4, 5], [6, 7, 8]],
         "z": [[0, 3, 6], [1, 4, 7], [2, 5, 8]]}))
    assert main(["distance", "--spec", str(p), "--method", "oracle"]) == 0
    assert json.loads(capsys.readouterr().out)["oracle"] == "refused"


def test_distance_formula_rejects_general_components(tmp_path, capsys):
    p = tmp_path / "gen.json"
    p.write_text(json.dumps(
        {"m": 2, "components": [
            {"hx": [[1, 1, 0], [0, 1, 1]], "hz": [[1, 1, 1]]},
            {"hx": [[1, 1]], "hz": [[1, 1]]}],
         "x": [[0, 1]], "z": [[0], [0, 1]]}))
    assert main(["distance", "--spec", str(p), "--method", "formula"]) == 2


def test_catalog_subcommands(capsys):
    assert main(["catalog", "list"]) == 0
    assert "spc2d" in capsys.readouterr().out
    assert main(["catalog", "show", "spc2d"]) == 0
    shown = json.loads(capsys.readouterr().out)
    assert shown["claimed"]["n"] == 16
    assert main(["catalog", "verify", "spc2d"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert reports[0]["passed"] is True
    assert main(["catalog", "verify"]) == 2


def test_grm_subcommand(capsys):
    assert main(["grm", "--m", "3", "--gens", "[[1,1,0]]",
                 "--direction", "dec", "--nested", "[[1,1,0],[0,1,1]]"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dimension"] == 4
    assert out["nested_distance"] == 2
    # nested must contain gens
    assert main(["grm", "--m", "2", "--gens", "[[1,1]]",
                 "--direction", "dec", "--nested", "[[1,0]]"]) == 2
