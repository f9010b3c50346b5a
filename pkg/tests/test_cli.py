import json

import pytest

from ellalg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_curve_info(capsys):
    code, out = run_cli(capsys, "--fixture", "fp-mu3", "curve", "info")
    assert code == 0
    data = json.loads(out)
    assert data["ample_degree"] == 3
    assert data["alpha_order"] == 1657


def test_rr_basis(capsys):
    code, out = run_cli(capsys, "--fixture", "fp-mu3", "rr", "basis", "--divisor", "3*Oinf")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 3


def test_tcr_dim_and_mult(capsys):
    code, out = run_cli(capsys, "--fixture", "fp-mu3", "tcr", "dim", "--n", "2")
    assert code == 0 and json.loads(out)["dim"] == 6
    code, out = run_cli(capsys, "--fixture", "fp-mu3", "tcr", "mult", "--a", "1", "--b", "1")
    assert code == 0 and json.loads(out)["fills_target"]


def test_layering_round_trip(capsys):
    code, out = run_cli(
        capsys, "--fixture", "fp-mu3", "layering", "standard",
        "--kind", "M", "--k", "2", "--divisor", "p",
    )
    assert code == 0
    layers = json.loads(out)["layers"]
    assert len(layers) == 2
    code, out = run_cli(
        capsys, "--fixture", "fp-mu3", "layering", "apply",
        "--divisor", "p", "--layering", "p@0",
    )
    assert code == 0
    assert len(json.loads(out)["result"]) == 1  # doubled multiplicity, one layer


def test_hilbert_table(capsys):
    code, out = run_cli(
        capsys, "--fixture", "fp-mu3", "hilbert", "ideal",
        "--layering", "p@0 + p@-1 ; p@-1", "--upto", "4",
    )
    assert code == 0
    table = json.loads(out)["table"]
    assert table[2]["ideal"] == 7  # depth-2 family in degree 2


def test_blowup_series(capsys):
    code, out = run_cli(
        capsys, "--fixture", "fp-mu3", "blowup", "series", "--divisor", "p", "--upto", "5"
    )
    assert code == 0
    data = json.loads(out)
    assert data["dims"] == [1, 3, 7, 13, 21, 31]
    assert data["matches_with_t_shift"] and not data["matches_without_t_shift"]


def test_blowup_mult_exit_status(capsys):
    code, out = run_cli(
        capsys, "--fixture", "fp-mu3", "blowup", "mult", "--divisor", "p",
        "--k", "1", "--l", "1", "--m", "1", "--n", "1",
    )
    assert code == 0 and json.loads(out)["ok"]


def test_parse_error_exit(capsys):
    code, _ = run_cli(capsys, "--fixture", "fp-mu3", "rr", "basis", "--divisor", "nosuch")
    assert code == 2


def test_report_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out = run_cli(
        capsys, "--fixture", "fp-mu3", "--report", str(path),
        "blowup", "series", "--divisor", "p", "--upto", "3",
    )
    assert code == 0
    data = json.loads(path.read_text())
    assert data["dims"] == [1, 3, 7, 13]


def test_report_determinism(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    for p in (p1, p2):
        run_cli(
            capsys, "--fixture", "fp-mu3", "--report", str(p),
            "hilbert", "ideal", "--layering", "p@0", "--upto", "6",
        )
    assert p1.read_bytes() == p2.read_bytes()


def test_custom_config(tmp_path, capsys):
    cfg = {
        "name": "custom",
        "field": "Fp:10007",
        "curve": {"a1": 0, "a2": 0, "a3": 1, "a4": -1, "a6": 0},
        "alpha": [0, 0],
        "points": {"p": -20},
        "ample": "3*Oinf",
        "grid_size": 30,
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    code, out = run_cli(capsys, "--config", str(path), "tcr", "dim", "--n", "1")
    assert code == 0 and json.loads(out)["dim"] == 3
