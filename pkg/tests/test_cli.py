import csv
import io
import json

import pytest

from loclib.cli import main
from loclib.io import load_code, load_code_file


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_bounds(capsys):
    rc, out, _ = run(capsys, "bounds", "16", "10", "5")
    assert rc == 0
    rep = json.loads(out.strip().splitlines()[-1])
    assert rep["r_lb"] == 4
    assert rep["rbar_lb_general"]["decimal"] == 3.5
    assert rep["rbar_lb_tight"] == {"num": 31, "den": 8, "decimal": 3.875}
    assert rep["theta_star"] == 3
    assert "31/8 (3.875)" in out


def test_bounds_844(capsys):
    rc, out, _ = run(capsys, "bounds", "8", "4", "4", "--json-only")
    assert rc == 0 and json.loads(out)["rbar_lb_tight"]["decimal"] == 2.25


def test_bounds_bad_params(capsys):
    rc, _, err = run(capsys, "bounds", "4", "4", "1")
    assert rc == 2 and "k < n" in err


def test_construct_roundtrip(capsys, tmp_path):
    path = tmp_path / "c.json"
    rc, out, _ = run(capsys, "construct", "3", "8", "4", "4", "--seed", "1", "--out", str(path))
    assert rc == 0 and "9/4" in out
    code = load_code(path)
    assert code.meta["seed"] == 1
    # write -> read -> write is byte identical
    from loclib.io import dump_code
    again = tmp_path / "again.json"
    dump_code(code, again, load_code_file(path).tanner)
    assert again.read_text() == path.read_text()
    rc, out, _ = run(capsys, "verify", str(path))
    assert rc == 0 and "FAIL" not in out


def test_construct_seed_from_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("LOCLIB_SEED", "1")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "construct", "3", "8", "4", "4", "--out", str(a))[0] == 0
    assert run(capsys, "construct", "3", "8", "4", "4", "--seed", "1", "--out", str(b))[0] == 0
    assert a.read_text() == b.read_text()


def test_construct_not_applicable(capsys):
    rc, _, err = run(capsys, "construct", "1", "16", "10", "5")
    assert rc == 3 and "[3]" in err


def test_construct_realization_failure(capsys):
    rc, _, err = run(capsys, "construct", "3", "16", "10", "5", "--field", "2", "--max-retries", "8")
    assert rc == 4 and "8 attempts" in err


@pytest.fixture(scope="module")
def g0_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("g0") / "g0.json"
    assert main(["export-g0", "--out", str(path)]) == 0
    return path


def test_export_and_verify_g0(capsys, g0_file):
    rc, out, _ = run(capsys, "verify", str(g0_file))
    assert rc == 0
    assert "d=5" in out and "31/8 (3.875)" in out
    assert "PASS  rbar_equals_bound" in out


def test_verify_tampered(capsys, g0_file, tmp_path):
    obj = json.loads(g0_file.read_text())
    obj["H"][2][5] ^= 0x41
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    rc, out, _ = run(capsys, "verify", str(bad))
    assert rc == 5
    assert "FAIL  G_H_orthogonal" in out


def test_locality_and_repair(capsys, g0_file):
    rc, out, _ = run(capsys, "locality", str(g0_file))
    assert rc == 0 and "rbar = 31/8" in out
    rc, out, _ = run(capsys, "repair", str(g0_file), "--node-capacity", "16")
    assert rc == 0 and "= 62 units" in out
    rc, out, _ = run(capsys, "repair", str(g0_file), "--csv")
    assert rc == 0 and out.startswith("index,locality")


def test_export_g0_csv(capsys, tmp_path):
    path = tmp_path / "g0.csv"
    assert run(capsys, "export-g0", "--csv", str(path))[0] == 0
    assert len(path.read_text().splitlines()) == 16


def test_sweep_csv(capsys):
    rc, out, _ = run(capsys, "sweep", "16", "5", "--csv")
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["k"]) for r in rows] == list(range(1, 13))
    row10 = rows[9]
    assert float(row10["rbar_general_dec"]) == 3.5
    assert float(row10["rbar_tight_dec"]) == 3.875
