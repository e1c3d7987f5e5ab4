import json
import subprocess
import sys

import pytest

from dihedral_cayley import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_p5(capsys):
    code, out, _ = run(capsys, "construct", "--p", "5")
    assert code == 0
    assert "order=40" in out and "diameter=2" in out
    assert "nominal_degree=14 actual_degree=12" in out


def test_construct_pad(capsys, tmp_path):
    path = tmp_path / "p5.txt"
    code, out, _ = run(capsys, "construct", "--p", "5", "--pad-to", "14", "--out", str(path))
    assert code == 0 and "degree=14" in out and "diameter=2" in out
    lines = path.read_text().splitlines()
    assert lines[0] == "p=5" and len(lines) == 15
    assert lines[-2:] == ["P(1) 0 2 -1", "P(2) 0 4 -1"]


def test_construct_errors(capsys):
    code, _, err = run(capsys, "construct", "--p", "9")
    assert code == cli.EXIT_INVALID and "not prime" in err
    code, _, err = run(capsys, "construct", "--p", "3")
    assert code == cli.EXIT_INVALID
    code, _, err = run(capsys, "construct", "--p", "5", "--pad-to", "10")
    assert code == cli.EXIT_INFEASIBLE


def test_construct_stdout(capsys):
    code, out, err = run(capsys, "construct", "--p", "7", "--out", "-")
    assert code == 0
    assert out.startswith("p=7\nV 0 1 -1\n")
    assert "diameter=2" in err


def test_verify_construct_output(capsys, tmp_path):
    path = tmp_path / "p7.txt"
    assert run(capsys, "construct", "--p", "7", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", "--set", str(path))
    assert code == 0 and "diameter=2" in out and out.rstrip().endswith("OK")
    code, out, _ = run(capsys, "verify", "--spec", "7,6", "--set", str(path))
    assert code == 0
    code, _, _ = run(capsys, "verify", "--spec", "7", "--set", str(path))
    assert code == cli.EXIT_INVALID


def test_verify_missing_inverse(capsys, tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("1;+1\n0;-1\n")
    code, out, _ = run(capsys, "verify", "--spec", "4", "--set", str(path))
    assert code == cli.EXIT_INVALID
    assert "inverse 3;+1 of 1;+1 missing" in out


def test_verify_not_connected(capsys, tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("1;+1\n3;+1\n")
    code, out, _ = run(capsys, "verify", "--spec", "4", "--set", str(path))
    assert code == cli.EXIT_DISCONNECTED and "not connected" in out


def test_verify_expect(capsys, tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("1;+1\n3;+1\n0;-1\n")  # D8 with r, r^-1, f: diameter 3
    code, out, _ = run(capsys, "verify", "--spec", "4", "--set", str(path))
    assert code == cli.EXIT_DIAMETER and "diameter=3" in out
    code, _, _ = run(capsys, "verify", "--spec", "4", "--set", str(path), "--expect", "3")
    assert code == 0


def test_verify_needs_spec(capsys, tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("1;+1\n")
    assert run(capsys, "verify", "--set", str(path))[0] == cli.EXIT_INVALID
    path.write_text("garbage\n")
    assert run(capsys, "verify", "--spec", "4", "--set", str(path))[0] == cli.EXIT_INVALID


def test_bounds_single(capsys):
    code, out, _ = run(capsys, "bounds", "--d", "100")
    assert code == 0
    assert out.splitlines() == [
        "d,p,actual_degree,constructed_order,dihedral_upper,moore,ratio",
        "100,43,96,3612,5100,10001,0.361200",
    ]


def test_bounds_range(capsys):
    code, out, _ = run(capsys, "bounds", "--range", "6..20")
    rows = out.splitlines()[1:]
    assert code == 0 and len(rows) == 15
    ps = [int(r.split(",")[1]) for r in rows]
    assert ps == sorted(ps)


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--d", "14", "--format", "json", "--with-set")
    data = json.loads(out)
    assert code == 0 and data[0]["p"] == 5 and data[0]["constructed_order"] == 40
    assert data[0]["ratio"] == 0.204082
    assert len(data[0]["generating_set"]) == 14


def test_bounds_errors(capsys):
    assert run(capsys, "bounds", "--d", "5")[0] == cli.EXIT_INVALID
    assert run(capsys, "bounds", "--range", "9..6")[0] == cli.EXIT_INVALID
    assert run(capsys, "bounds", "--range", "x")[0] == cli.EXIT_INVALID


def test_search_exact(capsys):
    code, out, _ = run(capsys, "search", "--exact-dc", "3")
    assert code == 0
    assert out.splitlines()[0].startswith("d=3 class=dihedral DC=8 group=Z4 upper=8")
    assert "verified=yes" in out


def test_search_max_order(capsys):
    code, out, _ = run(capsys, "search", "--max-order", "12")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 6
    assert lines[3].startswith("order=8 group=Z4 d_min=3 bound=3")


def test_search_caps(capsys):
    assert run(capsys, "search", "--exact-dc", "9")[0] == cli.EXIT_INFEASIBLE
    assert run(capsys, "search", "--max-order", "66")[0] == cli.EXIT_INFEASIBLE


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dihedral_cayley", "bounds", "--d", "14"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "14,5,12,40,112,197,0.204082"


@pytest.mark.parametrize("argv", [["bounds", "--range", "6..60", "--format", "csv"],
                                  ["search", "--max-order", "16", "--class", "generalised"]])
def test_repeatable_output(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
