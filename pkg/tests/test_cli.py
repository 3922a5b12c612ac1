import json
import subprocess
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

from hodgeindex.catalog import CatalogEntry, builtin_catalog, load_catalog, run_catalog
from hodgeindex.cli import main
from hodgeindex.report import NOT_QH_NOTICE, AnalysisReport, analyze

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_morse(capsys):
    code, out, _ = run(capsys, "analyze", "x^2+y^2+z^2", "--vars", "x,y,z", "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["mu"] == 1
    assert doc["sigma_formula"] == -1
    assert doc["variables"] == ["x", "y", "z"]


def test_analyze_fermat_cubic_matches_golden(capsys):
    code, out, _ = run(capsys, "analyze", "x^3 + y^3 + z^3", "--vars", "x,y,z", "--format", "structured")
    assert code == 0
    assert out == (GOLDEN / "fermat_cubic.json").read_text()
    doc = json.loads(out)
    assert doc["mu"] == 8 and doc["sigma_formula"] == -6
    assert doc["parity_counts"]["integer"] == 2


def test_text_output_mentions_key_numbers(capsys):
    code, out, _ = run(capsys, "analyze", "x^3 + y^2 + z^2", "--vars", "x,y,z")
    assert code == 0
    assert "Milnor number mu = 2" in out
    assert "sigma (Hodge formula) = -2" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["analyze", "x^2*y^2", "--vars", "x,y"], 3),
        (["analyze", "x^2 + ", "--vars", "x"], 2),
        (["analyze", "x^2 + w", "--vars", "x"], 2),
        (["analyze", "x + y^2", "--vars", "x,y"], 2),
        (["analyze", "x^2*(x - 1)^2", "--vars", "x"], 4),
        (["pairing", "x^2*y^2", "--vars", "x,y"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv, "--format", "structured")
    assert got == code
    assert out == ""
    assert err.startswith("error")


def test_xy_is_morse_but_not_weighted(capsys):
    code, out, _ = run(capsys, "analyze", "x*y", "--vars", "x,y", "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["mu"] == 1
    assert doc["notice"] == NOT_QH_NOTICE
    assert doc["spectrum"] is None


def test_not_quasi_homogeneous_keeps_pairing(capsys):
    code, out, _ = run(capsys, "analyze", "(x + y^2)^3 + y^5 + z^2", "--vars", "x,y,z", "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["quasi_homogeneous"] is False
    assert doc["notice"] == NOT_QH_NOTICE
    assert doc["mu"] == 8 and len(doc["gram"]) == 8
    assert doc["inertia_raw"] is not None
    assert doc["sigma_formula"] is None


def test_skip_hodge(capsys):
    code, out, _ = run(capsys, "analyze", "x^3 + y^3 + z^3", "--vars", "x,y,z", "--skip-hodge", "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["spectrum"] is None and doc["notice"] is None
    assert doc["gram"]


@pytest.mark.parametrize(
    "poly, vars, gram, inertia",
    [
        ("x^3", "x", [["0", "1/3"], ["1/3", "0"]], (1, 1, 0)),
        ("x^2", "x", [["1/2"]], (1, 0, 0)),
        ("x^2+y^2", "x,y", [["1/4"]], (1, 0, 0)),
    ],
)
def test_pairing(capsys, poly, vars, gram, inertia):
    code, out, _ = run(capsys, "pairing", poly, "--vars", vars, "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["gram"] == gram
    i = doc["inertia_raw"]
    assert (i["positive"], i["negative"], i["zero"]) == inertia


def test_structured_output_is_byte_stable(capsys):
    argv = ["analyze", "x^3 + x*y^2 + z^2", "--vars", "x,y,z", "--format", "structured"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


@pytest.mark.parametrize(
    "poly, vars",
    [("x^3 + y^3 + z^3", "xyz"), ("x*y", "xy"), ("(x + y^2)^3 + y^5 + z^2", "xyz"), ("x^3 + y^2", "xy")],
)
def test_structured_round_trip_is_lossless(poly, vars):
    rep = analyze(poly, tuple(vars))
    back = AnalysisReport.from_json(rep.to_json())
    assert back == rep
    assert back.to_json() == rep.to_json()


def test_timing_only_when_requested():
    assert analyze("x^3", ("x",)).timing is None
    rep = analyze("x^3", ("x",), timing=True)
    assert set(rep.timing) >= {"milnor", "residue"}
    assert "timing" in rep.to_dict()
    assert "timing" not in analyze("x^3", ("x",)).to_dict()


def test_builtin_catalog_passes(capsys):
    code, out, _ = run(capsys, "catalog", "--catalog", "builtin")
    assert code == 0
    assert out.rstrip().endswith("0 failed")


def test_builtin_catalog_contents():
    entries = {e.name: e for e in builtin_catalog()}
    for k in range(1, 7):
        assert entries[f"A{k} surface"].expected_sigma == -k
    assert entries["D4 surface"].expected_sigma == -4
    assert entries["E6~ simple elliptic"].expected_mu == 8
    assert any(e.expected_error == "non-isolated" for e in entries.values())
    assert sum(1 for e in entries.values() if len(e.vars) == 2 and e.expected_sigma == 0) >= 2


def test_catalog_file_with_wrong_mu_exits_5(tmp_path, capsys):
    path = tmp_path / "cat.json"
    path.write_text(
        json.dumps(
            [
                {"name": "good", "poly": "x^3", "vars": ["x"], "expected_mu": 2},
                {"name": "wrong mu", "poly": "x^3 + y^2 + z^2", "vars": ["x", "y", "z"], "expected_mu": 3},
            ]
        )
    )
    code, out, _ = run(capsys, "catalog", "--catalog", str(path))
    assert code == 5
    assert "wrong mu" in out and "FAIL" in out
    code, out, _ = run(capsys, "catalog", "--catalog", str(path), "--format", "structured")
    doc = json.loads(out)
    assert code == 5 and doc["failed"] == 1
    bad = [e for e in doc["entries"] if not e["passed"]]
    assert bad[0]["name"] == "wrong mu" and bad[0]["mismatches"]


def test_catalog_entry_round_trip(tmp_path):
    e = CatalogEntry("D4", "x^3 + x*y^2 + z^2", ("x", "y", "z"), 4, -4, (F(1, 3), F(1, 3), F(1, 2)))
    path = tmp_path / "c.json"
    path.write_text(json.dumps([e.to_dict()]))
    assert load_catalog(path) == [e]
    assert run_catalog([e])[0].passed


def test_catalog_rejects_bad_files(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"name": "x"}))
    assert run(capsys, "catalog", "--catalog", str(path))[0] == 2
    path.write_text(json.dumps([{"name": "x", "poly": "x^2", "vars": ["x"], "colour": 1}]))
    assert run(capsys, "catalog", "--catalog", str(path))[0] == 2


def test_expected_error_mismatch_is_reported():
    e = CatalogEntry("claims non-local", "x^3", ("x",), expected_error="non-local")
    r = run_catalog([e])[0]
    assert not r.passed


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hodgeindex", "pairing", "x^3", "--vars", "x"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert "1/3" in proc.stdout
