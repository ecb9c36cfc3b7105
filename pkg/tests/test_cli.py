from __future__ import annotations

import json
import subprocess
import sys

import pytest
from oracles import GOLDEN

from peakit.cli import conversion_path, main


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_check_valid_and_suite(capsys):
    code, out = run(capsys, "check", GOLDEN / "M3C5.dcip.json", "--laws", "core")
    assert code == 0
    assert "FAIL" not in out and "ortho-exchange: pass" in out


def test_check_strict_self_adjointness_fails_on_noncommutative_model(capsys):
    code, out = run(capsys, "check", GOLDEN / "M3C5.dcip.json", "--strict-self-adjointness")
    assert code == 1 and "FAIL:  x . y <= z => x . z^- <= y^-  [x=a, y=a, z=a]" in out
    code, _ = run(capsys, "check", GOLDEN / "B4.dcip.json", "--strict-self-adjointness")
    assert code == 0


def test_check_invalid_file(tmp_path, capsys):
    data = json.loads((GOLDEN / "MV3.json").read_text())
    data["oplus"][1][1] = 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out = run(capsys, "check", bad)
    assert code == 1 and "PE2: FAIL" in out


def test_check_law_file(tmp_path, capsys):
    laws = tmp_path / "laws.txt"
    laws.write_text("# commutativity\nx (+) y = y (+) x\n")
    assert run(capsys, "check", GOLDEN / "B4.json", "--laws", laws)[0] == 0
    code, out = run(capsys, "check", GOLDEN / "M3C5.json", "--laws", laws)
    assert code == 1 and "[x=a, y=b]" in out


def test_usage_errors(tmp_path, capsys):
    assert main(["check", str(tmp_path / "missing.json")]) == 2
    assert main(["check", str(GOLDEN / "B4.json"), "--laws", "nonsense"]) == 2
    assert main(["law", str(GOLDEN / "MV3.json"), "--expr", "x . = y"]) == 2
    assert main(["law", "--expr", "x = x"]) == 2
    assert main(["enumerate", "--order", "8"]) == 2
    assert main(["convert", str(GOLDEN / "B4.dcip.json"), "--to", "pea"]) == 2
    assert main(["law", str(GOLDEN / "NL6.json"), "--expr", "x /\\ y = y /\\ x"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_law_on_file(capsys):
    code, out = run(capsys, "law", GOLDEN / "MV3.json", "--expr", "x . y = x /\\ y")
    assert code == 1 and "[x=a, y=a]" in out
    code, out = run(capsys, "law", GOLDEN / "MV3.json", "--expr", "x -> 1 = 1")
    assert code == 0 and out.startswith("holds")


def test_law_search(capsys):
    code, out = run(capsys, "law", "--order", "4", "--kind", "lattice-pea",
                    "--expr", "x . y = y . x")
    assert code == 1 and "counterexample at order 4" in out and "[x=a, y=b]" in out
    code, out = run(capsys, "law", "--order", "5", "--kind", "lattice-pea",
                    "--expr", "x -> 1 = 1")
    assert code == 0


def test_convert_and_roundtrip(tmp_path, capsys):
    out = tmp_path / "b4.psa.json"
    assert run(capsys, "convert", GOLDEN / "B4.json", "--to", "psa", "--out", out)[0] == 0
    assert out.read_text() == (GOLDEN / "B4.psa.json").read_text()
    code, text = run(capsys, "convert", GOLDEN / "MV3.json", "--to", "dcip")
    assert code == 0 and json.loads(text)["kind"] == "dcip"
    code, text = run(capsys, "convert", GOLDEN / "NL6.json", "--to", "psa")
    assert code == 1 and "NotLattice" in text
    for name in ("M3C5.json", "NL6.json", "B4.psa.json", "NL6.cdcip.json"):
        code, text = run(capsys, "roundtrip", GOLDEN / name)
        assert code == 0 and "MISMATCH" not in text


def test_conversion_paths():
    assert conversion_path("pea", "dcip") == [("pea", "psa"), ("psa", "dcip")]
    assert conversion_path("cdcip", "psa") == [("cdcip", "pea"), ("pea", "psa")]


def test_classify(capsys):
    code, out = run(capsys, "classify", GOLDEN / "B4.json")
    assert code == 0 and "pseudo_mv: true" in out and "compatible_pairs: 6" in out
    code, out = run(capsys, "classify", GOLDEN / "NL6.cdcip.json")
    assert "lattice: false" in out and "compatible_pairs: n/a" in out


def test_enumerate_writes_hashed_files(tmp_path, capsys):
    code, out = run(capsys, "enumerate", "--order", "5", "--out", tmp_path, "--workers", "2")
    assert code == 0 and "order 5: 5 model(s)" in out
    files = sorted(tmp_path.glob("pea-*.json"))
    assert len(files) == 5
    code, out = run(capsys, "enumerate", "--order", "4", "--no-iso", "--lattice")
    assert "order 4: 4 model(s)" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "peakit", "classify", str(GOLDEN / "E2.json")],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "lattice: true" in res.stdout
