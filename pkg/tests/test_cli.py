import json
import subprocess
import sys
from pathlib import Path

import pytest

from hasse_arf.cli import main, split_vector
from hasse_arf.errors import InputError

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lucas_commands(capsys):
    assert run(capsys, "lucas", "binom", "--p", "5", "--m", "10", "--n", "5") == (0, "2\n", "")
    assert run(capsys, "lucas", "index", "--p", "5", "--m", "-50")[1] == "25 3\n"
    code, out, _ = run(capsys, "lucas", "index", "--p", "5", "--m", "-50", "--json")
    assert json.loads(out) == {"index": 25, "leading_value": 3}


def test_witt_polys(capsys):
    code, out, _ = run(capsys, "witt", "polys", "--p", "2", "--n", "2")
    assert code == 0
    assert out.splitlines()[0] == "S0 = X0 + Y0"
    assert out.splitlines()[1].startswith("S1 = ")
    code, out, _ = run(capsys, "witt", "polys", "--p", "3", "--n", "2", "--json")
    assert set(json.loads(out)) == {"S0", "S1"}


@pytest.mark.parametrize("p", [5, 2])
def test_from_witt_golden(capsys, p):
    code, out, _ = run(capsys, "tower", "from-witt", "--p", str(p), "--vector", "x,0,0",
                       "--galois-check", "--json")
    assert code == 0
    assert out == (GOLDEN / f"witt_p{p}.json").read_text()


def test_from_witt_text(capsys):
    code, out, _ = run(capsys, "tower", "from-witt", "--p", "5", "--vector", "x, 0, 0")
    assert code == 0
    assert "f2^5 - f2 = -x^4*f1 - 2*x^3*f1^2 - 2*x^2*f1^3 - x*f1^4" in out
    assert "f3 := fbar3 + x^4*f2" in out
    assert "Lower jumps: 1, 21, 521" in out
    assert "Upper jumps: 1, 5, 25" in out
    assert "Hasse-Arf:   yes" in out


def test_analyze_levels_document(capsys, tmp_path):
    doc = tmp_path / "t.json"
    doc.write_text(json.dumps({"p": 3, "levels": ["x", "x*f1^2"]}))
    code, out, _ = run(capsys, "tower", "analyze", str(doc), "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["lower_jumps"] == [1, 5]
    assert rep["upper_jumps"] == ["1", "7/3"]
    assert rep["hasse_arf"] is False and rep["structural"] == [False]
    assert "galois_crosscheck" not in rep


def test_analyze_witt_document_matches_from_witt(capsys, tmp_path):
    doc = tmp_path / "t.json"
    doc.write_text(json.dumps({"p": 2, "witt": ["x", "0", "0"], "flags": {"galois_check": True}}))
    code, out, _ = run(capsys, "tower", "analyze", str(doc), "--json")
    assert code == 0 and out == (GOLDEN / "witt_p2.json").read_text()


def test_analyze_levels_with_original_generators(capsys, tmp_path):
    # level input refers to generators as adjoined, so the p = 2 example can be typed from its raw form
    doc = tmp_path / "t.json"
    doc.write_text(json.dumps({"p": 2, "levels": ["x", "x*f1", "x^3*f1 + x*f1^3 + x*f1*f2"]}))
    code, out, _ = run(capsys, "tower", "analyze", str(doc), "--json")
    assert json.loads(out)["lower_jumps"] == [1, 3, 11]


def test_galois_check(capsys):
    code, out, _ = run(capsys, "galois", "check", "--p", "2", "--vector", "x,0,0", "--json")
    assert code == 0
    assert json.loads(out) == {"galois_jumps": [1, 3, 11], "valuation_jumps": [1, 3, 11], "match": True}


@pytest.mark.parametrize("argv", [
    ["lucas", "binom", "--p", "4", "--m", "1", "--n", "1"],
    ["tower", "from-witt", "--p", "5", "--vector", "x,"],
    ["tower", "from-witt", "--p", "5", "--vector", "x^5,0"],
    ["tower", "from-witt", "--p", "5", "--vector", "x + y"],
    ["tower", "analyze", "/nonexistent/file.json"],
    ["witt", "polys", "--p", "5", "--n", "9"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error: ")


def test_bad_documents(capsys, tmp_path):
    for payload in ['{"p": 3}', '[1]', '{"p": 3, "levels": []}', "not json",
                    '{"p": 3, "levels": ["x"], "witt": ["x"]}', '{"p": 3, "levels": ["x"], "flags": 1}']:
        doc = tmp_path / "d.json"
        doc.write_text(payload)
        assert run(capsys, "tower", "analyze", str(doc))[0] == 2
    doc.write_text('{"p": 3, "levels": ["x"], "flags": {"galois_check": true}}')
    assert run(capsys, "tower", "analyze", str(doc))[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["nope"])
    assert info.value.code == 2


def test_split_vector():
    assert split_vector("x, (x+1)^2 ,0") == ["x", "(x+1)^2", "0"]
    with pytest.raises(InputError):
        split_vector("x,,0")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hasse_arf", "lucas", "index", "--p", "3", "--m", "7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1 1\n"
