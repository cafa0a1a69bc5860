import json
import re
from pathlib import Path

import pytest
from hypothesis import given

from tropsolve.cli import main
from tropsolve.report import SolveReportDocument, solve_system
from tropsolve.textio import serialize_system, system

from cases import SUP_2X3, SUP_5X4, SUP_NONEXISTENCE, SYM_5X4, SYM_SOLVABILITY
from strategies import systems

EXAMPLES = Path(__file__).resolve().parents[1] / "examples_data"


def write(tmp_path, sys, name="sys.txt"):
    path = tmp_path / name
    path.write_text(serialize_system(sys))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_sym_json(tmp_path, capsys):
    code, out, _ = run(capsys, "solve", "--input", write(tmp_path, SYM_5X4), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["solvable"] is True
    assert doc["minimal_solutions"] == [["n:-10", "n:-9", "n:-7", "-11"]]
    assert doc["covers"] == [[[2, 3], [0, 1]]]
    assert doc["tangible_condition"] is None


def test_solve_sup_unsolvable(tmp_path, capsys):
    code, out, _ = run(capsys, "solve", "--input", write(tmp_path, SUP_5X4), "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert doc["minimal_solutions"] == [] and doc["solvable"] is False
    assert doc["rejected"] == [["-10", "z", "-7", "-11"], ["z", "-9", "-7", "-11"]]


def test_solve_empty_after_reduction(tmp_path, capsys):
    sys = system("sym", "1 z / z n:2", "z z")
    code, out, _ = run(capsys, "solve", "--input", write(tmp_path, sys), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["empty_after_reduction"] is True
    assert doc["trace"]["deleted_rows"] == [0, 1]
    assert doc["minimal_solutions"] == [["z", "z"]]
    code, out, _ = run(capsys, "solve", "--input", write(tmp_path, sys))
    assert "0 = 0" in out


def test_solve_lifts_to_original_coordinates(tmp_path, capsys):
    # Row 0 is deleted and forces x0 = 0; x2 is free.
    sys = system("trop", "1 z z / z 0 z / 5 3 z", "z 2 5")
    code, out, _ = run(capsys, "solve", "--input", write(tmp_path, sys), "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["trace"]["forced_zero_vars"] == [0] and doc["trace"]["free_vars"] == [2]
    assert doc["minimal_solutions"] == [["z", "2", "z"]]
    assert doc["covers"] == [[[1], []]]


def test_no_reduce(tmp_path, capsys):
    code, _, err = run(capsys, "solve", "--no-reduce", "--input",
                       write(tmp_path, system("trop", "1 z", "z")))
    assert code == 2 and "reduce" in err
    code, _, _ = run(capsys, "solve", "--no-reduce", "--input", write(tmp_path, SYM_SOLVABILITY))
    assert code == 0


def test_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("sym 1 1\ng:4\n1\n")
    code, _, err = run(capsys, "solve", "--input", str(bad))
    assert code == 2 and "line 2, column 1" in err
    code, _, err = run(capsys, "solve", "--input", str(tmp_path / "missing.txt"))
    assert code == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_oracle_command(tmp_path, capsys):
    code, out, _ = run(capsys, "oracle", "--input", write(tmp_path, SUP_2X3), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert ["2", "g:2", "z"] in doc["solutions"]
    assert sorted(doc["minimal_moduli"]) == [["2", "2", "z"], ["z", "2", "3"]]
    code, _, err = run(capsys, "oracle", "--input", write(tmp_path, SUP_2X3), "--limit", "10")
    assert code == 2 and "exceed" in err
    code, out, _ = run(capsys, "oracle", "--input", write(tmp_path, SUP_5X4))
    assert code == 1


@pytest.mark.parametrize("kind", ["trop", "sym", "sup"])
def test_stickel_command(kind, capsys):
    code, out, _ = run(capsys, "stickel", "--kind", kind, "--n", "3", "--deg", "2",
                       "--seed", "5", "--attack", "--format", "json")
    doc = json.loads(out)
    assert doc["keys_agree"] is True
    assert code == (0 if doc["attack"]["matches_key"] else 1)
    if kind == "trop":
        assert doc["attack"]["matches_key"] is True
    code, out, _ = run(capsys, "stickel", "--kind", kind, "--seed", "5")
    assert code == 0 and "keys agree: yes" in out


@pytest.mark.parametrize("path", sorted(EXAMPLES.glob("*.txt")), ids=lambda p: p.stem)
def test_shipped_examples_run(path, capsys):
    code, out, _ = run(capsys, "solve", "--input", str(path), "--format", "json")
    doc = json.loads(out)
    assert code == (0 if doc["solvable"] else 1)


GLYPHS = [
    (re.compile(r"^⊖(-?\d+)$"), r"n:\1"),
    (re.compile(r"^(-?\d+)•$"), r"b:\1"),
    (re.compile(r"^(-?\d+)°$"), r"g:\1"),
    (re.compile(r"^(?:𝟎|-∞)$"), "z"),
]


def untext(vec: str) -> list:
    """Turn a printed vector like ``(⊖-3, 2•, 𝟎)`` back into ASCII tokens."""
    out = []
    for cell in vec.strip("()").split(", "):
        for pat, rep in GLYPHS:
            if pat.match(cell):
                cell = pat.sub(rep, cell)
                break
        out.append(cell)
    return out


def text_vectors(text: str, header: str) -> list:
    lines = text.splitlines()
    start = next(i for i, ln in enumerate(lines) if ln.startswith(header))
    vecs = []
    for ln in lines[start + 1:]:
        if not ln.startswith("  "):
            break
        vecs.append(untext(ln.split("   ")[0].strip()))
    return vecs


@pytest.mark.parametrize("sys", [SYM_5X4, SUP_2X3, SUP_5X4, SUP_NONEXISTENCE, SYM_SOLVABILITY])
def test_text_and_json_agree(sys, tmp_path, capsys):
    path = write(tmp_path, sys)
    _, out_json, _ = run(capsys, "solve", "--input", path, "--format", "json")
    _, out_text, _ = run(capsys, "solve", "--input", path)
    doc = json.loads(out_json)
    cand = re.search(r"greatest candidate: (\(.*?\))", out_text).group(1)
    assert untext(cand) == doc["greatest_candidate"]
    assert text_vectors(out_text, "minimal solutions") == doc["minimal_solutions"]
    if doc["rejected"]:
        assert text_vectors(out_text, "rejected candidates") == doc["rejected"]
    assert f"solvable: {'yes' if doc['solvable'] else 'no'}" in out_text


@given(systems("trop") | systems("sym") | systems("sup", max_m=3, max_n=3))
def test_document_round_trip(sys):
    doc = solve_system(sys)
    again = SolveReportDocument.from_json(doc.to_json())
    assert again == doc
    assert again.to_dict() == doc.to_dict()
    for v in doc.vectors("minimal_solutions"):
        assert sys.is_solution(v)
