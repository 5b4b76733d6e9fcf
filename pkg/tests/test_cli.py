"""CLI behavior: document parsing, exit codes, payload shape, determinism."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from mtcodes.cli import main, parse_document

FIXTURES = Path(__file__).parent.parent / "fixtures"
F4_DOC = str(FIXTURES / "f4_codes.txt")
F3_DOC = str(FIXTURES / "f3_codes.txt")
F9_DOC = str(FIXTURES / "f9_codes.txt")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--json")
    return code, json.loads(out), err


# -- document parsing --------------------------------------------------------

def test_parse_document_fixture():
    doc = parse_document(Path(F4_DOC).read_text())
    assert set(doc.codes) == {"C1", "C2", "C1lin", "C2lin", "Z"}
    assert doc.field.q == 4


def test_parse_errors():
    with pytest.raises(Exception, match="field header"):
        parse_document("code X\nmatrix 1 1\n1\n")
    bad_rows = "GF(2)\ncode X\nmatrix 2 2\n1 0\n"
    with pytest.raises(Exception, match="needs 2 rows"):
        parse_document(bad_rows)
    bad_shift = "GF(3)\ncode X\nmt 1\nblocks 3\nshifts 0\ngpm\n1\n"
    with pytest.raises(Exception, match="nonzero"):
        parse_document(bad_shift)


def test_gpm_block_in_document():
    doc = parse_document(Path(F4_DOC).read_text())
    z = doc.codes["Z"]
    assert z.dim == 0


# -- exit codes ----------------------------------------------------------

def test_unknown_code_exits_1(capsys):
    code, _, err = run_cli(capsys, "info", F4_DOC, "NOPE")
    assert code == 1
    assert "NOPE" in err and "C1" in err  # lists what the document does hold


def test_parse_failure_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("GF(6)\n")
    code, _, err = run_cli(capsys, "info", str(bad))
    assert code == 2
    assert "error" in err


def test_bad_budget_env_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("MTCODES_ENUM_BUDGET", "not-a-number")
    code, _, err = run_cli(capsys, "info", F4_DOC)
    assert code == 2


def test_precondition_unmet_exits_1(capsys):
    code, payload, _ = run_json(capsys, "check", F4_DOC, "C2", "--so", "0")
    assert code == 1
    assert payload["result"]["holds"] is None
    assert "precondition" in payload["result"]["note"]


# -- info ----------------------------------------------------------------

def test_info_single_code(capsys):
    code, payload, _ = run_json(capsys, "info", F4_DOC, "C1")
    assert code == 0
    assert payload["schema"] == 1
    assert payload["field"] == "GF(2^2) mod 1 1 1"
    c1 = payload["codes"][0]
    assert c1["kind"] == "mt"
    assert (c1["length"], c1["dimension"], c1["distance"]) == (8, 6, 2)
    assert c1["blocks"] == [6, 2]
    assert c1["shifts"] == ["1", "w"]
    assert c1["period"] == 6
    assert c1["gpm"] == ["w + x | w", "0 | w^2 + x"]


def test_info_whole_document(capsys):
    code, payload, _ = run_json(capsys, "info", F3_DOC)
    assert code == 0
    names = [c["name"] for c in payload["codes"]]
    assert names == ["C3", "C4", "C5", "C3lin", "C4lin", "C5lin"]
    kinds = {c["name"]: c["kind"] for c in payload["codes"]}
    assert kinds["C3"] == "mt" and kinds["C3lin"] == "linear"


def test_info_text_mode_renders_scalars_inline(capsys):
    code, out, _ = run_cli(capsys, "info", F4_DOC, "C1")
    assert code == 0
    assert "shifts: 1 w" in out
    assert "gpm:" in out
    assert "w + x | w" in out


# -- intersect ---------------------------------------------------------------

def test_intersect_mt_route(capsys):
    code, payload, _ = run_json(capsys, "intersect", F4_DOC, "C1", "C2", "--oracle")
    assert code == 0
    assert payload["route"] == "gpm"
    assert payload["oracle"] == "confirmed"
    inter = payload["intersection"]
    assert inter["dimension"] == 2 and inter["distance"] == 6
    assert payload["qc_companion"] == ["w^2 + x | 0", "0 | 1"]


def test_intersect_galois_trivial(capsys):
    code, payload, _ = run_json(capsys, "intersect", F4_DOC, "C1", "C2", "--galois", "1", "--oracle")
    assert code == 0
    assert payload["kappa"] == 1
    assert payload["intersection"]["dimension"] == 0
    assert payload["oracle"] == "confirmed"


def test_intersect_linear_route_forced(capsys):
    code, payload, _ = run_json(capsys, "intersect", F4_DOC, "C1", "C2", "--linear")
    assert code == 0
    assert payload["route"] == "linear"
    assert payload["intersection"]["dimension"] == 2


def test_intersect_mixed_kinds_uses_linear(capsys):
    code, payload, _ = run_json(capsys, "intersect", F4_DOC, "C1", "C2lin")
    assert code == 0
    assert payload["route"] == "linear"


def test_intersect_mt_flag_rejects_mixed(capsys):
    code, _, err = run_cli(capsys, "intersect", F4_DOC, "C1", "C2lin", "--mt")
    assert code == 1


def test_oracle_budget_skip(capsys, monkeypatch):
    monkeypatch.setenv("MTCODES_ENUM_BUDGET", "4")
    code, payload, _ = run_json(capsys, "intersect", F4_DOC, "C1", "C2", "--oracle")
    assert code == 0
    assert payload["oracle"].startswith("skipped")


# -- check -------------------------------------------------------------------

def test_check_so_true(capsys):
    code, payload, _ = run_json(capsys, "check", F3_DOC, "C3", "--so", "0", "--oracle")
    assert code == 0
    assert payload["result"]["holds"] is True
    assert payload["oracle"] == "confirmed"


def test_check_reversible_false_reports_subcode(capsys):
    code, payload, _ = run_json(capsys, "check", F3_DOC, "C5", "--reversible")
    assert code == 0
    assert payload["result"]["holds"] is False
    sub = payload["largest_reversible_subcode"]
    assert sub["dimension"] == 3
    assert sub["generator"] == [
        "1 0 0 1 2 0 0 2 0",
        "0 1 0 0 1 2 0 0 2",
        "0 0 1 1 0 1 1 0 0",
    ]


def test_check_reversible_nonpalindromic_residue(capsys):
    code, payload, _ = run_json(capsys, "check", F3_DOC, "C3", "--reversible")
    assert code == 0
    assert payload["result"]["holds"] is False
    assert payload["result"]["residue"][0] == "0 | 2 + 2*x + x^2 | 2 + 2*x + 2*x^2"


def test_check_lcd_layers(capsys):
    code, payload, _ = run_json(capsys, "check", F9_DOC, "C6", "--lcd", "1")
    assert code == 0
    res = payload["result"]
    assert res["holds"] is True
    assert res["total"] == 5 and res["target"] == 5
    nonzero = [l for l in res["layers"] if l["weighted"]]
    assert [l["factor"] for l in nonzero] == [
        "1 + x",
        "w^6 + x",
        "1 + w^7*x + w^5*x^2 + x^3",
    ]


def test_check_hull_gpm_route(capsys):
    code, payload, _ = run_json(capsys, "check", F4_DOC, "C1", "--hull", "1", "--oracle")
    assert code == 0
    assert "qc_gpm" in payload
    assert payload["hull"]["dimension"] == 2
    assert payload["oracle"] == "confirmed"


def test_check_hull_linear_fallback(capsys):
    # C2's 0-Galois dual changes shifts, so the GPM route refuses; the
    # linear route still answers
    code, payload, _ = run_json(capsys, "check", F4_DOC, "C2", "--hull", "0")
    assert code == 0
    assert "note" in payload and "linear route" in payload["note"]
    assert "hull" in payload


def test_check_advisor(capsys):
    code, payload, _ = run_json(capsys, "check", F3_DOC, "C3", "--advisor", "C5")
    assert code == 0
    adv = payload["advice"]
    assert adv["exhaustive"] is True
    assert ["1", "1", "1"] in adv["admitted_shifts"]
    assert adv["intersection_dimension"] == 1


def test_check_linear_code_property(capsys):
    code, payload, _ = run_json(capsys, "check", F3_DOC, "C4lin", "--reversible")
    assert code == 0
    assert payload["result"]["holds"] is True


# -- dual and reverse ----------------------------------------------------

def test_dual_galois(capsys):
    code, payload, _ = run_json(capsys, "dual", F4_DOC, "C1", "--galois", "1")
    assert code == 0
    d = payload["dual"]
    assert d["shifts"] == ["1", "w"]
    assert d["gpm"] == ["1 + x + x^3 + x^4 | w^2 + x", "0 | w + x^2"]
    assert d["companion"] == ["1 + x + x^2 | w + x", "0 | 1"]


def test_dual_euclidean(capsys):
    code, payload, _ = run_json(capsys, "dual", F4_DOC, "C1")
    assert code == 0
    assert payload["dual"]["shifts"] == ["1", "w^2"]


def test_reverse(capsys):
    code, payload, _ = run_json(capsys, "reverse", F4_DOC, "C1")
    assert code == 0
    rev = payload["reversed"]
    assert rev["blocks"] == [2, 6]
    assert rev["shifts"] == ["w^2", "1"]
    assert rev["gpm"] == ["1 | w^2 + x", "0 | 1 + x + x^2"]
    assert payload["equals_original"] is False


def test_check_reverse_mode_matches_reverse(capsys):
    _, a, _ = run_json(capsys, "check", F4_DOC, "C1", "--reverse")
    _, b, _ = run_json(capsys, "reverse", F4_DOC, "C1")
    assert a["reversed"] == b["reversed"]
    assert a["equals_original"] == b["equals_original"]


# -- determinism ---------------------------------------------------------

def test_json_reports_byte_identical_in_process(capsys):
    runs = []
    for _ in range(2):
        _, out, _ = run_cli(capsys, "intersect", F4_DOC, "C1", "C2", "--galois", "1", "--json")
        runs.append(out)
    assert runs[0] == runs[1]


def test_json_report_byte_identical_subprocess():
    cmd = [sys.executable, "-m", "mtcodes", "check", F3_DOC, "C3", "--so", "0", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_text_and_json_share_content(capsys):
    _, payload, _ = run_json(capsys, "info", F4_DOC, "C2")
    _, text, _ = run_cli(capsys, "info", F4_DOC, "C2")
    c2 = payload["codes"][0]
    # every scalar fact in the JSON payload appears in the text rendering
    assert f"dimension: {c2['dimension']}" in text
    assert f"distance: {c2['distance']}" in text
    for row in c2["gpm"]:
        assert row in text
