"""Pinned CLI reports.

Each golden file was produced by the command listed in CASES, run from
the repository root.  The suite re-runs the command in process and
demands byte-identical JSON, so any drift in report content, key order,
or formatting shows up as a diff against a reviewed file.
"""

import io
import json
import pathlib
from contextlib import redirect_stdout

import pytest

from mtcodes.cli import main

ROOT = pathlib.Path(__file__).resolve().parent.parent
GOLDENS = pathlib.Path(__file__).resolve().parent / "goldens"

F4 = str(ROOT / "fixtures" / "f4_codes.txt")
F3 = str(ROOT / "fixtures" / "f3_codes.txt")
F9 = str(ROOT / "fixtures" / "f9_codes.txt")

CASES = [
    ("f4_info.json", ["info", F4, "--json"]),
    ("f4_intersect_c1_c2.json", ["intersect", F4, "C1", "C2", "--json"]),
    (
        "f4_intersect_galois1.json",
        ["intersect", F4, "C1", "C2", "--galois", "1", "--json"],
    ),
    ("f4_dual_galois1_c1.json", ["dual", F4, "C1", "--galois", "1", "--json"]),
    ("f4_reverse_c1.json", ["reverse", F4, "C1", "--json"]),
    ("f3_info.json", ["info", F3, "--json"]),
    ("f3_check_so_c3.json", ["check", F3, "C3", "--so", "0", "--json"]),
    (
        "f3_check_reversible_c5.json",
        ["check", F3, "C5", "--reversible", "--json"],
    ),
    ("f3_advisor_c3_c5.json", ["check", F3, "C3", "--advisor", "C5", "--json"]),
    ("f9_info.json", ["info", F9, "--json"]),
    ("f9_check_lcd_c6.json", ["check", F9, "C6", "--lcd", "1", "--json"]),
]


@pytest.mark.parametrize("name,argv", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = main(argv)
    assert rc == 0
    expected = (GOLDENS / name).read_text()
    assert buf.getvalue() == expected


@pytest.mark.parametrize("name,argv", CASES, ids=[c[0] for c in CASES])
def test_golden_is_valid_json(name, argv):
    payload = json.loads((GOLDENS / name).read_text())
    assert payload["schema"] == 1
    assert payload["command"] == argv[0]
    assert payload["factor_seed"] == 2024
