"""Command-line front end: exit codes, output determinism, file input."""

import json

import pytest

import hibi.cli as cli
from hibi.cli import main, run_command

P1_TEXT = """{
  "name": "mine",
  "elements": ["x0", "w", "x", "z", "y", "v"],
  "covers": [["x0", "w"], ["x0", "x"], ["w", "y"], ["x", "z"], ["z", "y"], ["x", "v"]],
  "bottom": "x0"
}
"""


def test_spread_is_a_bare_number():
    code, text = run_command(["spread", "P1", "--eps", "-1"])
    assert code == 0
    assert text == "3"


def test_spread_both_signs():
    assert run_command(["spread", "P2", "--eps", "-1"]) == (0, "6")
    assert run_command(["spread", "P3", "--eps", "-1"]) == (0, "6")
    assert run_command(["spread", "P2", "--eps", "1"]) == (0, "4")


def test_generators_table_lists_three(capsys):
    code = main(["generators", "P1", "--n", "-1"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.count("x0=") == 3
    assert "3 generators" in out
    assert "x0=-2 w=-1 x=-2 z=-1 y=0 v=-1" in out


def test_generators_json_parses():
    code, text = run_command(["generators", "P1", "--n", "-1", "--format", "json"])
    assert code == 0
    payload = json.loads(text)
    assert payload["count"] == 3
    assert len(payload["generators"]) == 3


def test_analyze_json_parses():
    code, text = run_command(["analyze", "P1", "--format", "json"])
    assert code == 0
    payload = json.loads(text)
    assert payload["pure"] is False
    assert payload["level"] is True
    assert payload["anticanonical_level"] is False
    assert payload["spread"] == {"1": 3, "-1": 3}
    assert payload["degree_range"]["-1"] == [-3, -2]


def test_sequences_table(capsys):
    code = main(["sequences", "P2", "--eps", "-1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "()" in out
    assert "(y0, x1, y1, x2)" in out


def test_polytope_dimensions(capsys):
    code = main(["polytope", "P1", "--eps", "-1", "--n", "2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "dim 1" in out
    assert "dim 2" in out


def test_polytope_single_section(capsys):
    code = main(["polytope", "P1", "--eps", "-1", "--seq", "y,x"])
    assert code == 0
    out = capsys.readouterr().out
    assert "dim 2" in out
    assert "points(n=1) 3" in out


def test_polytope_intersection():
    code, text = run_command(
        ["polytope", "P2", "--eps", "-1", "--seq", "y0,x1", "--intersect", "y1,x2"]
    )
    assert code == 0
    assert "share 4 points" in text


def test_intersection_matches_empty_section():
    code, text = run_command(
        [
            "polytope",
            "P2",
            "--eps",
            "-1",
            "--seq",
            "y0,x1",
            "--intersect",
            "y1,x2",
            "--format",
            "json",
        ]
    )
    assert code == 0
    both = json.loads(text)
    code, text = run_command(
        ["polytope", "P2", "--eps", "-1", "--seq", "", "--format", "json"]
    )
    assert code == 0
    empty = json.loads(text)
    assert len(both["points"]) == empty["sections"][0]["points"]

    from hibi import build_C, lattice_points
    from hibi.corpus import p2

    direct = [nu.as_dict() for nu in lattice_points(build_C(p2(), -1, ()), 1)]
    got = [{k: v for k, v in pt.items() if k != "∞"} for pt in both["points"]]
    want = [{k: v for k, v in pt.items() if k != "∞"} for pt in direct]
    assert sorted(got, key=str) == sorted(want, key=str)


def test_level_flags(capsys):
    code = main(["level", "P1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "level: true" in out
    assert "anticanonical level: false" in out


def test_frobenius_table(capsys):
    code = main(["frobenius", "P1", "--prime", "2,3", "--emax", "2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "prime 2" in out
    assert "prime 3" in out
    assert "desk readings" in out


def test_frobenius_budget_exit():
    code, text = run_command(["frobenius", "P1", "--budget", "2"])
    assert code == 4
    assert "budget" in text.lower()


def test_frobenius_rejects_composite_prime():
    code, text = run_command(["frobenius", "P1", "--prime", "4"])
    assert code == 2
    assert "prime" in text


def test_lattice_summary(capsys):
    code = main(["lattice", "P1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "ideal lattice with 12 elements" in out
    assert "join-irreducibles recover the poset: true" in out


def test_usage_errors_exit_one():
    code, text = run_command(["generators", "P1"])
    assert code == 1
    code, _ = run_command(["nope"])
    assert code == 1
    code, _ = run_command(["spread", "P1", "--eps", "2"])
    assert code == 1


def test_validation_errors_exit_two(tmp_path):
    code, text = run_command(["analyze", "NoSuchPoset"])
    assert code == 2
    assert "invalid input" in text
    missing = tmp_path / "missing.json"
    code, _ = run_command(["analyze", str(missing)])
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x"')
    code, _ = run_command(["analyze", str(bad)])
    assert code == 2


def test_generators_at_zero_is_the_origin():
    code, text = run_command(["generators", "P1", "--n", "0", "--format", "json"])
    assert code == 0
    payload = json.loads(text)
    assert payload["count"] == 1
    assert set(payload["generators"][0]["values"].values()) == {0}


def test_file_input(tmp_path):
    doc = tmp_path / "mine.json"
    doc.write_text(P1_TEXT)
    code, text = run_command(["spread", str(doc), "--eps", "-1"])
    assert code == 0
    assert text == "3"


def test_builtin_stem_resolution(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, text = run_command(["spread", "P1.json", "--eps", "-1"])
    assert code == 0
    assert text == "3"


def test_output_is_deterministic():
    for argv in (
        ["analyze", "P2"],
        ["generators", "P1", "--n", "-2", "--format", "json"],
        ["polytope", "P3", "--eps", "-1", "--n", "2"],
        ["frobenius", "P1", "--prime", "2,3", "--emax", "2"],
    ):
        first = run_command(list(argv))
        second = run_command(list(argv))
        assert first == second


def test_selftest_passes(capsys):
    code = main(["selftest"])
    assert code == 0
    out = capsys.readouterr().out
    assert "ok" in out
    assert "FAIL" not in out


def test_selftest_detects_breakage(monkeypatch):
    monkeypatch.setattr(cli, "dim_formula", lambda c: 99)
    code, text = run_command(["selftest"])
    assert code == 3
    assert "FAIL" in text
