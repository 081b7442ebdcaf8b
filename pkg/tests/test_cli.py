import json

import pytest

from partialskew.cli import main
from partialskew.errors import ParseError
from partialskew.report import emit_report, parse_structured
from partialskew.scenarios import (bundled_fixtures, fixture_path,
                                   run_scenario)

S1_DOC = {
    "name": "s1-file",
    "field": "q",
    "group": {"cyclic": 2},
    "action": {"trivial_split": {"left": {"product_of_fields": 1},
                                 "right": {"product_of_fields": 1}}},
    "suites": ["lemma1", "grading", "duality"],
    "expect": {"skew_dimension": 3, "kernel_dimension": 1},
}


def _write(tmp_path, doc, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_verify_pass(tmp_path, capsys):
    path = _write(tmp_path, S1_DOC)
    assert main(["verify", path]) == 0
    out = capsys.readouterr().out
    assert "result: PASS" in out and "duality.kernel_formula" in out


def test_verify_structured_deterministic(tmp_path):
    path = _write(tmp_path, S1_DOC)
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["verify", path, "--format", "structured", "--out", str(out1)]) == 0
    assert main(["verify", path, "--format", "structured", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_structured_round_trip(tmp_path):
    report = run_scenario(_write(tmp_path, S1_DOC))
    text = emit_report(report, "structured")
    parsed = parse_structured(text)
    assert parsed == report.canonical()
    assert emit_report(parsed, "structured") == text


def test_expectation_mismatch_exits_one(tmp_path, capsys):
    doc = dict(S1_DOC)
    doc["expect"] = {"kernel_dimension": 2}
    path = _write(tmp_path, doc)
    assert main(["verify", path]) == 1
    out = capsys.readouterr().out
    assert "ExpectationMismatch" in out and "expect.kernel_dimension" in out


def test_parse_error_exits_two(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["verify", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_validation_error_exits_two(tmp_path, capsys):
    doc = {
        "name": "bad",
        "group": {"cyclic": 2},
        "algebra": {"product_of_fields": 2},
        "action": {"explicit": {
            "idempotents": [[1, 1], [1, 1]],
            "beta": [[[1, 0], [0, 1]], [[1, 0], [0, 0]]],
        }},
        "suites": ["lemma1"],
    }
    assert main(["verify", _write(tmp_path, doc)]) == 2
    assert "isomorphism" in capsys.readouterr().err


def test_field_override(tmp_path):
    path = _write(tmp_path, S1_DOC)
    assert main(["verify", path, "--field", "fp:5"]) == 0
    report = run_scenario(path, field_override="fp:5")
    assert report.passed()


def test_suite_selection(tmp_path, capsys):
    path = _write(tmp_path, S1_DOC)
    assert main(["verify", path, "--suite", "lemma1"]) == 0
    out = capsys.readouterr().out
    assert "lemma1.multiplicative" in out
    assert "duality.kernel_formula" not in out
    # expectations of skipped suites are marked skipped, not failed
    assert "skipp" in out


def test_hopf_lift_flag(tmp_path, capsys):
    doc = dict(S1_DOC)
    doc.pop("expect")
    doc["suites"] = ["lemma1"]
    doc["hopf_lift"] = True
    assert main(["verify", _write(tmp_path, doc)]) == 0
    out = capsys.readouterr().out
    assert "opduality.corner_membership" in out


def test_exact_rational_strings(tmp_path):
    doc = {
        "name": "halves",
        "group": {"table": [[0, 1], [1, 0]], "labels": ["e", "g"]},
        "algebra": {
            "constants": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1/2", "0"]]],
            "unit": ["1", "0"],
        },
        "action": {"explicit": {
            "idempotents": [["1", "0"], ["1", "0"]],
            "beta": [[["1", "0"], ["0", "1"]], [["1", "0"], ["0", "-1"]]],
        }},
        "suites": ["lemma1", "grading", "duality"],
    }
    assert main(["verify", _write(tmp_path, doc)]) == 0


def test_empty_report_renders_header_only():
    from partialskew.report import Report
    text = emit_report(Report("empty", []), "text")
    lines = text.strip().splitlines()
    assert lines[0] == "scenario: empty"
    assert lines[1].startswith("check") and "result: PASS" in lines[-1]
    parsed = parse_structured(emit_report(Report("empty", []), "structured"))
    assert parsed == Report("empty", [])


def test_list_suites(capsys):
    assert main(["list-suites"]) == 0
    out = capsys.readouterr().out
    for name in ("lemma1", "grading", "duality", "separability", "hopf", "centers"):
        assert name in out


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "selftest: PASS" in out
    for name in bundled_fixtures():
        assert name in out


def test_bundled_corpus_contents():
    names = bundled_fixtures()
    assert names == ["global_z2_swap.json", "s1.json", "split_field2_z3.json",
                     "split_m2_z2.json", "z3_restrict.json"]
    with pytest.raises(ParseError):
        fixture_path("missing.json")


def test_run_scenario_validation_passthrough(tmp_path):
    doc = dict(S1_DOC)
    doc["suites"] = ["nonsense"]
    with pytest.raises(ParseError):
        run_scenario(_write(tmp_path, doc))
    doc2 = dict(S1_DOC)
    del doc2["action"]
    with pytest.raises(ParseError):
        run_scenario(_write(tmp_path, doc2))


def test_explicit_hopf_scenario(tmp_path, capsys):
    doc = dict(S1_DOC)
    doc.pop("expect")
    doc["suites"] = ["lemma1"]
    doc["hopf"] = {
        "constants": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
        "unit": [1, 0],
        "comultiplication": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]],
        "counit": [1, 1],
        "antipode": [[1, 0], [0, 1]],
    }
    path = _write(tmp_path, doc)
    assert main(["verify", path]) == 0
    out = capsys.readouterr().out
    assert "hopf.explicit_axioms" in out and "hopf.explicit_operator_reps" in out
