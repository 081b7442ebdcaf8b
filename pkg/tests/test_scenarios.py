import pytest

from partialskew.errors import ParseError
from partialskew.fields import GF, QQ
from partialskew.scenarios import build_algebra, build_group, run_scenario


def test_group_spec_dispatch():
    assert build_group({"cyclic": 4}).order == 4
    assert build_group({"symmetric": 3}).order == 6
    prod = build_group({"direct_product": [{"cyclic": 2}, {"cyclic": 3}]})
    assert prod.order == 6 and prod.is_abelian()
    explicit = build_group({"table": [[0, 1], [1, 0]], "labels": ["e", "t"]})
    assert explicit.labels == ("e", "t")
    with pytest.raises(ParseError):
        build_group({"dihedral": 4})
    with pytest.raises(ParseError):
        build_group({"direct_product": [{"cyclic": 2}]})


def test_algebra_spec_dispatch():
    assert build_algebra(QQ, {"product_of_fields": 3}).dim == 3
    assert build_algebra(QQ, {"matrix": {"size": 3}}).dim == 9
    prod = build_algebra(QQ, {"direct_product": [
        {"matrix": {"size": 2}}, {"product_of_fields": 1}]})
    assert prod.dim == 5
    explicit = build_algebra(GF(5), {
        "constants": [[[1, 0], [0, 1]], [[0, 1], [2, 0]]],
        "unit": [1, 0],
    })
    assert explicit.dim == 2
    with pytest.raises(ParseError):
        build_algebra(QQ, {"quaternions": True})
    with pytest.raises(ParseError):
        build_algebra(QQ, {"product_of_fields": 0})
    with pytest.raises(ParseError):
        build_algebra(QQ, {"constants": [[[0.5]]], "unit": [1]})


def test_scenario_dict_source():
    # run_scenario also accepts an already-parsed document
    report = run_scenario({
        "name": "inline",
        "group": {"cyclic": 2},
        "action": {"trivial_split": {"left": {"product_of_fields": 1},
                                     "right": {"product_of_fields": 1}}},
        "suites": ["lemma1", "grading"],
        "expect": {"skew_dimension": 3},
    })
    assert report.passed() and report.scenario == "inline"


def test_scenario_missing_group():
    with pytest.raises(ParseError):
        run_scenario({"name": "x", "action": {"trivial_split": {
            "left": {"product_of_fields": 1},
            "right": {"product_of_fields": 1}}}})


def test_scenario_field_object_form():
    report = run_scenario({
        "name": "overfp",
        "field": {"prime": 3},
        "group": {"cyclic": 2},
        "action": {"trivial_split": {"left": {"product_of_fields": 1},
                                     "right": {"product_of_fields": 1}}},
        "suites": ["lemma1"],
    })
    assert report.passed()
