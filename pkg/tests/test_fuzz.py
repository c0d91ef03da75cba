# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

import json

import pytest

from aitk.unicast import load_network
from aitk.unicast.fuzz import (
    FuzzReport,
    Mismatch,
    check_a_sets,
    check_instance,
    random_spec,
    run_fuzz,
)
from aitk.unicast.generator import generate
from aitk.unicast.oracle import SKIP, SearchBudget


def no_such_edge(dag, s, t):
    return frozenset([-1])


def test_nothing_to_check():
    report = run_fuzz(0, quiet=True)
    assert report.ok
    assert report.branches == {}


def test_small_run():
    report = run_fuzz(25, max_nodes=7, max_edges=10, seed=100, quiet=True)

    assert report.ok, [mismatch.to_json() for mismatch in report.mismatches]
    assert sum(report.branches.values()) == 25


def test_random_spec():
    assert random_spec(5).to_json() == random_spec(5).to_json()
    for seed in range(50):
        spec = random_spec(seed, max_nodes=6, max_edges=8)
        assert spec.seed == seed
        assert 3 <= spec.nodes <= 6
        assert 2 <= spec.edges <= 8


def test_template_specs():
    tags = set()
    for seed in range(40):
        spec = random_spec(seed, template_rate=1.0)
        assert spec.template is not None
        assert spec.nodes <= 10
        assert spec.edges <= 16
        tags.add(spec.template)
        assert random_spec(seed, template_rate=0.0).template is None
    assert tags == {"A", "B", "C", "D"}
    assert random_spec(0, max_nodes=6, template_rate=1.0).template == "A"


def test_template_run_counts_witnesses(capsys):
    report = run_fuzz(12, seed=50, template_rate=1.0, quiet=True)

    assert report.ok, [mismatch.to_json() for mismatch in report.mismatches]
    assert sum(report.templates.values()) == 12
    assert report.to_json()["templates"] == report.templates
    report.info()
    assert "template " in capsys.readouterr().out


def test_broken_a_set_is_caught():
    budget = SearchBudget(abort=SKIP)
    problems = check_a_sets(load_network("grail", quiet=True), budget, no_such_edge)
    assert problems
    assert {check for check, _ in problems} == {"a-set"}

    report = run_fuzz(30, seed=3, a_set_function=no_such_edge, quiet=True)
    assert not report.ok
    assert {mismatch.check for mismatch in report.mismatches} == {"a-set"}


def test_check_instance():
    budget = SearchBudget(abort=SKIP)
    for name in ("bowtie", "butterfly", "grail", "grail-swapped", "wide-grail", "disjoint"):
        verdict, oracle, problems, tag = check_instance(load_network(name, quiet=True), budget)
        assert problems == [], name
        assert oracle == verdict.solvable
        assert (tag is None) == (not verdict.solvable)


def test_report(tmp_path, capsys):
    spec = random_spec(9)
    report = FuzzReport(3, 9, 10, 16)
    report.branches["no-cross-path"] = 3
    report.add(Mismatch(0, spec, "a-set", "session 1: fast [], deletion [0]", generate(spec)))
    report.info()
    out = capsys.readouterr().out
    assert "Checked 3 instance(s) from seed 9" in out
    assert "MISMATCH #0 (a-set)" in out
    assert "reproduce with: gen --nodes %s --edges %s --seed 9" % (spec.nodes, spec.edges) in out

    filename = str(tmp_path / "report.json")
    report.save(filename)
    with open(filename) as fp:
        config = json.load(fp)
    assert config["count"] == 3
    assert config["branches"] == {"no-cross-path": 3}
    first = config["mismatches"][0]
    assert first["network"][0].startswith("pairs ")
    assert first["gen"]["seed"] == 9


def test_bad_arguments():
    with pytest.raises(ValueError):
        run_fuzz(-1, quiet=True)
    with pytest.raises(ValueError):
        run_fuzz(1, max_nodes=2, quiet=True)
    with pytest.raises(ValueError):
        run_fuzz(1, max_edges=1, quiet=True)
    assert repr(FuzzReport(1, 0, 3, 2)) == "<FuzzReport count=1, mismatches=0>"
