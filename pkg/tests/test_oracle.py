# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

import pytest

from aitk.unicast import load_network
from aitk.unicast.aset import a_set
from aitk.unicast.coding import validate_code
from aitk.unicast.errors import BudgetExceeded, NoFlow
from aitk.unicast.graph import Dag, unit_augmented
from aitk.unicast.oracle import (
    SKIP,
    SearchBudget,
    count_gf2_codes,
    cut_a_set,
    enumerate_all_cuts,
    enumerate_path_families,
    enumerate_paths,
    exhaustive_gf2_solvable,
    family_a_set,
    minimum_cuts,
    search_gf2_code,
)
from aitk.unicast.templates import get_template


def point_to_point(name):
    inst = load_network(name, quiet=True)
    return inst.dag, inst.s1, inst.t1


def labels(dag, edges):
    return sorted(dag.edge_label(edge) for edge in edges)


def test_path_families():
    dag, s, t = point_to_point("diamond")
    assert len(enumerate_paths(dag, s, t)) == 2
    assert len(enumerate_path_families(dag, s, t, 2)) == 1
    assert len(family_a_set(dag, s, t)) == 4

    dag, s, t = point_to_point("par")
    assert len(enumerate_path_families(dag, s, t, 1)) == 2
    assert labels(dag, family_a_set(dag, s, t)) == ["(s,a)"]

    dag, s, t = point_to_point("chain")
    assert len(enumerate_path_families(dag, s, t, 1)) == 1
    assert labels(dag, family_a_set(dag, s, t)) == ["(a,t)", "(s,a)"]


def test_family_a_set_needs_flow():
    dag = Dag([("s", "a"), ("b", "t")])
    with pytest.raises(NoFlow):
        family_a_set(dag, dag.node("s"), dag.node("t"))


def test_cuts():
    dag, s, t = point_to_point("chain")
    assert labels(dag, cut_a_set(dag, s, t)) == ["(a,t)", "(s,a)"]

    dag, s, t = point_to_point("diamond")
    cuts = enumerate_all_cuts(dag, s, t)
    assert len(cuts) == 4
    assert len(minimum_cuts(cuts)) == 4
    assert {cut.capacity for cut in cuts} == {2}
    assert cut_a_set(dag, s, t) == a_set(dag, s, t).edge_set

    dag = Dag([("s", "a"), ("b", "t")])
    cuts = enumerate_all_cuts(dag, dag.node("s"), dag.node("t"))
    assert minimum_cuts(cuts)[0].capacity == 0


def test_butterfly_a_sets_agree():
    unit = unit_augmented(load_network("butterfly", quiet=True))
    budget = SearchBudget(max_nodes=20, max_edges=20)
    fast = a_set(unit.dag, unit.s1, unit.t1).edge_set

    assert family_a_set(unit.dag, unit.s1, unit.t1, budget) == fast
    assert cut_a_set(unit.dag, unit.s1, unit.t1, budget) == fast


def test_budget_exceeded():
    dag, s, t = point_to_point("diamond")

    with pytest.raises(BudgetExceeded):
        enumerate_paths(dag, s, t, SearchBudget(max_nodes=3))
    with pytest.raises(BudgetExceeded):
        enumerate_paths(dag, s, t, SearchBudget(max_enumeration=1))
    with pytest.raises(BudgetExceeded):
        enumerate_all_cuts(dag, s, t, SearchBudget(max_edges=3))
    assert enumerate_paths(dag, s, t, SearchBudget(max_nodes=3, abort=SKIP)) is None
    assert family_a_set(dag, s, t, SearchBudget(max_enumeration=1, abort=SKIP)) is None
    assert cut_a_set(dag, s, t, SearchBudget(max_nodes=3, abort=SKIP)) is None

    butterfly = load_network("butterfly", quiet=True)
    with pytest.raises(BudgetExceeded):
        exhaustive_gf2_solvable(butterfly, SearchBudget(max_code_edges=5))
    assert exhaustive_gf2_solvable(butterfly, SearchBudget(max_code_edges=5, abort=SKIP)) is None


def test_search_budget_settings():
    budget = SearchBudget(max_nodes=5)
    assert budget.max_nodes == 5
    assert budget.max_edges == 18
    assert repr(budget).startswith("<SearchBudget nodes=5")

    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(max_code_edges=-1)
    with pytest.raises(ValueError):
        SearchBudget(abort="explode")


def test_exhaustive_gf2():
    assert exhaustive_gf2_solvable(load_network("bowtie", quiet=True)) is False
    assert exhaustive_gf2_solvable(load_network("butterfly", quiet=True)) is True
    assert exhaustive_gf2_solvable(load_network("disjoint", quiet=True)) is True
    assert exhaustive_gf2_solvable(load_network("grail", quiet=True)) is True
    assert search_gf2_code(load_network("bowtie", quiet=True)) is None


def test_search_gf2_code_is_valid():
    for name in ("butterfly", "grail", "grail-swapped", "wide-grail", "disjoint"):
        inst = load_network(name, quiet=True)
        code = search_gf2_code(inst)
        assert validate_code(unit_augmented(inst), code), name


def test_templates_have_one_code():
    for tag in get_template():
        assert count_gf2_codes(get_template(tag).as_instance()) == 1, tag
    assert count_gf2_codes(load_network("bowtie", quiet=True)) == 0
