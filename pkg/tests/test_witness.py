# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

import os

import pytest

from aitk.unicast import load_network
from aitk.unicast.errors import HypothesisViolated, NotSolvable
from aitk.unicast.graph import Path, unit_augmented, validate_and_build
from aitk.unicast.netfile import read_instance
from aitk.unicast.solvability import shared_a_set
from aitk.unicast.templates import BOTTLENECK, BUTTERFLY, DISJOINT, get_template, swap_sessions
from aitk.unicast.witness import (
    Embedding,
    avoiding_path,
    disjoint_st_paths,
    embed_bottleneck_skeleton,
    embed_case_disjoint_asets,
    embed_case_flow_ge2,
    embed_case_shared_aset,
    find_embedding,
    identity_embedding,
    verify_embedding,
)

HERE = os.path.abspath(os.path.dirname(__file__))


def network_file(name):
    return read_instance(os.path.join(HERE, "networks", name + ".txt"))


def test_catalog():
    assert get_template() == ["A", "B", "C", "D"]
    assert len(get_template("B").edges) == 11
    assert len(get_template("D").edges) == 11
    assert get_template("C").edges == tuple(swap_sessions(get_template("B").edges))
    assert get_template("bottleneck") is BOTTLENECK
    with pytest.raises(ValueError):
        get_template("E")


def test_butterfly_is_identity():
    inst = load_network("butterfly", quiet=True)
    template, embedding = find_embedding(inst)

    assert template.tag == "D"
    assert verify_embedding(embedding.instance, template, embedding)
    assert embedding.paths == identity_embedding(inst, template).paths
    assert embedding.to_text().splitlines()[0] == "(s1,v1) -> s1',s1,v1"


def test_grail_is_identity():
    inst = load_network("grail", quiet=True)
    template, embedding = embed_case_disjoint_asets(inst)

    assert template.tag == "B"
    assert len(embedding.paths) == 11
    assert embedding.paths == identity_embedding(inst, template).paths


def test_swapped_grail():
    template, embedding = find_embedding(load_network("grail-swapped", quiet=True))
    assert template.tag == "C"
    assert verify_embedding(embedding.instance, template, embedding)

    template, embedding = find_embedding(network_file("mirrored-grail"))
    assert template.tag == "C"
    assert verify_embedding(embedding.instance, template, embedding)


def test_disjoint():
    inst = load_network("disjoint", quiet=True)
    template, embedding = find_embedding(inst)

    assert template.tag == "A"
    assert embedding.paths["s1", "t1"].describe() == "s1',s1,t1,t1'"
    assert embedding.paths["s2", "t2"].describe() == "s2',s2,t2,t2'"
    side, path = avoiding_path(inst)
    assert side == 1
    assert path.describe() == "s1',s1,t1,t1'"


def test_flow_ge2():
    template, embedding = embed_case_flow_ge2(network_file("fat-session"))
    assert template.tag == "A"
    assert verify_embedding(embedding.instance, template, embedding)

    template, embedding = embed_case_flow_ge2(load_network("wide-grail", quiet=True))
    assert template.tag == "B"
    assert verify_embedding(embedding.instance, template, embedding)
    assert embedding.paths["v1", "v4"].describe() == "s1,z,w"
    assert embedding.paths["v3", "v4"].describe() == "y,w"

    with pytest.raises(HypothesisViolated):
        embed_case_flow_ge2(load_network("butterfly", quiet=True))


def test_subdivided_butterfly():
    template, embedding = find_embedding(network_file("subdivided-butterfly"))

    assert template.tag == "D"
    assert verify_embedding(embedding.instance, template, embedding)
    for (tail, head), path in embedding.paths.items():
        terminals = (tail in ("s1", "s2")) + (head in ("t1", "t2"))
        assert len(path) == 2 + terminals


def test_avoiding_path_misses_other_aset():
    inst = load_network("grail", quiet=True)
    unit, a11, a22, _ = shared_a_set(inst)
    side, path = avoiding_path(inst)

    opposite = a22 if side == 1 else a11
    assert not path.edge_set & opposite.edge_set
    assert path.tail == unit.source(side)
    assert path.head == unit.sink(side)
    with pytest.raises(HypothesisViolated):
        avoiding_path(load_network("bowtie", quiet=True))


def test_disjoint_st_paths():
    p, q = disjoint_st_paths(load_network("butterfly", quiet=True))
    assert p.describe() == "s1',s1,v1,v3,v4,v6,t1,t1'"
    assert q.describe() == "s2',s2,v2,v3,v4,v5,t2,t2'"

    inst = load_network("bowtie", quiet=True)
    unit, _, _, shared = shared_a_set(inst)
    p, q = disjoint_st_paths(inst)
    assert p.edge_set & q.edge_set == {unit.dag.edge("a", "b")}
    assert shared == [unit.dag.edge("a", "b")]


def test_shared_case_needs_cross_paths():
    inst = load_network("bowtie", quiet=True)

    with pytest.raises(HypothesisViolated):
        embed_case_shared_aset(inst)
    with pytest.raises(NotSolvable):
        find_embedding(inst)
    with pytest.raises(HypothesisViolated):
        embed_case_shared_aset(load_network("grail", quiet=True))


def test_bottleneck_skeleton():
    template, embedding = embed_bottleneck_skeleton(load_network("bowtie", quiet=True))
    dag = embedding.instance.dag

    assert template is BOTTLENECK
    assert embedding.paths["v1", "v2"].describe() == "a,b"
    assert verify_embedding(embedding.instance, template, embedding)
    assert dag.edge("a", "b") in embedding.image_edges()


def test_verify_embedding_failures():
    inst = load_network("butterfly", quiet=True)
    unit = unit_augmented(inst)
    good = identity_embedding(inst, BUTTERFLY)

    paths = dict(good.paths)
    del paths["v3", "v4"]
    check = verify_embedding(unit, BUTTERFLY, Embedding(BUTTERFLY, paths))
    assert not check
    assert check.condition == 0

    paths = dict(good.paths)
    paths["v3", "v4"] = Path(unit.dag, [], start=unit.dag.node("v3"))
    check = verify_embedding(unit, BUTTERFLY, Embedding(BUTTERFLY, paths))
    assert not check
    assert check.condition == 0
    assert "no edges" in check.reason

    paths = dict(good.paths)
    paths["s1", "v1"] = Path(unit.dag, [unit.S(2), unit.dag.edge("s2", "v2")])
    check = verify_embedding(unit, BUTTERFLY, Embedding(BUTTERFLY, paths))
    assert not check
    assert check.condition == 1

    paths = dict(good.paths)
    paths["v5", "t2"] = Path(unit.dag, [unit.dag.edge("v6", "t1"), unit.T(1)])
    check = verify_embedding(unit, BUTTERFLY, Embedding(BUTTERFLY, paths))
    assert not check
    assert check.condition == 2

    paths = dict(good.paths)
    paths["v1", "v3"] = Path(unit.dag, [unit.dag.edge("v1", "v5")])
    check = verify_embedding(unit, BUTTERFLY, Embedding(BUTTERFLY, paths))
    assert not check
    assert check.condition == 3


def test_shared_edge_is_condition_4():
    bowtie = unit_augmented(load_network("bowtie", quiet=True))
    dag = bowtie.dag
    ab = dag.edge("a", "b")
    paths = {
        ("s1", "t1"): Path(dag, [bowtie.S(1), dag.edge("s1", "a"), ab, dag.edge("b", "t1"), bowtie.T(1)]),
        ("s2", "t2"): Path(dag, [bowtie.S(2), dag.edge("s2", "a"), ab, dag.edge("b", "t2"), bowtie.T(2)]),
    }
    check = verify_embedding(bowtie, DISJOINT, Embedding(DISJOINT, paths))

    assert not check
    assert check.condition == 4
    assert check.edge == ab


def test_crossing_switches_branches_at_a_shared_node():
    # both session 1 routes pass through x; session 2 arrives on one
    # route and leaves on the other right at x
    inst = validate_and_build(
        [
            ("s1", "a"),
            ("a", "x"),
            ("x", "c"),
            ("c", "t1"),
            ("s1", "b"),
            ("b", "x"),
            ("x", "d"),
            ("d", "t1"),
            ("s2", "a"),
            ("d", "t2"),
        ],
        ["s1", "t1", "s2", "t2"],
    )
    template, embedding = embed_case_flow_ge2(inst)

    assert template.tag == "A"
    assert verify_embedding(embedding.instance, template, embedding)
    assert all(len(path) > 0 for path in embedding.paths.values())
    assert embedding.paths["s2", "t2"].describe() == "s2',s2,a,x,d,t2,t2'"
