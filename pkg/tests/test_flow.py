# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aitk.unicast import load_network
from aitk.unicast.flow import bfs_path, decompose_flow, max_flow, min_cut, reachable
from aitk.unicast.graph import Dag, unit_augmented


def diamond():
    return Dag([("s", "a"), ("s", "b"), ("a", "t"), ("b", "t")])


def labels(dag, edges):
    return sorted(dag.edge_label(edge) for edge in edges)


def test_single_edge():
    dag = Dag([("s", "t")])
    value, family = max_flow(dag, 0, 1)

    assert value == 1
    assert family.k == 1
    assert family[0].edges == (0,)


def test_diamond():
    dag = diamond()
    value, family = max_flow(dag, dag.node("s"), dag.node("t"))

    assert value == 2
    assert family.is_valid()
    assert sorted(path.describe() for path in family) == ["s,a,t", "s,b,t"]
    assert labels(dag, min_cut(dag, dag.node("s"), dag.node("t")).edges) == ["(s,a)", "(s,b)"]


def test_parallel_edges():
    dag = Dag([("s", "a"), ("a", "t"), ("a", "t")])

    assert max_flow(dag, dag.node("s"), dag.node("t"))[0] == 1
    assert max_flow(dag, dag.node("a"), dag.node("t"))[0] == 2


def test_min_cut_is_source_side_minimal():
    dag = Dag([("s", "a"), ("a", "t")])
    cut = min_cut(dag, dag.node("s"), dag.node("t"))

    assert labels(dag, cut.edges) == ["(s,a)"]
    assert cut.source_side == {dag.node("s")}
    assert cut.capacity == 1


def test_disconnected():
    dag = Dag([("s", "a"), ("b", "t")])
    s, t = dag.node("s"), dag.node("t")
    value, family = max_flow(dag, s, t)
    cut = min_cut(dag, s, t)

    assert value == 0
    assert family.k == 0
    assert cut.capacity == 0
    assert cut.source_side == {s, dag.node("a")}
    assert bfs_path(dag, s, t) is None
    assert decompose_flow(dag, s, t, 0).k == 0


def test_decompose_flow():
    dag = diamond()
    family = decompose_flow(dag, dag.node("s"), dag.node("t"), 2)
    assert family.k == 2
    assert family.is_valid()

    with pytest.raises(ValueError):
        decompose_flow(dag, dag.node("s"), dag.node("t"), 3)


def test_butterfly_session_path():
    unit = unit_augmented(load_network("butterfly", quiet=True))
    value, family = max_flow(unit.dag, unit.s1, unit.t1)

    assert value == 1
    assert family[0].describe() == "s1',s1,v1,v3,v4,v6,t1,t1'"


def test_removed_edges_and_limit():
    dag = diamond()
    s, t = dag.node("s"), dag.node("t")

    assert max_flow(dag, s, t, removed=frozenset([dag.edge("s", "a")]))[0] == 1
    assert max_flow(dag, s, t, limit=1)[0] == 1
    assert reachable(dag, {s}, frozenset([0, 1])) == {s}
    assert bfs_path(dag, s, t, frozenset([0])).describe() == "s,b,t"
    assert len(bfs_path(dag, s, s)) == 0


@st.composite
def flow_networks(draw):
    count = draw(st.integers(min_value=2, max_value=8))
    pairs = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=count - 1),
                st.integers(min_value=0, max_value=count - 1),
            ).filter(lambda pair: pair[0] != pair[1]),
            min_size=1,
            max_size=16,
        )
    )
    edges = [("n%s" % min(pair), "n%s" % max(pair)) for pair in pairs]
    dag = Dag(edges, nodes=["n%s" % i for i in range(count)])
    return dag, 0, count - 1


@settings(max_examples=200, deadline=None)
@given(flow_networks())
def test_agrees_with_networkx(network):
    dag, s, t = network
    graph = nx.DiGraph()
    graph.add_nodes_from(range(dag.num_nodes))
    for tail, head in zip(dag.tails, dag.heads):
        if graph.has_edge(tail, head):
            graph[tail][head]["capacity"] += 1
        else:
            graph.add_edge(tail, head, capacity=1)
    expected = nx.maximum_flow_value(graph, s, t)
    value, family = max_flow(dag, s, t)

    assert value == expected
    assert family.k == value
    assert family.is_valid()
    cut = min_cut(dag, s, t)
    assert cut.capacity == value
    assert max_flow(dag, s, t, removed=cut.edges)[0] == 0


@settings(max_examples=100, deadline=None)
@given(flow_networks())
def test_deleting_an_edge_costs_at_most_one(network):
    dag, s, t = network
    value, _ = max_flow(dag, s, t)
    for edge in range(dag.num_edges):
        assert max_flow(dag, s, t, removed=frozenset([edge]))[0] in (value, value - 1)
