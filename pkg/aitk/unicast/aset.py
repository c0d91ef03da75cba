# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
A-sets: the union of all minimum s-t cuts, which is also the set of
edges lying on every maximum edge-disjoint path family, which is also
the set of edges whose deletion lowers the maximum flow.
"""

import networkx as nx

from .errors import BridgeFlowViolation, FlowNotOne, HypothesisViolated, NoFlow
from .flow import EMPTY, find_flow, max_flow
from .graph import Path, path_concat


class ASet:
    """
    The A-set of the pair (s, t), in topological order.
    """

    def __init__(self, dag, s, t, flow, edges):
        self.dag = dag
        self.s = s
        self.t = t
        self.flow = flow
        self.edges = tuple(dag.sort_edges(edges))
        self._edge_set = frozenset(self.edges)

    def __repr__(self):
        return "<ASet %s=>%s f=%r: %s>" % (
            self.dag.labels[self.s],
            self.dag.labels[self.t],
            self.flow,
            " ".join(self.dag.edge_label(edge) for edge in self.edges),
        )

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge):
        return edge in self._edge_set

    def __getitem__(self, index):
        return self.edges[index]

    def __eq__(self, other):
        return (
            isinstance(other, ASet)
            and (self.s, self.t, self.flow, self.edges)
            == (other.s, other.t, other.flow, other.edges)
        )

    def __hash__(self):
        return hash((self.s, self.t, self.flow, self.edges))

    @property
    def edge_set(self):
        return self._edge_set

    def index(self, edge):
        return self.edges.index(edge)

    def describe(self):
        return " ".join(self.dag.edge_label(edge) for edge in self.edges)


def a_set(dag, s, t, removed=EMPTY):
    """
    Compute the A-set of (s, t) from a single maximum flow.

    An edge (u, v) carrying flow is in every maximum flow exactly when
    the residual graph has no u -> v path other than through the edge
    itself. The residual graph always has the reverse arc v -> u, so
    that is the same as u and v lying in different strongly connected
    components.

    Raises NoFlow when s cannot reach t.
    """
    value, flow = find_flow(dag, s, t, removed)
    if value == 0:
        raise NoFlow("no flow from %r to %r" % (dag.labels[s], dag.labels[t]))
    residual = nx.DiGraph()
    residual.add_nodes_from(range(dag.num_nodes))
    for edge, (tail, head) in enumerate(zip(dag.tails, dag.heads)):
        if edge in removed:
            continue
        if flow[edge]:
            residual.add_edge(head, tail)
        else:
            residual.add_edge(tail, head)
    component = {}
    for index, nodes in enumerate(nx.strongly_connected_components(residual)):
        for node in nodes:
            component[node] = index
    members = [
        edge
        for edge in range(dag.num_edges)
        if flow[edge] and component[dag.tails[edge]] != component[dag.heads[edge]]
    ]
    return ASet(dag, s, t, value, members)


def a_set_by_deletion(dag, s, t, removed=EMPTY):
    """
    Compute the A-set of (s, t) by deleting each edge in turn and
    re-running max flow. Slow; used as a reference.
    """
    value, _ = find_flow(dag, s, t, removed)
    if value == 0:
        raise NoFlow("no flow from %r to %r" % (dag.labels[s], dag.labels[t]))
    members = []
    for edge in range(dag.num_edges):
        if edge in removed:
            continue
        reduced, _ = find_flow(dag, s, t, removed | {edge}, limit=value)
        if reduced == value - 1:
            members.append(edge)
    return ASet(dag, s, t, value, members)


class ChainDecomposition:
    """
    The sub-network built from the A-set of a flow-one pair: runs of
    consecutive A-set edges joined by edge-disjoint 2-path bridges.

    runs[i] is a Path; bridges[i] is the PathFamily (k=2) from the head
    of runs[i] to the tail of runs[i + 1].
    """

    def __init__(self, aset, runs, bridges):
        self.aset = aset
        self.dag = aset.dag
        self.s = aset.s
        self.t = aset.t
        self.runs = tuple(runs)
        self.bridges = tuple(bridges)

    def __repr__(self):
        return "<ChainDecomposition %s=>%s runs=%r, bridges=%r>" % (
            self.dag.labels[self.s],
            self.dag.labels[self.t],
            len(self.runs),
            len(self.bridges),
        )

    def branch(self, index, choice=0):
        return self.bridges[index].paths[choice]

    def _join(self, first_run, last_run, choices):
        pieces = [self.runs[first_run]]
        for index in range(first_run, last_run):
            choice = choices[index] if choices is not None else 0
            pieces.append(self.branch(index, choice))
            pieces.append(self.runs[index + 1])
        return path_concat(*pieces)

    def assemble(self, choices=None):
        """
        The s-t path taking branch choices[i] across bridge i
        (the first branch when no choices are given).
        """
        return self._join(0, len(self.runs) - 1, choices)

    def prefix(self, index, choices=None):
        """
        The path from s through runs[index], ending where bridge
        `index` starts.
        """
        return self._join(0, index, choices)

    def suffix(self, index, choices=None):
        """
        The path from where bridge `index` ends, through to t.
        """
        return self._join(index + 1, len(self.runs) - 1, choices)

    def bridge_of(self, edge):
        """
        Index of the bridge holding `edge`, or None.
        """
        for index, bridge in enumerate(self.bridges):
            if edge in bridge.edge_set():
                return index
        return None


def chain_decomposition(dag, s, t, aset=None):
    """
    Split the A-set of a flow-one pair into runs and bridge it.

    Args:
        * dag: (Dag) the network
        * s, t: (int) node ids; s must have one out-edge and t one in-edge
        * aset: (ASet, optional) a precomputed A-set of (s, t)
    """
    if len(dag.out_edges[s]) != 1 or len(dag.in_edges[t]) != 1:
        raise HypothesisViolated(
            "chain decomposition needs a single out-edge at %r and a single in-edge at %r"
            % (dag.labels[s], dag.labels[t])
        )
    if aset is None:
        aset = a_set(dag, s, t)
    if aset.flow != 1:
        raise FlowNotOne(
            "flow from %r to %r is %r, not 1" % (dag.labels[s], dag.labels[t], aset.flow)
        )
    runs = [[aset.edges[0]]]
    for edge in aset.edges[1:]:
        if dag.tails[edge] == dag.heads[runs[-1][-1]]:
            runs[-1].append(edge)
        else:
            runs.append([edge])
    runs = [Path(dag, run) for run in runs]
    bridges = []
    for before, after in zip(runs, runs[1:]):
        value, family = max_flow(dag, before.head, after.tail, limit=2)
        if value < 2:
            raise BridgeFlowViolation(
                "gap %r -> %r has flow %r; A-set is inconsistent"
                % (dag.labels[before.head], dag.labels[after.tail], value)
            )
        bridges.append(family)
    return ChainDecomposition(aset, runs, bridges)
