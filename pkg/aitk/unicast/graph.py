# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Directed acyclic multigraphs, 2-pair unicast instances, and the
path section/combination calculus.

Nodes and edges get dense integer ids at build time: nodes in the
order they first appear (explicit node list first, then the edge
list), edges in list order. Every tie in this package is broken by
the smallest id.
"""

from collections import namedtuple

import networkx as nx

from .errors import (
    AlreadyAugmented,
    AnchorNotOnPath,
    CycleDetected,
    DegenerateRoles,
    EdgeRepeated,
    EmptyNetwork,
    EndpointMismatch,
    HypothesisViolated,
    NotAPath,
    OrderViolation,
    UnknownNode,
)

ROLES = ("s1", "t1", "s2", "t2")
UNIT = "unit"
MAXFLOW_CAPACITY = "maxflow-capacity"
VALID_MODES = [UNIT, MAXFLOW_CAPACITY]


class Dag:
    """
    A directed acyclic multigraph with identified edges.
    """

    def __init__(self, edges, nodes=None):
        """
        Build a DAG from a list of edges.

        Args:
            * edges: (list) of (tail, head) node labels; repeats are parallel edges
            * nodes: (list, optional) labels to number first, in this order

        Raises CycleDetected if the edges contain a directed cycle.
        """
        self.labels = []
        self._index = {}
        for label in nodes or []:
            self._add_node(label)
        self.tails = []
        self.heads = []
        for tail, head in edges:
            self.tails.append(self._add_node(tail))
            self.heads.append(self._add_node(head))
        self.out_edges = [[] for _ in self.labels]
        self.in_edges = [[] for _ in self.labels]
        for edge, (tail, head) in enumerate(zip(self.tails, self.heads)):
            self.out_edges[tail].append(edge)
            self.in_edges[head].append(edge)
        self.order = self._topological_sort()
        self.rank = [0] * len(self.labels)
        for position, node in enumerate(self.order):
            self.rank[node] = position

    def _add_node(self, label):
        if label not in self._index:
            self._index[label] = len(self.labels)
            self.labels.append(label)
        return self._index[label]

    def _topological_sort(self):
        graph = self.to_networkx()
        try:
            return tuple(nx.lexicographical_topological_sort(graph))
        except nx.NetworkXUnfeasible:
            cycle = nx.find_cycle(graph)
            nodes = [self.labels[step[0]] for step in cycle]
            raise CycleDetected(nodes + nodes[:1])

    def __repr__(self):
        return "<Dag nodes=%r, edges=%r>" % (self.num_nodes, self.num_edges)

    def __eq__(self, other):
        return (
            isinstance(other, Dag)
            and self.labels == other.labels
            and self.tails == other.tails
            and self.heads == other.heads
        )

    def __hash__(self):
        return hash((tuple(self.labels), tuple(self.tails), tuple(self.heads)))

    @property
    def num_nodes(self):
        return len(self.labels)

    @property
    def num_edges(self):
        return len(self.tails)

    def node(self, label):
        """
        Get the id of the node with the given label.
        """
        if label not in self._index:
            raise UnknownNode(label)
        return self._index[label]

    def has_node(self, label):
        return label in self._index

    def label(self, node):
        return self.labels[node]

    def endpoints(self, edge):
        return self.tails[edge], self.heads[edge]

    def edge_label(self, edge):
        return "(%s,%s)" % (self.labels[self.tails[edge]], self.labels[self.heads[edge]])

    def find_edges(self, tail, head):
        """
        All ids of edges from the node labeled `tail` to the node
        labeled `head`, smallest first.
        """
        u = self.node(tail)
        v = self.node(head)
        return [edge for edge in self.out_edges[u] if self.heads[edge] == v]

    def edge(self, tail, head, index=0):
        """
        Get the id of an edge by its endpoint labels. Use `index` to
        pick among parallel edges.
        """
        edges = self.find_edges(tail, head)
        if index >= len(edges):
            raise ValueError("no edge %r -> %r (index %s)" % (tail, head, index))
        return edges[index]

    def edge_list(self):
        """
        The edges as (tail label, head label) pairs, in id order.
        """
        return [(self.labels[u], self.labels[v]) for u, v in zip(self.tails, self.heads)]

    def edge_order(self, removed=()):
        """
        Edge ids in topological order of their tails, ties by id.
        """
        return sorted(
            (edge for edge in range(self.num_edges) if edge not in removed),
            key=lambda edge: (self.rank[self.tails[edge]], edge),
        )

    def sort_edges(self, edges):
        return sorted(edges, key=lambda edge: (self.rank[self.tails[edge]], edge))

    def to_networkx(self):
        """
        Return the DAG as a networkx.MultiDiGraph keyed by edge id.
        """
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.num_nodes))
        for edge, (tail, head) in enumerate(zip(self.tails, self.heads)):
            graph.add_edge(tail, head, key=edge)
        return graph


def topological_order(dag):
    """
    Node ids in topological order; ties broken by smallest id.
    """
    return dag.order


class Path:
    """
    A simple directed path, stored as its start node and edge ids.

    A path may have no edges; then its tail and head are the same
    node.
    """

    def __init__(self, dag, edges=(), start=None):
        edges = tuple(edges)
        if len(edges) == 0:
            if start is None:
                raise NotAPath("an empty path needs a start node")
            nodes = [start]
        else:
            for edge in edges:
                if not 0 <= edge < dag.num_edges:
                    raise NotAPath("no such edge id: %r" % (edge,))
            first = dag.tails[edges[0]]
            if start is not None and start != first:
                raise NotAPath(
                    "path starts at %r but its first edge leaves %r"
                    % (dag.labels[start], dag.labels[first])
                )
            nodes = [first]
            for edge in edges:
                if dag.tails[edge] != nodes[-1]:
                    raise NotAPath(
                        "edge %s does not continue the path at %r"
                        % (dag.edge_label(edge), dag.labels[nodes[-1]])
                    )
                nodes.append(dag.heads[edge])
        if len(set(edges)) != len(edges):
            raise EdgeRepeated("path repeats an edge")
        self.dag = dag
        self.edges = edges
        self.nodes = tuple(nodes)
        self._position = {node: i for i, node in enumerate(self.nodes)}
        self._edge_set = frozenset(edges)

    def __repr__(self):
        return "<Path %s>" % self.describe(" -> ")

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge):
        return edge in self._edge_set

    def __eq__(self, other):
        return (
            isinstance(other, Path)
            and self.edges == other.edges
            and self.nodes == other.nodes
        )

    def __hash__(self):
        return hash((self.edges, self.nodes))

    @property
    def tail(self):
        return self.nodes[0]

    @property
    def head(self):
        return self.nodes[-1]

    @property
    def edge_set(self):
        return self._edge_set

    def describe(self, separator=","):
        """
        The node labels along the path, joined by `separator`.
        """
        return separator.join(str(self.dag.labels[node]) for node in self.nodes)

    def has_node(self, node):
        return node in self._position

    def position(self, node):
        if node not in self._position:
            raise AnchorNotOnPath("node %r is not on %r" % (self.dag.labels[node], self))
        return self._position[node]

    def section(self, start, end):
        """
        The contiguous sub-path between two nodes of this path.
        """
        i = self.position(start)
        j = self.position(end)
        if j < i:
            raise OrderViolation(
                "%r comes after %r on %r"
                % (self.dag.labels[start], self.dag.labels[end], self)
            )
        return Path(self.dag, self.edges[i:j], start=start)

    def is_valid_in(self, dag):
        """
        Does this path's edge sequence chain correctly in `dag`?
        """
        try:
            other = Path(dag, self.edges, start=self.tail)
        except (NotAPath, EdgeRepeated):
            return False
        return other.nodes == self.nodes


Anchor = namedtuple("Anchor", ["kind", "ident"])


def node_anchor(node):
    return Anchor("node", node)


def edge_anchor(edge):
    """
    Anchor at an edge: as a start it means tail(edge), as an end it
    means head(edge).
    """
    return Anchor("edge", edge)


def _anchor_node(path, anchor, is_start):
    if not isinstance(anchor, Anchor):
        anchor = node_anchor(anchor)
    if anchor.kind == "edge":
        if anchor.ident not in path:
            raise AnchorNotOnPath("edge %r is not on %r" % (anchor.ident, path))
        if is_start:
            return path.dag.tails[anchor.ident]
        return path.dag.heads[anchor.ident]
    if not path.has_node(anchor.ident):
        raise AnchorNotOnPath("node %r is not on %r" % (anchor.ident, path))
    return anchor.ident


def path_section(path, start, end):
    """
    The section of `path` from `start` to `end`.

    Args:
        * path: (Path) the path to cut
        * start: (int or Anchor) a node id, or an edge_anchor meaning its tail
        * end: (int or Anchor) a node id, or an edge_anchor meaning its head
    """
    return path.section(_anchor_node(path, start, True), _anchor_node(path, end, False))


def path_concat(first, *rest):
    """
    Join paths end to end.
    """
    edges = list(first.edges)
    head = first.head
    for path in rest:
        if path.tail != head:
            raise EndpointMismatch(
                "cannot join %r to a path ending at %r" % (path, first.dag.labels[head])
            )
        edges.extend(path.edges)
        head = path.head
    if len(set(edges)) != len(edges):
        raise EdgeRepeated("joined path repeats an edge")
    return Path(first.dag, edges, start=first.tail)


class InformationEdges:
    """
    Record of the auxiliary source and sink edges added by augment().
    """

    def __init__(self, mode, sources, sinks, base_roles, base_nodes, base_edges):
        self.mode = mode
        # (S(1) ids, S(2) ids) and (T(1) ids, T(2) ids)
        self.sources = tuple(tuple(edges) for edges in sources)
        self.sinks = tuple(tuple(edges) for edges in sinks)
        self.base_roles = tuple(base_roles)
        self.base_nodes = base_nodes
        self.base_edges = base_edges

    def __repr__(self):
        return "<InformationEdges mode=%r, S=%r, T=%r>" % (
            self.mode,
            self.sources,
            self.sinks,
        )

    def __eq__(self, other):
        return isinstance(other, InformationEdges) and self.to_json() == other.to_json()

    def to_json(self):
        return {
            "mode": self.mode,
            "sources": [list(edges) for edges in self.sources],
            "sinks": [list(edges) for edges in self.sinks],
            "base_roles": list(self.base_roles),
            "base_nodes": self.base_nodes,
            "base_edges": self.base_edges,
        }

    def all_edges(self):
        return frozenset(
            edge for group in self.sources + self.sinks for edge in group
        )


class UnicastInstance:
    """
    A DAG with two source/sink pairs, (s1, t1) and (s2, t2).
    """

    def __init__(self, dag, s1, t1, s2, t2, info=None):
        """
        Args:
            * dag: (Dag) the network
            * s1, t1, s2, t2: (int) node ids of the roles
            * info: (InformationEdges, optional) set by augment()
        """
        for node in (s1, t1, s2, t2):
            if not 0 <= node < dag.num_nodes:
                raise UnknownNode(node)
        if s1 == t1 or s2 == t2:
            raise DegenerateRoles(
                "a session's source and sink must differ: s1=%r, t1=%r, s2=%r, t2=%r"
                % tuple(dag.labels[node] for node in (s1, t1, s2, t2))
            )
        self.dag = dag
        self.s1 = s1
        self.t1 = t1
        self.s2 = s2
        self.t2 = t2
        self.info = info

    def __repr__(self):
        return "<UnicastInstance s1=%r, t1=%r, s2=%r, t2=%r, nodes=%r, edges=%r%s>" % (
            self.dag.labels[self.s1],
            self.dag.labels[self.t1],
            self.dag.labels[self.s2],
            self.dag.labels[self.t2],
            self.dag.num_nodes,
            self.dag.num_edges,
            ", augmented=%r" % self.info.mode if self.info else "",
        )

    def __eq__(self, other):
        return (
            isinstance(other, UnicastInstance)
            and self.dag == other.dag
            and self.roles == other.roles
            and self.info == other.info
        )

    def __hash__(self):
        return hash((self.dag, self.roles))

    def info_summary(self):
        print("Nodes: %s, edges: %s" % (self.dag.num_nodes, self.dag.num_edges))
        print("Session 1: %s -> %s" % (self.dag.labels[self.s1], self.dag.labels[self.t1]))
        print("Session 2: %s -> %s" % (self.dag.labels[self.s2], self.dag.labels[self.t2]))
        if self.info:
            print("Information edges (%s mode):" % self.info.mode)
            for i in (1, 2):
                print("  S(%s): %s" % (i, ", ".join(map(str, self.info.sources[i - 1]))))
                print("  T(%s): %s" % (i, ", ".join(map(str, self.info.sinks[i - 1]))))

    @property
    def roles(self):
        return (self.s1, self.t1, self.s2, self.t2)

    @property
    def is_augmented(self):
        return self.info is not None

    def source(self, session):
        return (self.s1, self.s2)[_check_session(session)]

    def sink(self, session):
        return (self.t1, self.t2)[_check_session(session)]

    def raw_source(self, session):
        """
        The source node of `session` before augmentation.
        """
        if self.info is None:
            return self.source(session)
        return self.info.base_roles[2 * _check_session(session)]

    def raw_sink(self, session):
        if self.info is None:
            return self.sink(session)
        return self.info.base_roles[2 * _check_session(session) + 1]

    def S(self, session):
        """
        The information edge leaving source `session` (unit mode).
        """
        return self._single(self.info.sources[_check_session(session)] if self.info else ())

    def T(self, session):
        """
        The information edge entering sink `session` (unit mode).
        """
        return self._single(self.info.sinks[_check_session(session)] if self.info else ())

    def _single(self, edges):
        if self.info is None or self.info.mode != UNIT or len(edges) != 1:
            raise HypothesisViolated("instance is not unit-augmented")
        return edges[0]

    def role_name(self, node):
        """
        Role names ("s1", "t2", ...) played by a node, or ().
        """
        return tuple(name for name, role in zip(ROLES, self.roles) if role == node)


def _check_session(session):
    if session not in (1, 2):
        raise ValueError("session must be 1 or 2, not %r" % (session,))
    return session - 1


def validate_and_build(raw_edges, roles, nodes=None):
    """
    Build a UnicastInstance from labeled edges and role labels.

    Args:
        * raw_edges: (list) of (tail, head) labels
        * roles: (sequence) labels of s1, t1, s2, t2
        * nodes: (list, optional) labels to number first

    Sources may coincide (s1 == s2) and so may sinks; a session whose
    source is its own sink is rejected.
    """
    raw_edges = list(raw_edges)
    if len(raw_edges) == 0:
        raise EmptyNetwork("a network needs at least one edge")
    roles = tuple(roles)
    if len(roles) != 4:
        raise ValueError("roles must be four labels (s1, t1, s2, t2): %r" % (roles,))
    dag = Dag(raw_edges, nodes=nodes)
    return UnicastInstance(dag, *[dag.node(label) for label in roles])


def _fresh_label(dag, base):
    label = base
    while dag.has_node(label):
        label += "'"
    return label


def augment(inst, mode=UNIT):
    """
    Attach information edges: a new source node with out-edge(s) S(i)
    into each old source, and a new sink node with in-edge(s) T(i)
    out of each old sink.

    Args:
        * inst: (UnicastInstance) an instance not yet augmented
        * mode: (str) "unit" for one edge per terminal, or
          "maxflow-capacity" for C(si, ti) parallel edges

    Old node and edge ids are unchanged; the new nodes get ids
    s1', s2', t1', t2' in that order, then S(1), S(2), T(1), T(2).
    """
    if inst.info is not None:
        raise AlreadyAugmented("instance is already augmented (%s mode)" % inst.info.mode)
    if mode not in VALID_MODES:
        raise ValueError("unknown augmentation mode: %r" % mode)
    dag = inst.dag
    if mode == UNIT:
        counts = (1, 1)
    else:
        from .flow import max_flow

        counts = (
            max_flow(dag, inst.s1, inst.t1)[0],
            max_flow(dag, inst.s2, inst.t2)[0],
        )
    new_labels = [_fresh_label(dag, "%s'" % role) for role in ("s1", "s2", "t1", "t2")]
    s1, s2, t1, t2 = [dag.labels[node] for node in (inst.s1, inst.s2, inst.t1, inst.t2)]
    edges = dag.edge_list()
    base_edges = len(edges)
    groups = []
    for tail, head, count in [
        (new_labels[0], s1, counts[0]),
        (new_labels[1], s2, counts[1]),
        (t1, new_labels[2], counts[0]),
        (t2, new_labels[3], counts[1]),
    ]:
        groups.append(list(range(len(edges), len(edges) + count)))
        edges.extend([(tail, head)] * count)
    augmented = Dag(edges, nodes=dag.labels + new_labels)
    info = InformationEdges(
        mode,
        sources=groups[:2],
        sinks=groups[2:],
        base_roles=inst.roles,
        base_nodes=dag.num_nodes,
        base_edges=base_edges,
    )
    ids = [augmented.node(label) for label in new_labels]
    return UnicastInstance(augmented, ids[0], ids[2], ids[1], ids[3], info=info)


def strip_information_edges(inst):
    """
    Undo augment(): drop the auxiliary nodes and edges.
    """
    if inst.info is None:
        return inst
    info = inst.info
    dag = Dag(
        inst.dag.edge_list()[: info.base_edges],
        nodes=inst.dag.labels[: info.base_nodes],
    )
    return UnicastInstance(dag, *info.base_roles)


def unit_augmented(inst):
    """
    Return `inst` augmented in unit mode, augmenting if needed.
    """
    if inst.info is None:
        return augment(inst, UNIT)
    if inst.info.mode != UNIT:
        raise HypothesisViolated(
            "expected a unit-augmented instance, got %s mode" % inst.info.mode
        )
    return inst
