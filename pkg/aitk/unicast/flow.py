# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Unit-capacity maximum flow between two nodes of a Dag.

Every edge has capacity one; larger capacities are parallel edges.
Augmenting paths are found by breadth-first search, scanning forward
out-edges then backward in-edges, each in edge-id order, so the flow,
the path family and the cut are the same on every run.
"""

from collections import deque

from .graph import Path

EMPTY = frozenset()


class PathFamily:
    """
    k pairwise edge-disjoint paths from s to t.
    """

    def __init__(self, dag, s, t, paths=()):
        self.dag = dag
        self.s = s
        self.t = t
        self.paths = tuple(paths)

    def __repr__(self):
        return "<PathFamily %s=>%s k=%r>" % (
            self.dag.labels[self.s],
            self.dag.labels[self.t],
            self.k,
        )

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __getitem__(self, index):
        return self.paths[index]

    @property
    def k(self):
        return len(self.paths)

    def edge_set(self):
        return frozenset(edge for path in self.paths for edge in path.edges)

    def is_valid(self):
        """
        Are the paths well formed, s-t, and pairwise edge-disjoint?
        """
        seen = set()
        for path in self.paths:
            if path.tail != self.s or path.head != self.t:
                return False
            if not path.is_valid_in(self.dag):
                return False
            if seen & path.edge_set:
                return False
            seen |= path.edge_set
        return True


class Cut:
    """
    An s-t cut: the edges from a node set A (holding s) to its
    complement (holding t).
    """

    def __init__(self, dag, source_side, edges):
        self.dag = dag
        self.source_side = frozenset(source_side)
        self.edges = frozenset(edges)

    def __repr__(self):
        return "<Cut %s>" % " ".join(
            self.dag.edge_label(edge) for edge in sorted(self.edges)
        )

    def __len__(self):
        return len(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Cut)
            and self.source_side == other.source_side
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.source_side, self.edges))

    @property
    def capacity(self):
        return len(self.edges)

    @property
    def sink_side(self):
        return frozenset(range(self.dag.num_nodes)) - self.source_side


def cut_edges(dag, source_side, removed=EMPTY):
    """
    The edges leaving `source_side`, skipping `removed`.
    """
    return frozenset(
        edge
        for node in source_side
        for edge in dag.out_edges[node]
        if edge not in removed and dag.heads[edge] not in source_side
    )


def _residual_search(dag, s, flow, removed, target=None):
    parent = {s: None}
    queue = deque([s])
    while queue:
        node = queue.popleft()
        for edge in dag.out_edges[node]:
            if flow[edge] or edge in removed:
                continue
            head = dag.heads[edge]
            if head not in parent:
                parent[head] = (edge, True)
                if head == target:
                    return parent
                queue.append(head)
        for edge in dag.in_edges[node]:
            if not flow[edge]:
                continue
            tail = dag.tails[edge]
            if tail not in parent:
                parent[tail] = (edge, False)
                if tail == target:
                    return parent
                queue.append(tail)
    return parent


def find_flow(dag, s, t, removed=EMPTY, limit=None):
    """
    Compute a maximum s-t flow.

    Args:
        * dag: (Dag) the network
        * s, t: (int) source and sink node ids
        * removed: (set, optional) edge ids treated as deleted
        * limit: (int, optional) stop once the flow reaches this value

    Returns (value, flow) where flow[edge] is 1 on edges carrying flow.
    """
    if s == t:
        raise ValueError("source and sink must differ: %r" % dag.labels[s])
    flow = bytearray(dag.num_edges)
    value = 0
    while limit is None or value < limit:
        parent = _residual_search(dag, s, flow, removed, target=t)
        if t not in parent:
            break
        node = t
        while node != s:
            edge, forward = parent[node]
            if forward:
                flow[edge] = 1
                node = dag.tails[edge]
            else:
                flow[edge] = 0
                node = dag.heads[edge]
        value += 1
    return value, flow


def _paths_from_flow(dag, s, t, value, flow):
    used = set()
    paths = []
    for _ in range(value):
        node = s
        edges = []
        while node != t:
            edge = next(
                edge
                for edge in dag.out_edges[node]
                if flow[edge] and edge not in used
            )
            used.add(edge)
            edges.append(edge)
            node = dag.heads[edge]
        paths.append(Path(dag, edges, start=s))
    return PathFamily(dag, s, t, paths)


def max_flow(dag, s, t, removed=EMPTY, limit=None):
    """
    The number of edge-disjoint s-t paths, and one such family.

    Args:
        * dag: (Dag) the network
        * s, t: (int) node ids, s != t
        * removed: (set, optional) edge ids treated as deleted
        * limit: (int, optional) stop after this many paths

    Returns (value, PathFamily). Disconnected nodes give (0, empty family).
    """
    value, flow = find_flow(dag, s, t, removed, limit)
    return value, _paths_from_flow(dag, s, t, value, flow)


def decompose_flow(dag, s, t, value, removed=EMPTY):
    """
    Split a maximum flow of the given value into edge-disjoint paths.
    """
    found, flow = find_flow(dag, s, t, removed, limit=value)
    if found != value:
        raise ValueError(
            "no flow of value %r from %r to %r (maximum is %r)"
            % (value, dag.labels[s], dag.labels[t], found)
        )
    return _paths_from_flow(dag, s, t, value, flow)


def min_cut(dag, s, t, removed=EMPTY):
    """
    The source-side-minimal minimum cut: the edges leaving the nodes
    that remain reachable from s in the residual graph of a maximum
    flow.
    """
    value, flow = find_flow(dag, s, t, removed)
    source_side = frozenset(_residual_search(dag, s, flow, removed))
    return Cut(dag, source_side, cut_edges(dag, source_side, removed))


def reachable(dag, sources, removed=EMPTY):
    """
    The set of nodes reachable from any of `sources` without using
    edges in `removed`.
    """
    seen = set(sources)
    queue = deque(sorted(seen))
    while queue:
        node = queue.popleft()
        for edge in dag.out_edges[node]:
            if edge in removed:
                continue
            head = dag.heads[edge]
            if head not in seen:
                seen.add(head)
                queue.append(head)
    return frozenset(seen)


def bfs_path(dag, s, t, removed=EMPTY):
    """
    A shortest s-t path avoiding `removed`, or None.

    Edges are scanned in id order, so ties go to smaller ids.
    """
    if s == t:
        return Path(dag, (), start=s)
    parent = {s: None}
    queue = deque([s])
    while queue:
        node = queue.popleft()
        for edge in dag.out_edges[node]:
            if edge in removed:
                continue
            head = dag.heads[edge]
            if head in parent:
                continue
            parent[head] = edge
            if head == t:
                edges = []
                while head != s:
                    edge = parent[head]
                    edges.append(edge)
                    head = dag.tails[edge]
                return Path(dag, reversed(edges), start=s)
            queue.append(head)
    return None
