# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Deciding whether a 2-pair unicast instance is solvable, and building
and checking single-edge bottleneck certificates when it is not.
"""

from .aset import a_set
from .errors import HypothesisViolated, NoFlow, NotApplicable
from .flow import bfs_path, max_flow, reachable
from .graph import UNIT, unit_augmented

SOLVABLE = "solvable"
UNSOLVABLE = "unsolvable"

ZERO_FLOW = "zero-flow"
PRODUCT_GE_2 = "product-ge-2"
DISJOINT_ASETS = "disjoint-asets"
CROSS_PATHS_EXIST = "cross-paths-exist"
NO_CROSS_PATH = "no-cross-path"

BRANCHES = {
    ZERO_FLOW: UNSOLVABLE,
    PRODUCT_GE_2: SOLVABLE,
    DISJOINT_ASETS: SOLVABLE,
    CROSS_PATHS_EXIST: SOLVABLE,
    NO_CROSS_PATH: UNSOLVABLE,
}


class Certificate:
    """
    A single edge of the shared A-set whose deletion cuts a sink off
    from both sources, with the reachability sets that show it.

    failing_side 1 means no path s1 -> t2 avoids the shared set; then
    t2 is the blocked sink: unreachable from {s1, s2} once the edge is
    gone, while t1 is unreachable from s1 alone. Side 2 is the mirror
    image.
    """

    def __init__(self, edge, failing_side, reach_both, reach_own):
        self.edge = edge
        self.failing_side = failing_side
        self.reach_both = frozenset(reach_both)
        self.reach_own = frozenset(reach_own)

    def __repr__(self):
        return "<Certificate edge=%r, failing_side=%r>" % (self.edge, self.failing_side)

    @property
    def blocked_sink(self):
        """
        Session index of the sink cut off from both sources.
        """
        return 3 - self.failing_side

    def info(self, inst):
        dag = inst.dag
        own = self.failing_side
        print("Bottleneck edge: %s" % dag.edge_label(self.edge))
        print(
            "Without it, t%s is unreachable from s1 and s2; reachable: %s"
            % (self.blocked_sink, _describe_nodes(dag, self.reach_both))
        )
        print(
            "Without it, t%s is unreachable from s%s; reachable: %s"
            % (own, own, _describe_nodes(dag, self.reach_own))
        )

    def to_json(self):
        return {
            "edge": self.edge,
            "failing_side": self.failing_side,
            "reach_both": sorted(self.reach_both),
            "reach_own": sorted(self.reach_own),
        }


def _describe_nodes(dag, nodes):
    return "{%s}" % ", ".join(str(dag.labels[node]) for node in sorted(nodes))


class Verdict:
    """
    The solvability decision for an instance, with the branch of the
    decision procedure that produced it.
    """

    def __init__(
        self,
        branch,
        flows,
        instance,
        augmented=None,
        shared=None,
        cross_paths=None,
        certificate=None,
        asets=None,
    ):
        if branch not in BRANCHES:
            raise ValueError("unknown branch: %r" % branch)
        self.branch = branch
        self.decision = BRANCHES[branch]
        self.flows = tuple(flows)
        self.instance = instance
        self.augmented = augmented
        self.shared = tuple(shared) if shared is not None else None
        self.cross_paths = cross_paths
        self.certificate = certificate
        self.asets = asets or {}

    def __repr__(self):
        return "<Verdict %s branch=%r>" % (self.decision, self.branch)

    @property
    def solvable(self):
        return self.decision == SOLVABLE

    def info(self):
        print("Verdict: %s (branch: %s)" % (self.decision, self.branch))
        print("C(s1,t1) = %s, C(s2,t2) = %s" % self.flows)
        if self.shared is not None:
            dag = self.augmented.dag
            print(
                "Shared A-set: %s"
                % (" ".join(dag.edge_label(edge) for edge in self.shared) or "(empty)")
            )
        if self.cross_paths is not None:
            for name, path in zip(("s1->t2", "s2->t1"), self.cross_paths):
                print("Cross path %s: %s" % (name, path.describe()))
        if self.certificate is not None:
            self.certificate.info(self.augmented)

    def to_json(self):
        config = {
            "decision": self.decision,
            "branch": self.branch,
            "flows": list(self.flows),
        }
        if self.shared is not None:
            config["shared"] = list(self.shared)
        if self.certificate is not None:
            config["certificate"] = self.certificate.to_json()
        return config


def raw_flows(inst):
    """
    C(s1, t1) and C(s2, t2) on the network without information edges.
    """
    return tuple(
        max_flow(inst.dag, inst.raw_source(i), inst.raw_sink(i))[0] for i in (1, 2)
    )


def cross_path_avoiding(inst, avoid, start, end):
    """
    A shortest path from `start` to `end` that uses no edge of
    `avoid`, or None.
    """
    return bfs_path(inst.dag, start, end, frozenset(avoid))


def shared_a_set(inst):
    """
    The unit-augmented instance with its A-sets and their common
    edges, in topological order.
    """
    unit = unit_augmented(inst)
    dag = unit.dag
    a11 = a_set(dag, unit.s1, unit.t1)
    a22 = a_set(dag, unit.s2, unit.t2)
    shared = [edge for edge in a11 if edge in a22]
    return unit, a11, a22, shared


def decide(inst):
    """
    Decide solvability.

    (1) If C(s1,t1) * C(s2,t2) is 0 the instance is unsolvable; if it
    is above 1 it is solvable. (2) Otherwise, with unit information
    edges, if the A-sets of the two sessions share no edge it is
    solvable. (3) Otherwise it is solvable exactly when both s1 -> t2
    and s2 -> t1 can be connected without the shared edges; if one
    cannot, a bottleneck certificate is attached.
    """
    flows = raw_flows(inst)
    product = flows[0] * flows[1]
    if product == 0:
        return Verdict(ZERO_FLOW, flows, inst)
    if product > 1:
        return Verdict(PRODUCT_GE_2, flows, inst)
    unit, a11, a22, shared = shared_a_set(inst)
    asets = {(1, 1): a11, (2, 2): a22}
    if not shared:
        return Verdict(DISJOINT_ASETS, flows, inst, unit, shared, asets=asets)
    first = cross_path_avoiding(unit, shared, unit.s1, unit.t2)
    second = cross_path_avoiding(unit, shared, unit.s2, unit.t1)
    if first is not None and second is not None:
        return Verdict(
            CROSS_PATHS_EXIST,
            flows,
            inst,
            unit,
            shared,
            cross_paths=(first, second),
            asets=asets,
        )
    failing_side = 1 if first is None else 2
    certificate = build_certificate(unit, shared, failing_side)
    return Verdict(
        NO_CROSS_PATH, flows, inst, unit, shared, certificate=certificate, asets=asets
    )


def decide_by_asets(inst):
    """
    Decide solvability from the four A-sets of the unit-augmented
    instance: solvable exactly when neither cross A-set (s1->t2,
    s2->t1) meets the shared A-set of the two sessions.

    Only valid when every source reaches every sink with flow one;
    raises HypothesisViolated otherwise, and the caller should use
    decide() instead.
    """
    unit = unit_augmented(inst)
    dag = unit.dag
    for i in (1, 2):
        for j in (1, 2):
            value, _ = max_flow(dag, unit.source(i), unit.sink(j), limit=2)
            if value != 1:
                raise HypothesisViolated(
                    "C(s%s,t%s) = %s; the A-set test needs 1 for every pair" % (i, j, value)
                )
    asets = {
        (i, j): a_set(dag, unit.source(i), unit.sink(j)) for i in (1, 2) for j in (1, 2)
    }
    shared = [edge for edge in asets[1, 1] if edge in asets[2, 2]]
    flows = raw_flows(unit)
    if not shared:
        return Verdict(DISJOINT_ASETS, flows, inst, unit, shared, asets=asets)
    blocked = [side for side, key in ((1, (1, 2)), (2, (2, 1))) if set(shared) & asets[key].edge_set]
    if not blocked:
        return Verdict(CROSS_PATHS_EXIST, flows, inst, unit, shared, asets=asets)
    certificate = build_certificate(unit, shared, blocked[0])
    return Verdict(
        NO_CROSS_PATH, flows, inst, unit, shared, certificate=certificate, asets=asets
    )


def _transcripts(unit, edge, failing_side):
    dag = unit.dag
    removed = frozenset([edge])
    reach_both = reachable(dag, {unit.s1, unit.s2}, removed)
    reach_own = reachable(dag, {unit.source(failing_side)}, removed)
    return reach_both, reach_own


def build_certificate(inst, shared, failing_side):
    """
    Certify unsolvability with the topologically first shared edge.

    Args:
        * inst: (UnicastInstance) the instance (unit-augmented if needed)
        * shared: (list) the edges common to both sessions' A-sets
        * failing_side: (int) 1 if s1 -> t2 has no path avoiding them,
          2 if s2 -> t1 has none

    Raises NotApplicable if the claims do not hold, as on a solvable
    instance.
    """
    unit = unit_augmented(inst)
    if failing_side not in (1, 2):
        raise ValueError("failing_side must be 1 or 2, not %r" % (failing_side,))
    if not shared:
        raise NotApplicable("no shared A-set edge; the sessions do not compete")
    other = 3 - failing_side
    if cross_path_avoiding(unit, shared, unit.source(failing_side), unit.sink(other)):
        raise NotApplicable(
            "s%s reaches t%s around the shared A-set" % (failing_side, other)
        )
    edge = unit.dag.sort_edges(shared)[0]
    reach_both, reach_own = _transcripts(unit, edge, failing_side)
    if unit.sink(other) in reach_both or unit.sink(failing_side) in reach_own:
        raise NotApplicable(
            "deleting %s does not cut the sinks off" % unit.dag.edge_label(edge)
        )
    return Certificate(edge, failing_side, reach_both, reach_own)


def verify_certificate(inst, cert):
    """
    Re-check every claim of a certificate from scratch.

    Returns True only if the edge is in both sessions' A-sets of a
    unit-augmented instance and the recorded reachability sets are
    exactly what breadth-first search finds without the edge.
    """
    try:
        unit = unit_augmented(inst)
    except HypothesisViolated:
        return False
    if unit.info.mode != UNIT:
        return False
    if not 0 <= cert.edge < unit.dag.num_edges or cert.failing_side not in (1, 2):
        return False
    try:
        a11 = a_set(unit.dag, unit.s1, unit.t1)
        a22 = a_set(unit.dag, unit.s2, unit.t2)
    except NoFlow:
        return False
    if cert.edge not in a11 or cert.edge not in a22:
        return False
    reach_both, reach_own = _transcripts(unit, cert.edge, cert.failing_side)
    if reach_both != cert.reach_both or reach_own != cert.reach_own:
        return False
    other = 3 - cert.failing_side
    return unit.sink(other) not in reach_both and unit.sink(cert.failing_side) not in reach_own
