# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Seeded random 2-pair unicast instances.

Nodes are put in a random order and every edge points forward in
that order, so the result is acyclic by construction. A spec that
names a template instead subdivides that template's edges and adds
forward noise edges around it.
"""

import random

from .flow import reachable
from .graph import Dag, UnicastInstance, topological_order
from .netfile import format_instance
from .templates import TEMPLATES, TERMINALS


class GenSpec:
    """
    What to generate.

    Args:
        * nodes: (int) number of nodes to draw from
        * edges: (int) number of edges
        * seed: (int) random seed; the same spec always gives the same instance
        * multi: (bool) allow parallel edges
        * connected: (bool) insist that s1 reaches t1 and s2 reaches t2
        * template: (str, optional) tag of a template (A, B, C or D) to
          subdivide; `nodes` and `edges` then count the template's own
          nodes and edges too
    """

    def __init__(self, nodes, edges, seed=0, multi=False, connected=False, template=None):
        if nodes < 2:
            raise ValueError("need at least 2 nodes, got %r" % nodes)
        if edges < 1:
            raise ValueError("need at least 1 edge, got %r" % edges)
        if not multi and edges > nodes * (nodes - 1) // 2:
            raise ValueError(
                "%r nodes allow at most %r edges without parallel edges; use multi"
                % (nodes, nodes * (nodes - 1) // 2)
            )
        if template is not None:
            if template not in TEMPLATES:
                raise ValueError(
                    "unknown template %r; use one of %s" % (template, ", ".join(sorted(TEMPLATES)))
                )
            base = TEMPLATES[template]
            if nodes < len(base.nodes):
                raise ValueError(
                    "template %s needs at least %r nodes, got %r"
                    % (template, len(base.nodes), nodes)
                )
            # each extra node subdivides an edge, adding one edge
            least = len(base.edges) + nodes - len(base.nodes)
            if edges < least:
                raise ValueError(
                    "template %s with %r nodes needs at least %r edges, got %r"
                    % (template, nodes, least, edges)
                )
        self.nodes = nodes
        self.edges = edges
        self.seed = seed
        self.multi = multi
        self.connected = connected
        self.template = template

    def __repr__(self):
        return "<GenSpec nodes=%r, edges=%r, seed=%r, multi=%r, connected=%r, template=%r>" % (
            self.nodes,
            self.edges,
            self.seed,
            self.multi,
            self.connected,
            self.template,
        )

    def to_json(self):
        return {
            "nodes": self.nodes,
            "edges": self.edges,
            "seed": self.seed,
            "multi": self.multi,
            "connected": self.connected,
            "template": self.template,
        }


def _draw_pair(rng, count):
    first, second = rng.sample(range(count), 2)
    return min(first, second), max(first, second)


def _add_noise(rng, order, pairs, total, multi):
    seen = set(pairs)
    while len(pairs) < total:
        first, second = _draw_pair(rng, len(order))
        pair = (order[first], order[second])
        if not multi:
            if pair in seen:
                continue
            seen.add(pair)
        pairs.append(pair)
    return pairs


def _from_template(spec, rng):
    template = TEMPLATES[spec.template]
    base = Dag(template.edges)
    rank = {}
    for position, node in enumerate(topological_order(base)):
        rank[base.labels[node]] = float(position)
    extra = spec.nodes - len(template.nodes)
    cuts = [rng.randrange(len(template.edges)) for _ in range(extra)]
    pairs = []
    for index, (tail, head) in enumerate(template.edges):
        pieces = cuts.count(index)
        chain = [tail]
        for step in range(pieces):
            label = "u%s" % (len(rank) - len(template.nodes))
            rank[label] = rank[tail] + (rank[head] - rank[tail]) * (step + 1) / (pieces + 1)
            chain.append(label)
        chain.append(head)
        pairs.extend(zip(chain, chain[1:]))
    order = sorted(rank, key=lambda label: (rank[label], label))
    pairs = _add_noise(rng, order, pairs, spec.edges, spec.multi)
    dag = Dag(pairs)
    return UnicastInstance(dag, *[dag.node(label) for label in TERMINALS])


def generate(spec):
    """
    Generate the instance described by a GenSpec.
    """
    rng = random.Random(spec.seed)
    if spec.template is not None:
        return _from_template(spec, rng)
    order = ["v%s" % index for index in range(spec.nodes)]
    rng.shuffle(order)
    pairs = []
    seen = set()
    while len(pairs) < spec.edges:
        pair = _draw_pair(rng, spec.nodes)
        if not spec.multi:
            if pair in seen:
                continue
            seen.add(pair)
        pairs.append(pair)
    dag = Dag([(order[first], order[second]) for first, second in pairs])
    used = sorted({index for pair in pairs for index in pair})
    tails = sorted({first for first, _ in pairs})
    roles = []
    for _session in (1, 2):
        if spec.connected:
            # every tail reaches at least the head of its edge
            source = dag.node(order[rng.choice(tails)])
            below = sorted(reachable(dag, {source}) - {source})
            roles.extend([source, rng.choice(below)])
        else:
            source, sink = _draw_pair(rng, len(used))
            roles.extend([dag.node(order[used[source]]), dag.node(order[used[sink]])])
    return UnicastInstance(dag, *roles)


def generate_text(spec):
    """
    The generated instance in the network file format.
    """
    comment = "generated: nodes=%s edges=%s seed=%s%s%s%s" % (
        spec.nodes,
        spec.edges,
        spec.seed,
        " multi" if spec.multi else "",
        " connected" if spec.connected else "",
        " template=%s" % spec.template if spec.template else "",
    )
    return format_instance(generate(spec), comments=[comment])
