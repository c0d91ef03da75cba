# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
The canonical solvable networks. An instance is solvable exactly when
it contains one of A (two disjoint routes), B or C (the grail and its
session swap) or D (the butterfly).
"""

from .graph import validate_and_build

TERMINALS = ("s1", "t1", "s2", "t2")


class Template:
    """
    A small labeled network that other instances may contain.
    """

    def __init__(self, tag, edges, description=""):
        self.tag = tag
        self.edges = tuple(edges)
        self.description = description
        nodes = []
        for tail, head in self.edges:
            for node in (tail, head):
                if node not in nodes:
                    nodes.append(node)
        self.nodes = tuple(nodes)

    def __repr__(self):
        return "<Template %s edges=%r>" % (self.tag, len(self.edges))

    def in_edges(self, node):
        return [edge for edge in self.edges if edge[1] == node]

    def out_edges(self, node):
        return [edge for edge in self.edges if edge[0] == node]

    def as_instance(self):
        """
        The template itself as a raw UnicastInstance.
        """
        return validate_and_build(self.edges, TERMINALS)


def swap_sessions(edges):
    """
    Exchange the labels s1 <-> s2 and t1 <-> t2.
    """
    swap = {"s1": "s2", "s2": "s1", "t1": "t2", "t2": "t1"}
    return [(swap.get(tail, tail), swap.get(head, head)) for tail, head in edges]


DISJOINT = Template(
    "A",
    [("s1", "t1"), ("s2", "t2")],
    "two edge-disjoint routes",
)

GRAIL = Template(
    "B",
    [
        ("s1", "v1"),
        ("s2", "v2"),
        ("v1", "v2"),
        ("v1", "v4"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v3", "v6"),
        ("v4", "v5"),
        ("v5", "v6"),
        ("v5", "t2"),
        ("v6", "t1"),
    ],
    "session 1 is mixed into session 2 and cancelled on a parallel branch",
)

GRAIL_SWAPPED = Template(
    "C",
    swap_sessions(GRAIL.edges),
    "the grail with the sessions exchanged",
)

BUTTERFLY = Template(
    "D",
    [
        ("s1", "v1"),
        ("s2", "v2"),
        ("v1", "v3"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v1", "v5"),
        ("v2", "v6"),
        ("v4", "v5"),
        ("v4", "v6"),
        ("v6", "t1"),
        ("v5", "t2"),
    ],
    "one shared bottleneck carries the sum; each sink has side information",
)

# Not a solvability template: two sources merge, share one section,
# then split to both sinks.
BOTTLENECK = Template(
    "bottleneck",
    [("s1", "v1"), ("s2", "v1"), ("v1", "v2"), ("v2", "t1"), ("v2", "t2")],
    "both sessions squeezed through one shared section",
)

TEMPLATES = {
    template.tag: template for template in (DISJOINT, GRAIL, GRAIL_SWAPPED, BUTTERFLY)
}


def get_template(tag=None):
    """
    Get a canonical template by tag, or the list of tags.
    """
    if tag is None:
        return sorted(TEMPLATES)
    if tag == BOTTLENECK.tag:
        return BOTTLENECK
    if tag not in TEMPLATES:
        raise ValueError("unknown template: %r" % tag)
    return TEMPLATES[tag]
