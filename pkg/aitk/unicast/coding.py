# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Scalar linear network codes over GF(2).

Each edge carries a*X1 + b*X2 for a pair (a, b). An edge may only
carry a combination of what enters its tail; S(i) emits X_i and T(i)
must deliver exactly X_i.
"""

from .errors import EmbeddingInvalid
from .graph import UNIT, unit_augmented
from .templates import swap_sessions
from .utils import Check
from .witness import verify_embedding

IDLE = (0, 0)
X1 = (1, 0)
X2 = (0, 1)
X1_PLUS_X2 = (1, 1)
PAIRS = (IDLE, X1, X2, X1_PLUS_X2)
SYMBOLS = {1: X1, 2: X2}


def add(first, second):
    return (first[0] ^ second[0], first[1] ^ second[1])


def span(pairs):
    """
    All GF(2) combinations of the given pairs.
    """
    result = {IDLE}
    for pair in pairs:
        result |= {add(member, pair) for member in result}
    return result


def format_pair(pair):
    return "%s %s" % pair


class LinearCode:
    """
    A coefficient pair for each edge id; unlisted edges are idle.
    """

    def __init__(self, pairs=None):
        self.pairs = {}
        for edge, pair in (pairs or {}).items():
            pair = tuple(pair)
            if pair not in PAIRS:
                raise ValueError("not a GF(2) pair: %r" % (pair,))
            if pair != IDLE:
                self.pairs[edge] = pair

    def __repr__(self):
        return "<LinearCode active=%r>" % len(self.pairs)

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.pairs == other.pairs

    def __getitem__(self, edge):
        return self.pair(edge)

    def pair(self, edge):
        return self.pairs.get(edge, IDLE)

    def support(self):
        return frozenset(self.pairs)

    def to_text(self, dag=None):
        """
        One "edge-id a b" line per active edge; with a dag, each line
        also gets a comment naming the edge.
        """
        lines = []
        for edge in sorted(self.pairs):
            line = "%s %s" % (edge, format_pair(self.pairs[edge]))
            if dag is not None:
                line += "  # %s" % dag.edge_label(edge)
            lines.append(line)
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text):
        pairs = {}
        for number, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            words = line.split()
            if len(words) != 3 or not all(word.isdigit() for word in words):
                raise ValueError("line %s: expected 'edge-id a b': %r" % (number, line))
            edge, a, b = [int(word) for word in words]
            pairs[edge] = (a, b)
        return cls(pairs)


class TemplateCode:
    """
    A code on a template, keyed by template edge labels.
    """

    def __init__(self, template, pairs):
        self.template = template
        self.pairs = dict(pairs)

    def __repr__(self):
        return "<TemplateCode %s>" % self.template.tag

    def pair(self, edge):
        return self.pairs[edge]

    def on_instance(self):
        """
        The code on the template's own unit-augmented instance.
        """
        from .witness import identity_embedding

        embedding = identity_embedding(self.template.as_instance(), self.template)
        return extend_code(embedding.instance, self.template, embedding)


def _swap_code(pairs):
    swapped = {}
    for (tail, head), (a, b) in pairs.items():
        (edge,) = swap_sessions([(tail, head)])
        swapped[edge] = (b, a)
    return swapped


_GRAIL_CODE = {
    ("s1", "v1"): X1,
    ("s2", "v2"): X2,
    ("v1", "v2"): X1,
    ("v1", "v4"): X1,
    ("v2", "v3"): X1_PLUS_X2,
    ("v3", "v4"): X1_PLUS_X2,
    ("v3", "v6"): X1_PLUS_X2,
    ("v4", "v5"): X2,
    ("v5", "v6"): X2,
    ("v5", "t2"): X2,
    ("v6", "t1"): X1,
}

TEMPLATE_CODES = {
    "A": {("s1", "t1"): X1, ("s2", "t2"): X2},
    "B": _GRAIL_CODE,
    "C": _swap_code(_GRAIL_CODE),
    "D": {
        ("s1", "v1"): X1,
        ("s2", "v2"): X2,
        ("v1", "v3"): X1,
        ("v1", "v5"): X1,
        ("v2", "v3"): X2,
        ("v2", "v6"): X2,
        ("v3", "v4"): X1_PLUS_X2,
        ("v4", "v5"): X1_PLUS_X2,
        ("v4", "v6"): X1_PLUS_X2,
        ("v6", "t1"): X1,
        ("v5", "t2"): X2,
    },
}


def template_code(tmpl):
    """
    The XOR code that solves a canonical template.
    """
    if tmpl.tag not in TEMPLATE_CODES:
        raise ValueError("no code for template %r" % tmpl.tag)
    return TemplateCode(tmpl, TEMPLATE_CODES[tmpl.tag])


def extend_code(inst, tmpl, emb):
    """
    Lift a template's code onto an instance through an embedding:
    every edge of the image of template edge e gets e's pair, every
    other edge stays idle.
    """
    unit = unit_augmented(inst)
    check = verify_embedding(unit, tmpl, emb)
    if not check:
        raise EmbeddingInvalid(check.reason)
    code = template_code(tmpl)
    pairs = {}
    for edge, path in emb.paths.items():
        for instance_edge in path.edges:
            pairs[instance_edge] = code.pair(edge)
    return LinearCode(pairs)


def validate_code(inst, code):
    """
    Check a code on a unit-augmented instance, edge by edge in
    topological order. Returns a Check naming the first bad edge.
    """
    if inst.info is None or inst.info.mode != UNIT:
        return Check(False, "instance", reason="instance is not unit-augmented")
    dag = inst.dag
    sources = {inst.S(i): SYMBOLS[i] for i in (1, 2)}
    sinks = {inst.T(i): SYMBOLS[i] for i in (1, 2)}
    for edge in code.support():
        if not 0 <= edge < dag.num_edges:
            return Check(False, "edge", edge, "no such edge id: %r" % edge)
    for edge in dag.edge_order():
        pair = code.pair(edge)
        if edge in sources:
            if pair != sources[edge]:
                return Check(
                    False,
                    "source",
                    edge,
                    "%s must carry %s, not %s"
                    % (dag.edge_label(edge), format_pair(sources[edge]), format_pair(pair)),
                )
            continue
        incoming = [code.pair(other) for other in dag.in_edges[dag.tails[edge]]]
        if pair not in span(incoming):
            return Check(
                False,
                "local",
                edge,
                "%s carries %s, which its tail cannot compute"
                % (dag.edge_label(edge), format_pair(pair)),
            )
        if edge in sinks and pair != sinks[edge]:
            return Check(
                False,
                "sink",
                edge,
                "%s must deliver %s, not %s"
                % (dag.edge_label(edge), format_pair(sinks[edge]), format_pair(pair)),
            )
    return Check(True)
