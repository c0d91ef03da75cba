# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Pictures of networks: Graphviz DOT text, and SVG drawn with
svgwrite. Both accept an overlay that marks A-sets and the
certificate ("verdict"), embedding images ("witness") or code pairs
("code").
"""

import io
import math

from .coding import extend_code, format_pair
from .solvability import decide
from .witness import find_embedding

VALID_OVERLAYS = [None, "verdict", "witness", "code"]

SHARED_COLOR = "red"
ASET_COLOR = "orange"
CROSS_COLOR = "blue"
IMAGE_COLORS = [
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
    "#393b79",
]


def annotate(inst, overlay=None):
    """
    Work out what to draw.

    Returns (instance, notes, title) where notes maps edge ids to a
    dict of "label", "color" and "width", and instance is the one the
    edge ids refer to (unit-augmented for every overlay but None).
    """
    if overlay not in VALID_OVERLAYS:
        raise ValueError("unknown overlay: %r" % (overlay,))
    if overlay is None:
        return inst, {}, None
    verdict = decide(inst)
    if overlay == "verdict" or not verdict.solvable:
        return _verdict_notes(inst, verdict)
    template, embedding = find_embedding(inst, verdict)
    unit = embedding.instance
    notes = {}
    title = "template %s" % template.tag
    if overlay == "witness":
        for index, (tail, head) in enumerate(template.edges):
            for edge in embedding.paths[tail, head].edges:
                notes[edge] = {
                    "label": "(%s,%s)" % (tail, head),
                    "color": IMAGE_COLORS[index % len(IMAGE_COLORS)],
                    "width": 2,
                }
    else:
        code = extend_code(unit, template, embedding)
        for edge in code.support():
            notes[edge] = {"label": format_pair(code.pair(edge)), "color": "black", "width": 2}
    return unit, notes, title


def _verdict_notes(inst, verdict):
    title = "%s (%s)" % (verdict.decision, verdict.branch)
    if verdict.augmented is None:
        return inst, {}, title
    notes = {}
    for key in ((1, 1), (2, 2)):
        for edge in verdict.asets.get(key, ()):
            notes[edge] = {"label": "A%s%s" % key, "color": ASET_COLOR, "width": 2}
    for path in verdict.cross_paths or ():
        for edge in path.edges:
            notes[edge] = {"label": "cross", "color": CROSS_COLOR, "width": 2}
    for edge in verdict.shared or ():
        notes[edge] = {"label": "shared", "color": SHARED_COLOR, "width": 2}
    if verdict.certificate is not None:
        notes[verdict.certificate.edge] = {
            "label": "certificate",
            "color": SHARED_COLOR,
            "width": 3,
        }
    return verdict.augmented, notes, title


def _quote(text):
    return '"%s"' % str(text).replace("\\", "\\\\").replace('"', '\\"')


def to_dot(inst, overlay=None):
    """
    The network as a DOT digraph.
    """
    drawn, notes, title = annotate(inst, overlay)
    dag = drawn.dag
    fp = io.StringIO()
    fp.write("digraph unicast {\n")
    fp.write("    rankdir=LR;\n")
    if title:
        fp.write("    label=%s;\n" % _quote(title))
    for node in dag.order:
        roles = drawn.role_name(node)
        if roles:
            fp.write(
                "    %s [shape=box, xlabel=%s];\n"
                % (_quote(dag.labels[node]), _quote("/".join(roles)))
            )
    for edge in range(dag.num_edges):
        attributes = []
        note = notes.get(edge)
        if note:
            attributes.append("label=%s" % _quote(note["label"]))
            attributes.append("color=%s" % _quote(note["color"]))
            if note["width"] != 1:
                attributes.append("penwidth=%s" % note["width"])
        fp.write(
            "    %s -> %s%s;\n"
            % (
                _quote(dag.labels[dag.tails[edge]]),
                _quote(dag.labels[dag.heads[edge]]),
                " [%s]" % ", ".join(attributes) if attributes else "",
            )
        )
    fp.write("}\n")
    return fp.getvalue()


def layout(dag, spacing=(120, 70), margin=50):
    """
    Place nodes in columns by longest distance from a node without
    in-edges.
    """
    depth = [0] * dag.num_nodes
    for node in dag.order:
        for edge in dag.out_edges[node]:
            head = dag.heads[edge]
            depth[head] = max(depth[head], depth[node] + 1)
    rows = {}
    positions = {}
    for node in dag.order:
        row = rows.get(depth[node], 0)
        rows[depth[node]] = row + 1
        positions[node] = (margin + depth[node] * spacing[0], margin + row * spacing[1])
    return positions


def draw_svg(inst, overlay=None, filename="network.svg", radius=16):
    """
    Draw the network with svgwrite.

    Args:
        * inst: (UnicastInstance) the network
        * overlay: (str, optional) "verdict", "witness" or "code"
        * filename: (str) where Drawing.save() will write
        * radius: (int) node circle radius

    Returns the svgwrite Drawing; call .save() or ._repr_svg_().
    """
    from svgwrite import Drawing

    drawn, notes, title = annotate(inst, overlay)
    dag = drawn.dag
    positions = layout(dag)
    width = max(x for x, y in positions.values()) + 80
    height = max(y for x, y in positions.values()) + 80
    dwg = Drawing(filename, (width, height))
    dwg.viewbox(0, 0, width, height)
    marker = dwg.marker(insert=(8, 3), size=(8, 6), orient="auto")
    marker.add(dwg.path(d="M0,0 L8,3 L0,6 z", fill="black"))
    dwg.defs.add(marker)
    if title:
        dwg.add(dwg.text(title, insert=(10, 20), font_size=14))

    parallel = {}
    for edge in range(dag.num_edges):
        key = (dag.tails[edge], dag.heads[edge])
        index = parallel.get(key, 0)
        parallel[key] = index + 1
        (x1, y1), (x2, y2) = positions[key[0]], positions[key[1]]
        length = math.hypot(x2 - x1, y2 - y1)
        ux, uy = (x2 - x1) / length, (y2 - y1) / length
        start = (x1 + ux * radius, y1 + uy * radius)
        end = (x2 - ux * radius, y2 - uy * radius)
        # bend the i-th parallel edge away from the straight line
        bend = 25 * ((index + 1) // 2) * (1 if index % 2 else -1)
        control = ((x1 + x2) / 2 - uy * bend, (y1 + y2) / 2 + ux * bend)
        note = notes.get(edge, {"label": None, "color": "black", "width": 1})
        line = dwg.path(
            d="M%.1f,%.1f Q%.1f,%.1f %.1f,%.1f" % (start + control + end),
            stroke=note["color"],
            stroke_width=note["width"],
            fill="none",
        )
        line["marker-end"] = marker.get_funciri()
        dwg.add(line)
        if note["label"]:
            dwg.add(
                dwg.text(
                    note["label"],
                    insert=(control[0], control[1] - 4),
                    font_size=10,
                    text_anchor="middle",
                    fill=note["color"],
                )
            )
    for node, (x, y) in positions.items():
        roles = drawn.role_name(node)
        dwg.add(
            dwg.circle(
                (x, y),
                radius,
                fill="lightyellow" if roles else "white",
                stroke="black",
            )
        )
        dwg.add(
            dwg.text(
                str(dag.labels[node]),
                insert=(x, y + 4),
                font_size=10,
                text_anchor="middle",
            )
        )
    return dwg
