# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

import pytest

from aitk.unicast import load_network
from aitk.unicast.drawing import annotate, draw_svg, layout, to_dot
from aitk.unicast.templates import get_template


def test_plain_dot():
    inst = load_network("bowtie", quiet=True)
    text = to_dot(inst)
    lines = text.splitlines()

    assert lines[0] == "digraph unicast {"
    assert lines[-1] == "}"
    assert '    "s1" [shape=box, xlabel="s1"];' in lines
    assert '    "a" -> "b";' in lines
    assert sum(1 for line in lines if " -> " in line) == 5


def test_shared_roles():
    text = to_dot(load_network("diamond", quiet=True))
    assert '    "s" [shape=box, xlabel="s1/s2"];' in text.splitlines()


def test_verdict_overlay():
    text = to_dot(load_network("bowtie", quiet=True), "verdict")

    assert 'label="unsolvable (no-cross-path)";' in text
    assert '"a" -> "b" [label="certificate", color="red", penwidth=3];' in text
    assert '"s1\'" -> "s1"' in text


def test_code_overlay():
    text = to_dot(load_network("butterfly", quiet=True), "code")

    assert 'label="template D";' in text
    assert '"v3" -> "v4" [label="1 1"' in text
    assert '"v1" -> "v5" [label="1 0"' in text


def test_witness_overlay():
    drawn, notes, title = annotate(load_network("grail", quiet=True), "witness")

    assert title == "template B"
    assert drawn.is_augmented
    assert len(notes) == drawn.dag.num_edges
    assert {note["label"] for note in notes.values()} == {
        "(%s,%s)" % edge for edge in get_template("B").edges
    }
    assert notes[drawn.S(1)]["label"] == "(s1,v1)"


def test_unsolvable_falls_back_to_verdict():
    _, notes, title = annotate(load_network("bowtie", quiet=True), "code")
    assert title.startswith("unsolvable")

    with pytest.raises(ValueError):
        annotate(load_network("bowtie", quiet=True), "rainbow")


def test_layout():
    inst = load_network("chain", quiet=True)
    positions = layout(inst.dag, spacing=(100, 50), margin=10)

    assert positions[inst.dag.node("s")] == (10, 10)
    assert positions[inst.dag.node("a")] == (110, 10)
    assert positions[inst.dag.node("t")] == (210, 10)


def test_draw_svg(tmp_path):
    pytest.importorskip("svgwrite")
    filename = str(tmp_path / "par.svg")
    drawing = draw_svg(load_network("par", quiet=True), filename=filename)
    drawing.save()

    with open(filename) as fp:
        text = fp.read()
    assert "<svg" in text
    assert text.count("<circle") == 3
    assert "<svg" in draw_svg(load_network("butterfly", quiet=True), "witness").tostring()
