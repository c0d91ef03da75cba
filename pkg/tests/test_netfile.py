# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

import os

import pytest

from aitk.unicast import load_network
from aitk.unicast.errors import ParseError
from aitk.unicast.graph import unit_augmented
from aitk.unicast.netfile import format_instance, parse_instance, read_instance, write_instance

HERE = os.path.abspath(os.path.dirname(__file__))


def parse_error(text):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    return info.value


def test_parse():
    inst = parse_instance(
        """
        # two routes
        pairs s1 t1 s2 t2
        edge s1 a   # first
        edge a t1
        edge a t1
        edge s2 t2
        """
    )
    dag = inst.dag

    assert dag.labels == ["s1", "a", "t1", "s2", "t2"]
    assert dag.num_edges == 4
    assert dag.find_edges("a", "t1") == [1, 2]
    assert [dag.labels[node] for node in inst.roles] == ["s1", "t1", "s2", "t2"]
    assert not inst.is_augmented


def test_parse_errors():
    assert parse_error("pairs s1 t1 s2\nedge s1 t1\n").line == 1
    assert parse_error("pairs s1 t1 s2 t2\nedge s1\n").line == 2
    assert parse_error("pairs s1 t1 s2 t2\nnode s1\n").line == 2
    assert parse_error("pairs s1 t1 s2 t2\nedge s1 t1\npairs s1 t1 s2 t2\n").line == 3
    assert parse_error("\n\nedge s1 t1\nedge s2 a!b\n").line == 4
    assert parse_error("edge s1 t1\n").line is None
    assert parse_error("pairs s1 t1 s2 t2\n").line is None
    assert parse_error("# roles\npairs s s s t\nedge s t\n").line == 2
    assert parse_error("pairs s1 t1 s2 x\nedge s1 t1\nedge s2 t2\n").line == 1

    error = parse_error("pairs s t s t\nedge s a\nedge a b\nedge b a\nedge b t\n")
    assert "cycle" in str(error)
    assert isinstance(error, ValueError)


def test_format_round_trip():
    for name in ("butterfly", "grail", "wide-grail", "par", "diamond"):
        inst = load_network(name, quiet=True)
        assert parse_instance(format_instance(inst)) == inst


def test_format_drops_information_edges():
    inst = load_network("bowtie", quiet=True)
    text = format_instance(unit_augmented(inst), comments=["bowtie"])

    assert text.splitlines()[:3] == ["# bowtie", "pairs s1 t1 s2 t2", "edge s1 a"]
    assert "'" not in text
    assert parse_instance(text) == inst


def test_read_and_write(tmp_path):
    inst = read_instance(os.path.join(HERE, "networks", "mirrored-grail.txt"))
    filename = str(tmp_path / "copy.txt")
    write_instance(inst, filename, comments=["copy"])

    assert read_instance(filename) == inst
    with open(filename) as fp:
        assert fp.read().splitlines()[1] == "pairs s2 t2 s1 t1"


def test_bad_files():
    with pytest.raises(ParseError) as info:
        read_instance(os.path.join(HERE, "networks", "bad-header.txt"))
    assert info.value.line == 1
    assert "bad-header.txt:line 1: " in str(info.value)

    with pytest.raises(ParseError) as info:
        read_instance(os.path.join(HERE, "networks", "cycle.txt"))
    assert "cycle" in str(info.value)
