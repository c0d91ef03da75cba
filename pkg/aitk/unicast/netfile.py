# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
The plain-text network format:

    # comments start with a hash
    pairs s1 t1 s2 t2
    edge s1 a
    edge a t1
    edge a t1

Exactly one `pairs` header naming s1, t1, s2, t2, and one `edge`
line per edge; repeated lines are parallel edges.
"""

import io
import re

from .errors import CycleDetected, NetworkError, ParseError
from .graph import strip_information_edges, validate_and_build

HEADER = "pairs"
EDGE = "edge"
NAME = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_.'\-]*$")


def _check_names(names, number, filename):
    for name in names:
        if not NAME.match(name):
            raise ParseError("bad node name: %r" % name, number, filename)


def parse_instance(text, filename=None):
    """
    Parse network text into a UnicastInstance.

    Raises ParseError, with the line number where there is one.
    """
    roles = None
    header_line = None
    edges = []
    for number, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == HEADER:
            if roles is not None:
                raise ParseError(
                    "second '%s' header (first on line %s)" % (HEADER, header_line),
                    number,
                    filename,
                )
            if len(words) != 5:
                raise ParseError(
                    "header must be '%s s1 t1 s2 t2'" % HEADER, number, filename
                )
            _check_names(words[1:], number, filename)
            roles = words[1:]
            header_line = number
        elif words[0] == EDGE:
            if len(words) != 3:
                raise ParseError("edge line must be '%s tail head'" % EDGE, number, filename)
            _check_names(words[1:], number, filename)
            edges.append((words[1], words[2]))
        else:
            raise ParseError("unknown keyword: %r" % words[0], number, filename)
    if roles is None:
        raise ParseError("missing '%s s1 t1 s2 t2' header" % HEADER, None, filename)
    if len(edges) == 0:
        raise ParseError("no edges", None, filename)
    try:
        return validate_and_build(edges, roles)
    except CycleDetected as exc:
        raise ParseError(str(exc), None, filename)
    except NetworkError as exc:
        raise ParseError(str(exc), header_line, filename)


def format_instance(inst, comments=()):
    """
    Print an instance in the network format. Information edges, if
    any, are dropped first.
    """
    inst = strip_information_edges(inst)
    dag = inst.dag
    fp = io.StringIO()
    for comment in comments:
        fp.write("# %s\n" % comment)
    fp.write(
        "%s %s\n" % (HEADER, " ".join(str(dag.labels[node]) for node in inst.roles))
    )
    for tail, head in dag.edge_list():
        fp.write("%s %s %s\n" % (EDGE, tail, head))
    return fp.getvalue()


def read_instance(filename):
    with open(filename) as fp:
        return parse_instance(fp.read(), filename)


def write_instance(inst, filename, comments=()):
    with open(filename, "w") as fp:
        fp.write(format_instance(inst, comments))
