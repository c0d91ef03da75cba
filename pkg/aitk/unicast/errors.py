# -*- coding: utf-8 -*-
# *************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
#
# *************************************

"""
Exceptions raised by aitk.unicast.

Input problems subclass ValueError, so callers that already catch
ValueError keep working.
"""


class UnicastError(Exception):
    """
    Base class for every aitk.unicast error.
    """


# Network input


class NetworkError(UnicastError, ValueError):
    pass


class CycleDetected(NetworkError):
    def __init__(self, cycle):
        self.cycle = cycle
        super().__init__(
            "network is not acyclic; cycle: %s" % " -> ".join(str(node) for node in cycle)
        )


class UnknownNode(NetworkError):
    def __init__(self, node):
        self.node = node
        super().__init__("unknown node: %r" % (node,))


class DegenerateRoles(NetworkError):
    pass


class EmptyNetwork(NetworkError):
    pass


class AlreadyAugmented(NetworkError):
    pass


class ParseError(NetworkError):
    def __init__(self, message, line=None, filename=None):
        self.line = line
        self.filename = filename
        where = ""
        if filename is not None:
            where += "%s:" % filename
        if line is not None:
            where += "line %s: " % line
        elif where:
            where += " "
        super().__init__(where + message)


# Path calculus


class PathError(UnicastError, ValueError):
    pass


class NotAPath(PathError):
    pass


class AnchorNotOnPath(PathError):
    pass


class OrderViolation(PathError):
    pass


class EndpointMismatch(PathError):
    pass


class EdgeRepeated(PathError):
    pass


# Algorithmic preconditions


class NoFlow(UnicastError, ValueError):
    pass


class FlowNotOne(UnicastError, ValueError):
    pass


class HypothesisViolated(UnicastError, ValueError):
    pass


class NotApplicable(UnicastError, ValueError):
    pass


class NotSolvable(UnicastError, ValueError):
    pass


class EmbeddingInvalid(UnicastError, ValueError):
    pass


class BudgetExceeded(UnicastError):
    pass


# Internal assertions; seeing one of these means a bug here, not bad input


class BridgeFlowViolation(UnicastError, RuntimeError):
    pass


class ConstructionError(UnicastError, RuntimeError):
    pass
