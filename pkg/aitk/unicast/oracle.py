# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Brute-force reference answers for small networks: every path
family, every cut, every GF(2) code. Used to check the fast
algorithms; all of them refuse inputs beyond a SearchBudget.
"""

import itertools

import networkx as nx

from .coding import LinearCode
from .config import get_budget_defaults
from .errors import BudgetExceeded, NoFlow
from .flow import Cut, PathFamily, cut_edges, find_flow
from .graph import Path, unit_augmented

RAISE = "raise"
SKIP = "skip"


class SearchBudget:
    """
    Limits on the size of brute-force searches.
    """

    def __init__(
        self,
        max_nodes=None,
        max_edges=None,
        max_enumeration=None,
        max_code_edges=None,
        abort=RAISE,
    ):
        """
        Args:
            * max_nodes: (int) largest network for path and cut enumeration
            * max_edges: (int) likewise, in edges
            * max_enumeration: (int) most paths, families or states kept
            * max_code_edges: (int) most non-information edges for code search
            * abort: (str) "raise" to raise BudgetExceeded, "skip" to return None

        Unset limits come from config.get_budget_defaults().
        """
        defaults = get_budget_defaults()
        self.max_nodes = max_nodes if max_nodes is not None else defaults["max_nodes"]
        self.max_edges = max_edges if max_edges is not None else defaults["max_edges"]
        self.max_enumeration = (
            max_enumeration if max_enumeration is not None else defaults["max_enumeration"]
        )
        self.max_code_edges = (
            max_code_edges if max_code_edges is not None else defaults["max_code_edges"]
        )
        for name in ("max_nodes", "max_edges", "max_enumeration", "max_code_edges"):
            if getattr(self, name) <= 0:
                raise ValueError("%s must be positive" % name)
        if abort not in (RAISE, SKIP):
            raise ValueError("unknown abort behavior: %r" % abort)
        self.abort = abort

    def __repr__(self):
        return "<SearchBudget nodes=%r, edges=%r, enumeration=%r, code_edges=%r>" % (
            self.max_nodes,
            self.max_edges,
            self.max_enumeration,
            self.max_code_edges,
        )

    def stop(self, message):
        if self.abort == RAISE:
            raise BudgetExceeded(message)
        return None

    def fits(self, dag):
        return dag.num_nodes <= self.max_nodes and dag.num_edges <= self.max_edges

    def _check_size(self, dag):
        if not self.fits(dag):
            return self.stop(
                "network has %s nodes and %s edges; budget is %s and %s"
                % (dag.num_nodes, dag.num_edges, self.max_nodes, self.max_edges)
            )
        return True


def enumerate_paths(dag, s, t, budget=None):
    """
    Every s-t path, as Path objects.
    """
    budget = budget or SearchBudget()
    if budget._check_size(dag) is None:
        return None
    graph = dag.to_networkx()
    paths = []
    for steps in nx.all_simple_edge_paths(graph, s, t):
        paths.append(Path(dag, [key for _, _, key in steps], start=s))
        if len(paths) > budget.max_enumeration:
            return budget.stop("more than %s paths" % budget.max_enumeration)
    return paths


def enumerate_path_families(dag, s, t, f, budget=None):
    """
    Every family of f edge-disjoint s-t paths, one per distinct edge
    set.
    """
    budget = budget or SearchBudget()
    paths = enumerate_paths(dag, s, t, budget)
    if paths is None:
        return None
    families = {}
    steps = [0]

    def extend(start, chosen, used):
        steps[0] += 1
        if steps[0] > budget.max_enumeration:
            raise BudgetExceeded("more than %s partial families" % budget.max_enumeration)
        if len(chosen) == f:
            families.setdefault(used, PathFamily(dag, s, t, chosen))
            return
        for index in range(start, len(paths)):
            path = paths[index]
            if not used & path.edge_set:
                extend(index + 1, chosen + [path], used | path.edge_set)

    try:
        extend(0, [], frozenset())
    except BudgetExceeded:
        if budget.abort == RAISE:
            raise
        return None
    return list(families.values())


def family_a_set(dag, s, t, budget=None):
    """
    The edges common to every maximum path family.
    """
    value, _ = find_flow(dag, s, t)
    if value == 0:
        raise NoFlow("no flow from %r to %r" % (dag.labels[s], dag.labels[t]))
    families = enumerate_path_families(dag, s, t, value, budget)
    if families is None:
        return None
    return frozenset.intersection(*[family.edge_set() for family in families])


def enumerate_all_cuts(dag, s, t, budget=None):
    """
    The cut of every node partition with s on one side and t on the
    other.
    """
    budget = budget or SearchBudget()
    if budget._check_size(dag) is None:
        return None
    others = [node for node in range(dag.num_nodes) if node not in (s, t)]
    cuts = []
    for choice in itertools.product((False, True), repeat=len(others)):
        side = {s}
        side.update(node for node, chosen in zip(others, choice) if chosen)
        cuts.append(Cut(dag, side, cut_edges(dag, side)))
    return cuts


def minimum_cuts(cuts):
    smallest = min(cut.capacity for cut in cuts)
    return [cut for cut in cuts if cut.capacity == smallest]


def cut_a_set(dag, s, t, budget=None):
    """
    The union of all minimum cuts.
    """
    cuts = enumerate_all_cuts(dag, s, t, budget)
    if cuts is None:
        return None
    return frozenset().union(*[cut.edges for cut in minimum_cuts(cuts)])


# GF(2) pairs as integers a + 2b; a subspace as a 4-bit mask of members
_ZERO_SPACE = 1


def _grow(mask, vector):
    grown = mask
    for member in range(4):
        if mask >> member & 1:
            grown |= 1 << (member ^ vector)
    return grown


_GROW = [[_grow(mask, vector) for vector in range(4)] for mask in range(16)]
_MEMBERS = [[vector for vector in range(4) if mask >> vector & 1] for mask in range(16)]


def _as_pair(vector):
    return (vector & 1, vector >> 1)


def _code_search(inst, budget, count):
    unit = unit_augmented(inst)
    dag = unit.dag
    information = unit.info.all_edges()
    if dag.num_edges - len(information) > budget.max_code_edges:
        return unit, budget.stop(
            "%s edges to code; budget is %s"
            % (dag.num_edges - len(information), budget.max_code_edges)
        )
    sources = {unit.S(1): 1, unit.S(2): 2}
    sinks = {unit.T(1): 1, unit.T(2): 2}
    order = dag.edge_order()
    last_out = {}
    for edge in order:
        last_out[dag.tails[edge]] = edge
    # an edge whose head cannot reach a sink may as well stay idle
    graph = dag.to_networkx()
    useful_heads = {unit.t1, unit.t2}
    for sink in (unit.t1, unit.t2):
        useful_heads |= nx.ancestors(graph, sink)
    states = {(_ZERO_SPACE,) * dag.num_nodes: 1 if count else None}
    layers = []
    for edge in order:
        tail, head = dag.tails[edge], dag.heads[edge]
        grown = {}
        for state, value in states.items():
            if edge in sources:
                options = [sources[edge]]
            else:
                options = _MEMBERS[state[tail]]
            if edge in sinks:
                options = [vector for vector in options if vector == sinks[edge]]
            elif not count and head not in useful_heads:
                options = [0]
            for vector in options:
                spaces = list(state)
                spaces[head] = _GROW[spaces[head]][vector]
                if last_out[tail] == edge:
                    spaces[tail] = _ZERO_SPACE
                if not dag.out_edges[head]:
                    spaces[head] = _ZERO_SPACE
                key = tuple(spaces)
                if count:
                    grown[key] = grown.get(key, 0) + value
                elif key not in grown:
                    grown[key] = (state, vector)
        if len(grown) > budget.max_enumeration:
            return unit, budget.stop("more than %s search states" % budget.max_enumeration)
        states = grown
        layers.append((edge, grown))
        if not states:
            break
    if count:
        return unit, sum(states.values())
    if not states:
        return unit, False
    state = next(iter(states))
    pairs = {}
    for edge, layer in reversed(layers):
        state, vector = layer[state]
        pairs[edge] = _as_pair(vector)
    return unit, LinearCode(pairs)


def search_gf2_code(inst, budget=None):
    """
    Find a valid GF(2) code by exhaustive search, or None if there is
    none.

    Edges are coded in topological order, each choosing a pair in
    the span of what has reached its tail; partial assignments that
    leave every node in the same state are merged.
    """
    budget = budget or SearchBudget()
    _, found = _code_search(inst, budget, count=False)
    if found is None or found is False:
        return None
    return found


def exhaustive_gf2_solvable(inst, budget=None):
    budget = budget or SearchBudget()
    _, found = _code_search(inst, budget, count=False)
    if found is None:
        return None
    return found is not False


def count_gf2_codes(inst, budget=None):
    """
    The exact number of valid GF(2) codes.
    """
    budget = budget or SearchBudget()
    _, total = _code_search(inst, budget, count=True)
    return total
