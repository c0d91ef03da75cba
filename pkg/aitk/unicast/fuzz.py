# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Cross-check the fast algorithms against the brute-force oracles on
seeded random instances.

Instance i is generated from seed + i, so any mismatch can be
reproduced with `aitk-unicast gen` and the reported parameters.
"""

import random

from .aset import ASet, a_set, a_set_by_deletion
from .coding import extend_code, validate_code
from .config import get_quiet
from .errors import HypothesisViolated, UnicastError
from .flow import find_flow
from .generator import GenSpec, generate
from .netfile import format_instance
from .oracle import SKIP, SearchBudget, cut_a_set, exhaustive_gf2_solvable, family_a_set
from .solvability import DISJOINT_ASETS, decide, decide_by_asets, verify_certificate
from .templates import TEMPLATES
from .utils import json_dump, progress_bar
from .witness import avoiding_path, disjoint_st_paths, find_embedding

MULTI_RATE = 0.3
TEMPLATE_RATE = 0.5


class Mismatch:
    """
    One failed check on one generated instance.
    """

    def __init__(self, index, spec, check, detail, inst=None):
        self.index = index
        self.spec = spec
        self.check = check
        self.detail = detail
        self.inst = inst

    def __repr__(self):
        return "<Mismatch #%r seed=%r check=%r>" % (self.index, self.spec.seed, self.check)

    def to_json(self):
        config = {
            "index": self.index,
            "check": self.check,
            "detail": self.detail,
            "gen": self.spec.to_json(),
        }
        if self.inst is not None:
            config["network"] = format_instance(self.inst).splitlines()
        return config


class FuzzReport:
    """
    Results of a fuzz run, in instance order.
    """

    def __init__(self, count, seed, max_nodes, max_edges):
        self.count = count
        self.seed = seed
        self.max_nodes = max_nodes
        self.max_edges = max_edges
        self.mismatches = []
        self.branches = {}
        self.templates = {}
        self.skipped = 0

    def __repr__(self):
        return "<FuzzReport count=%r, mismatches=%r>" % (self.count, len(self.mismatches))

    @property
    def ok(self):
        return len(self.mismatches) == 0

    def add(self, mismatch):
        self.mismatches.append(mismatch)

    def info(self):
        print(
            "Checked %s instance(s) from seed %s (at most %s nodes, %s edges)"
            % (self.count, self.seed, self.max_nodes, self.max_edges)
        )
        for branch in sorted(self.branches):
            print("    %-18s %s" % (branch, self.branches[branch]))
        for tag in sorted(self.templates):
            print("    template %-9s %s" % (tag, self.templates[tag]))
        if self.skipped:
            print("Oracle skipped %s instance(s) over budget" % self.skipped)
        if self.ok:
            print("No mismatches")
        for mismatch in self.mismatches:
            print(
                "MISMATCH #%s (%s): %s; reproduce with: gen --nodes %s --edges %s --seed %s%s%s"
                % (
                    mismatch.index,
                    mismatch.check,
                    mismatch.detail,
                    mismatch.spec.nodes,
                    mismatch.spec.edges,
                    mismatch.spec.seed,
                    " --multi" if mismatch.spec.multi else "",
                    " --template %s" % mismatch.spec.template if mismatch.spec.template else "",
                )
            )

    def to_json(self):
        return {
            "count": self.count,
            "seed": self.seed,
            "max_nodes": self.max_nodes,
            "max_edges": self.max_edges,
            "branches": dict(self.branches),
            "templates": dict(self.templates),
            "skipped": self.skipped,
            "mismatches": [mismatch.to_json() for mismatch in self.mismatches],
        }

    def save(self, filename):
        with open(filename, "w") as fp:
            json_dump(self.to_json(), fp)


def random_spec(seed, max_nodes=10, max_edges=16, template_rate=TEMPLATE_RATE):
    """
    The GenSpec for one fuzz instance; sizes are drawn from the seed.

    With probability `template_rate` the spec subdivides one of the
    templates that fits within max_nodes and max_edges, so that every
    kind of witness shows up in a run.
    """
    rng = random.Random(seed)
    fitting = [
        tag
        for tag in sorted(TEMPLATES)
        if len(TEMPLATES[tag].nodes) <= max_nodes and len(TEMPLATES[tag].edges) <= max_edges
    ]
    if fitting and rng.random() < template_rate:
        template = TEMPLATES[rng.choice(fitting)]
        multi = rng.random() < MULTI_RATE
        extra = rng.randint(
            0, min(max_nodes - len(template.nodes), max_edges - len(template.edges))
        )
        nodes = len(template.nodes) + extra
        least = len(template.edges) + extra
        limit = max_edges if multi else min(max_edges, nodes * (nodes - 1) // 2)
        edges = rng.randint(least, max(least, limit))
        return GenSpec(nodes, edges, seed, multi=multi, template=template.tag)
    nodes = rng.randint(3, max_nodes)
    multi = rng.random() < MULTI_RATE
    limit = max_edges if multi else min(max_edges, nodes * (nodes - 1) // 2)
    edges = rng.randint(2, max(2, limit))
    return GenSpec(nodes, edges, seed, multi=multi)


def _edge_set(result):
    if isinstance(result, ASet):
        return result.edge_set
    return frozenset(result)


def check_a_sets(inst, budget, a_set_function=a_set):
    """
    Compare the A-set of each session on the raw network four ways.
    Returns a list of (check, detail) problems.
    """
    problems = []
    dag = inst.dag
    for i in (1, 2):
        s, t = inst.raw_source(i), inst.raw_sink(i)
        if find_flow(dag, s, t)[0] == 0:
            continue
        fast = _edge_set(a_set_function(dag, s, t))
        methods = {
            "deletion": a_set_by_deletion(dag, s, t).edge_set,
            "families": family_a_set(dag, s, t, budget),
            "cuts": cut_a_set(dag, s, t, budget),
        }
        for name, edges in methods.items():
            if edges is not None and edges != fast:
                problems.append(
                    (
                        "a-set",
                        "session %s: fast %s, %s %s"
                        % (i, sorted(fast), name, sorted(edges)),
                    )
                )
    return problems


def check_structure(verdict):
    problems = []
    unit = verdict.augmented
    if unit is None:
        return problems
    a11, a22 = verdict.asets[1, 1], verdict.asets[2, 2]
    if verdict.branch == DISJOINT_ASETS:
        side, path = avoiding_path(unit)
        opposite = a22 if side == 1 else a11
        if path.edge_set & opposite.edge_set:
            problems.append(("avoiding-path", "session %s path meets the other A-set" % side))
        return problems
    positions = [a11.index(edge) for edge in verdict.shared]
    if positions != list(range(positions[0], positions[0] + len(positions))):
        problems.append(("contiguous", "shared edges at A(1,1) positions %r" % positions))
        return problems
    p, q = disjoint_st_paths(unit)
    if p.edge_set & q.edge_set != frozenset(verdict.shared):
        problems.append(("disjoint-paths", "P and Q meet outside the shared A-set"))
    return problems


def check_instance(inst, budget, a_set_function=a_set):
    """
    Run every check on one instance.

    Returns (verdict, oracle answer or None if over budget, problems,
    witness template tag or None).
    """
    problems = []
    verdict = decide(inst)
    oracle = exhaustive_gf2_solvable(inst, budget)
    if oracle is not None and oracle != verdict.solvable:
        problems.append(
            (
                "decide-vs-oracle",
                "decide says %s (%s), exhaustive search says %s"
                % (verdict.decision, verdict.branch, "solvable" if oracle else "unsolvable"),
            )
        )
    try:
        by_asets = decide_by_asets(inst)
    except HypothesisViolated:
        by_asets = None
    if by_asets is not None and by_asets.decision != verdict.decision:
        problems.append(
            (
                "asets-vs-decide",
                "A-set test says %s, decide says %s" % (by_asets.decision, verdict.decision),
            )
        )
    problems.extend(check_a_sets(inst, budget, a_set_function))
    tag = None
    try:
        if verdict.solvable:
            template, embedding = find_embedding(inst, verdict)
            tag = template.tag
            code = extend_code(embedding.instance, template, embedding)
            check = validate_code(embedding.instance, code)
            if not check:
                problems.append(("code", "template %s: %s" % (template.tag, check.reason)))
        elif verdict.certificate is not None:
            if not verify_certificate(verdict.augmented, verdict.certificate):
                problems.append(("certificate", "certificate %r does not verify" % verdict.certificate))
        if verdict.shared or verdict.branch == DISJOINT_ASETS:
            problems.extend(check_structure(verdict))
    except UnicastError as exc:
        problems.append(("construction", "%s: %s" % (type(exc).__name__, exc)))
    return verdict, oracle, problems, tag


def run_fuzz(
    count,
    max_nodes=10,
    max_edges=16,
    seed=0,
    budget=None,
    a_set_function=a_set,
    quiet=None,
    report=None,
    template_rate=TEMPLATE_RATE,
):
    """
    Check `count` random instances.

    Args:
        * count: (int) number of instances
        * max_nodes: (int) largest node count drawn
        * max_edges: (int) largest edge count drawn
        * seed: (int) instance i uses seed + i
        * budget: (SearchBudget, optional) oracle limits; over-budget
          instances skip the oracle comparisons
        * a_set_function: (callable) the A-set method under test,
          called as a_set_function(dag, s, t)
        * quiet: (bool) suppress the progress bar and summary
        * report: (str, optional) write the FuzzReport as JSON here
        * template_rate: (float) share of instances seeded from a template

    Returns a FuzzReport.
    """
    quiet = get_quiet(quiet)
    if count < 0:
        raise ValueError("count must not be negative: %r" % count)
    if max_nodes < 3:
        raise ValueError("max_nodes must be at least 3: %r" % max_nodes)
    if max_edges < 2:
        raise ValueError("max_edges must be at least 2: %r" % max_edges)
    if budget is None:
        budget = SearchBudget(abort=SKIP)
    results = FuzzReport(count, seed, max_nodes, max_edges)
    for index in progress_bar(range(count), show_progress=not quiet):
        spec = random_spec(seed + index, max_nodes, max_edges, template_rate)
        inst = generate(spec)
        try:
            verdict, oracle, problems, tag = check_instance(inst, budget, a_set_function)
        except UnicastError as exc:
            results.add(Mismatch(index, spec, "error", "%s: %s" % (type(exc).__name__, exc), inst))
            continue
        results.branches[verdict.branch] = results.branches.get(verdict.branch, 0) + 1
        if tag is not None:
            results.templates[tag] = results.templates.get(tag, 0) + 1
        if oracle is None:
            results.skipped += 1
        for check, detail in problems:
            results.add(Mismatch(index, spec, check, detail, inst))
    if not quiet:
        results.info()
    if report is not None:
        results.save(report)
    return results
