# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Embeddings of canonical templates into solvable instances.

An embedding maps every template edge to a path of the instance so
that template sources and sinks land on the instance's sources and
sinks, paths meet wherever template edges meet, and no two paths
share an edge. Each construction below works on the unit-augmented
instance and returns (Template, Embedding).
"""

from .aset import chain_decomposition
from .errors import (
    BridgeFlowViolation,
    ConstructionError,
    HypothesisViolated,
    NoFlow,
    NotSolvable,
)
from .flow import bfs_path, max_flow
from .graph import Path, path_concat, unit_augmented
from .solvability import (
    CROSS_PATHS_EXIST,
    DISJOINT_ASETS,
    PRODUCT_GE_2,
    cross_path_avoiding,
    decide,
    raw_flows,
    shared_a_set,
)
from .templates import (
    BOTTLENECK,
    BUTTERFLY,
    DISJOINT,
    GRAIL,
    GRAIL_SWAPPED,
    TERMINALS,
)
from .utils import Check


class Embedding:
    """
    A map from template edges, as (tail label, head label), to paths
    of an instance.
    """

    def __init__(self, template, paths, instance=None):
        self.template = template
        self.paths = dict(paths)
        self.instance = instance

    def __repr__(self):
        return "<Embedding of %s, %r paths>" % (self.template.tag, len(self.paths))

    @property
    def tag(self):
        return self.template.tag

    def image_edges(self):
        return frozenset(edge for path in self.paths.values() for edge in path.edges)

    def to_text(self):
        """
        One line per template edge: "(tail,head) -> node,node,...".
        """
        lines = []
        for tail, head in self.template.edges:
            path = self.paths.get((tail, head))
            lines.append(
                "(%s,%s) -> %s" % (tail, head, path.describe() if path else "?")
            )
        return "\n".join(lines)


def verify_embedding(inst, tmpl, emb):
    """
    Check that `emb` embeds `tmpl` into `inst`.

    Conditions are checked in order and the first failure is
    reported: 0, every template edge has a well-formed image of at
    least one edge; 1, images of edges leaving s1/s2 start at the
    instance's s1/s2; 2, images of edges entering t1/t2 end at its
    t1/t2; 3, where one template edge ends and another starts, their
    images meet; 4, no two images share an edge.
    """
    dag = inst.dag
    roles = dict(zip(TERMINALS, inst.roles))
    missing = [edge for edge in tmpl.edges if edge not in emb.paths]
    if missing or len(emb.paths) != len(tmpl.edges):
        return Check(False, 0, reason="template edges without an image: %r" % missing)
    for edge in tmpl.edges:
        path = emb.paths[edge]
        if not isinstance(path, Path) or not path.is_valid_in(dag):
            return Check(False, 0, reason="image of %r is not a path of the instance" % (edge,))
        if len(path) == 0:
            return Check(False, 0, reason="image of %r has no edges" % (edge,))
    for tail, head in tmpl.edges:
        path = emb.paths[tail, head]
        if tail in roles and path.tail != roles[tail]:
            return Check(
                False,
                1,
                reason="image of (%s,%s) starts at %r, not %r"
                % (tail, head, dag.labels[path.tail], dag.labels[roles[tail]]),
            )
    for tail, head in tmpl.edges:
        path = emb.paths[tail, head]
        if head in roles and path.head != roles[head]:
            return Check(
                False,
                2,
                reason="image of (%s,%s) ends at %r, not %r"
                % (tail, head, dag.labels[path.head], dag.labels[roles[head]]),
            )
    for node in tmpl.nodes:
        for incoming in tmpl.in_edges(node):
            for outgoing in tmpl.out_edges(node):
                if emb.paths[incoming].head != emb.paths[outgoing].tail:
                    return Check(
                        False,
                        3,
                        reason="images of %r and %r do not meet at %s"
                        % (incoming, outgoing, node),
                    )
    owner = {}
    for edge in tmpl.edges:
        for instance_edge in emb.paths[edge].edges:
            if instance_edge in owner:
                return Check(
                    False,
                    4,
                    edge=instance_edge,
                    reason="%s is used by the images of %r and %r"
                    % (dag.edge_label(instance_edge), owner[instance_edge], edge),
                )
            owner[instance_edge] = edge
    return Check(True)


def identity_embedding(inst, tmpl):
    """
    Embed a template into an instance built from the template's own
    labels: each template edge maps to its single edge, extended by
    the information edge at sources and sinks.
    """
    unit = unit_augmented(inst)
    dag = unit.dag
    paths = {}
    for tail, head in tmpl.edges:
        edges = []
        if tail in ("s1", "s2"):
            edges.append(unit.S(int(tail[1])))
        edges.append(dag.edge(tail, head))
        if head in ("t1", "t2"):
            edges.append(unit.T(int(head[1])))
        paths[tail, head] = Path(dag, edges)
    return Embedding(tmpl, paths, unit)


def _check_built(unit, template, embedding):
    check = verify_embedding(unit, template, embedding)
    if not check:
        raise ConstructionError(
            "built an invalid %s embedding: %s" % (template.tag, check.reason)
        )
    return template, embedding


def find_embedding(inst, verdict=None):
    """
    Find a template contained in a solvable instance.

    Args:
        * inst: (UnicastInstance) raw or unit-augmented
        * verdict: (Verdict, optional) the result of decide(inst)

    Returns (Template, Embedding); the embedding refers to the
    unit-augmented instance, also available as embedding.instance.
    """
    if verdict is None:
        verdict = decide(inst)
    if not verdict.solvable:
        raise NotSolvable("instance is unsolvable (%s)" % verdict.branch)
    if verdict.branch == PRODUCT_GE_2:
        return embed_case_flow_ge2(inst)
    elif verdict.branch == DISJOINT_ASETS:
        return embed_case_disjoint_asets(inst)
    elif verdict.branch == CROSS_PATHS_EXIST:
        return embed_case_shared_aset(inst)
    raise ValueError("unexpected branch: %r" % verdict.branch)


def _a_sets(inst):
    try:
        return shared_a_set(inst)
    except NoFlow as exc:
        raise HypothesisViolated(str(exc))


def _across_bridge(unit, chain, prefix, suffix, branches, crossing):
    """
    Embed A, B or C given a route of session `chain` that runs
    prefix, then either of the two `branches`, then suffix, and a path
    `crossing` of the other session that touches no edge of the route
    outside the branches.
    """
    dag = unit.dag
    other_session = 3 - chain
    sc, tc = "s%s" % chain, "t%s" % chain
    so, to = "s%s" % other_session, "t%s" % other_session
    first, second = branches
    members = first.edge_set | second.edge_set
    hits = [edge for edge in crossing.edges if edge in members]
    if not hits:
        paths = {
            (sc, tc): path_concat(prefix, first, suffix),
            (so, to): crossing,
        }
        return _check_built(unit, DISJOINT, Embedding(DISJOINT, paths, unit))
    entry, leave = hits[0], hits[-1]
    main, side = (first, second) if entry in first else (second, first)
    start, end = main.tail, main.head
    if leave in main:
        detour = path_concat(
            crossing.section(crossing.tail, dag.tails[entry]),
            main.section(dag.tails[entry], dag.heads[leave]),
            crossing.section(dag.heads[leave], crossing.head),
        )
        paths = {
            (sc, tc): path_concat(prefix, side, suffix),
            (so, to): detour,
        }
        return _check_built(unit, DISJOINT, Embedding(DISJOINT, paths, unit))
    if dag.tails[entry] == start:
        # the crossing path reaches the branches' common start
        detour = path_concat(
            crossing.section(crossing.tail, start),
            side.section(start, dag.heads[leave]),
            crossing.section(dag.heads[leave], crossing.head),
        )
        paths = {
            (sc, tc): path_concat(prefix, main, suffix),
            (so, to): detour,
        }
        return _check_built(unit, DISJOINT, Embedding(DISJOINT, paths, unit))
    if dag.heads[leave] == end:
        detour = path_concat(
            crossing.section(crossing.tail, dag.tails[entry]),
            main.section(dag.tails[entry], end),
            crossing.section(end, crossing.head),
        )
        paths = {
            (sc, tc): path_concat(prefix, side, suffix),
            (so, to): detour,
        }
        return _check_built(unit, DISJOINT, Embedding(DISJOINT, paths, unit))
    # last hit on the entry branch; every later hit is on the other one
    k = max(index for index, edge in enumerate(hits) if edge in main)
    last_main, first_side = hits[k], hits[k + 1]
    middle = dag.heads[last_main]
    if middle == dag.tails[first_side]:
        # both branches pass through `middle`; exchanging their ends
        # puts entry and leave on the same branch
        swapped = (
            path_concat(main.section(start, middle), side.section(middle, end)),
            path_concat(side.section(start, middle), main.section(middle, end)),
        )
        return _across_bridge(unit, chain, prefix, suffix, swapped, crossing)
    template = GRAIL if chain == 1 else GRAIL_SWAPPED
    paths = {
        (sc, "v1"): prefix,
        (so, "v2"): crossing.section(crossing.tail, dag.tails[entry]),
        ("v1", "v2"): main.section(main.tail, dag.tails[entry]),
        ("v1", "v4"): side.section(side.tail, dag.tails[first_side]),
        ("v2", "v3"): main.section(dag.tails[entry], dag.heads[last_main]),
        ("v3", "v4"): crossing.section(dag.heads[last_main], dag.tails[first_side]),
        ("v3", "v6"): main.section(dag.heads[last_main], main.head),
        ("v4", "v5"): side.section(dag.tails[first_side], dag.heads[leave]),
        ("v5", "v6"): side.section(dag.heads[leave], side.head),
        ("v5", to): crossing.section(dag.heads[leave], crossing.head),
        ("v6", tc): suffix,
    }
    return _check_built(unit, template, Embedding(template, paths, unit))


def embed_case_flow_ge2(inst):
    """
    Embed A, B or C when one session has flow at least 2.

    Two edge-disjoint routes of that session form the bridge; the
    other session's path either misses them, crosses on one branch
    (both give A), or enters on one branch and leaves on the other
    (B, or C when session 2 is the wide one).
    """
    unit = unit_augmented(inst)
    flows = raw_flows(unit)
    if min(flows) == 0 or max(flows) < 2:
        raise HypothesisViolated("needs flows >= 1 with one >= 2, got %r" % (flows,))
    chain = 1 if flows[0] >= 2 else 2
    other = 3 - chain
    dag = unit.dag
    _, bridge = max_flow(dag, unit.raw_source(chain), unit.raw_sink(chain), limit=2)
    crossing = bfs_path(dag, unit.source(other), unit.sink(other))
    prefix = Path(dag, [unit.S(chain)])
    suffix = Path(dag, [unit.T(chain)])
    return _across_bridge(unit, chain, prefix, suffix, bridge.paths, crossing)


def avoiding_path(inst):
    """
    When the sessions' A-sets are disjoint, find either an s1-t1
    path missing the A-set of session 2, returned as (1, path), or an
    s2-t2 path missing the A-set of session 1, returned as (2, path).
    """
    unit, a11, a22, shared = _a_sets(inst)
    if shared:
        raise HypothesisViolated("the sessions' A-sets share %r edge(s)" % len(shared))
    dag = unit.dag
    walk = bfs_path(dag, unit.s1, unit.t1)
    on_a22 = [edge for edge in walk.edges if edge in a22]
    if not on_a22:
        return 1, walk
    crossing = on_a22[0]
    before = walk.edges[: walk.edges.index(crossing)]
    m = sum(1 for edge in before if edge in a11)
    removed_before = frozenset([a11[m - 1]]) if m > 0 else frozenset()
    removed_after = frozenset([a11[m]]) if m < len(a11) else frozenset()
    early = bfs_path(dag, unit.s2, unit.t2, removed_before)
    late = bfs_path(dag, unit.s2, unit.t2, removed_after)
    if early is None or late is None:
        raise ConstructionError("an edge outside A(2,2) disconnects session 2")
    head = dag.heads[crossing]
    path = path_concat(early.section(unit.s2, head), late.section(head, unit.t2))
    if path.edge_set & a11.edge_set:
        raise ConstructionError("spliced session 2 path meets A(1,1)")
    return 2, path


def embed_case_disjoint_asets(inst):
    """
    Embed A, B or C when the sessions' A-sets are disjoint.

    The session whose A-set the avoiding path misses is laid out as
    its chain decomposition; the avoiding path meets at most one
    bridge of it.
    """
    unit, a11, a22, shared = _a_sets(inst)
    if shared:
        raise HypothesisViolated("the sessions' A-sets share %r edge(s)" % len(shared))
    side, crossing = avoiding_path(unit)
    chain = 3 - side
    aset = a11 if chain == 1 else a22
    decomposition = chain_decomposition(
        unit.dag, unit.source(chain), unit.sink(chain), aset=aset
    )
    touched = sorted(
        {decomposition.bridge_of(edge) for edge in crossing.edges} - {None}
    )
    if not touched:
        paths = {
            ("s%s" % chain, "t%s" % chain): decomposition.assemble(),
            ("s%s" % side, "t%s" % side): crossing,
        }
        return _check_built(unit, DISJOINT, Embedding(DISJOINT, paths, unit))
    if len(touched) > 1:
        raise ConstructionError("avoiding path meets bridges %r" % touched)
    index = touched[0]
    return _across_bridge(
        unit,
        chain,
        decomposition.prefix(index),
        decomposition.suffix(index),
        decomposition.bridges[index].paths,
        crossing,
    )


def _bridge(dag, start, end):
    value, family = max_flow(dag, start, end, limit=2)
    if value < 2:
        raise BridgeFlowViolation(
            "gap %r -> %r has flow %r" % (dag.labels[start], dag.labels[end], value)
        )
    return family.paths


def _shared_sections(inst):
    """
    Build the six pieces around the shared A-set edges e_m..e_{m+j}:
    disjoint session-1 and session-2 paths into s = tail(e_m), the
    two routes across the shared run, and disjoint paths out of
    t = head(e_{m+j}).
    """
    unit, a11, a22, shared = _a_sets(inst)
    if not shared:
        raise HypothesisViolated("the sessions' A-sets are disjoint")
    dag = unit.dag
    first = a11.index(shared[0])
    last = a11.index(shared[-1])
    if last - first + 1 != len(shared):
        raise ConstructionError("shared A-set edges are not consecutive")
    if first == 0 or last == len(a11) - 1:
        raise ConstructionError("an information edge is in both A-sets")
    s = dag.tails[shared[0]]
    t = dag.heads[shared[-1]]
    walk = bfs_path(dag, unit.s1, unit.t1)

    previous = a11[first - 1]
    upstream = bfs_path(dag, unit.s2, unit.t2, frozenset([previous]))
    if upstream is None:
        raise ConstructionError("%s disconnects session 2" % dag.edge_label(previous))
    p_head = walk.section(unit.s1, dag.heads[previous])
    q_head = upstream.section(unit.s2, s)
    if dag.heads[previous] != s:
        one, two = _bridge(dag, dag.heads[previous], s)
        hits = [edge for edge in q_head.edges if edge in one or edge in two]
        if not hits:
            p_head = path_concat(p_head, one)
        else:
            edge = hits[0]
            near, far = (one, two) if edge in one else (two, one)
            q_head = path_concat(
                q_head.section(unit.s2, dag.heads[edge]),
                near.section(dag.heads[edge], s),
            )
            p_head = path_concat(p_head, far)

    following = a11[last + 1]
    downstream = bfs_path(dag, unit.s2, unit.t2, frozenset([following]))
    if downstream is None:
        raise ConstructionError("%s disconnects session 2" % dag.edge_label(following))
    p_tail = walk.section(dag.tails[following], unit.t1)
    q_tail = downstream.section(t, unit.t2)
    if dag.tails[following] != t:
        one, two = _bridge(dag, t, dag.tails[following])
        hits = [edge for edge in q_tail.edges if edge in one or edge in two]
        if not hits:
            p_tail = path_concat(one, p_tail)
        else:
            edge = hits[-1]
            near, far = (one, two) if edge in one else (two, one)
            q_tail = path_concat(
                near.section(t, dag.tails[edge]),
                q_tail.section(dag.tails[edge], unit.t2),
            )
            p_tail = path_concat(far, p_tail)

    p_middle = [Path(dag, [shared[0]])]
    q_middle = [Path(dag, [shared[0]])]
    for before, after in zip(shared, shared[1:]):
        if dag.heads[before] != dag.tails[after]:
            one, two = _bridge(dag, dag.heads[before], dag.tails[after])
            p_middle.append(one)
            q_middle.append(two)
        p_middle.append(Path(dag, [after]))
        q_middle.append(Path(dag, [after]))
    sections = {
        "p_head": p_head,
        "q_head": q_head,
        "p_middle": path_concat(*p_middle),
        "q_middle": path_concat(*q_middle),
        "p_tail": p_tail,
        "q_tail": q_tail,
    }
    return unit, shared, sections


def disjoint_st_paths(inst):
    """
    An s1-t1 path P and an s2-t2 path Q whose common edges are
    exactly the edges shared by both sessions' A-sets.
    """
    unit, shared, sections = _shared_sections(inst)
    p = path_concat(sections["p_head"], sections["p_middle"], sections["p_tail"])
    q = path_concat(sections["q_head"], sections["q_middle"], sections["q_tail"])
    if p.edge_set & q.edge_set != frozenset(shared):
        raise ConstructionError("P and Q meet outside the shared A-set")
    return p, q


def embed_bottleneck_skeleton(inst):
    """
    Embed the two-sources, one-shared-section, two-sinks network
    into an instance whose sessions' A-sets overlap. Such an instance
    need not be solvable.
    """
    unit, shared, sections = _shared_sections(inst)
    paths = {
        ("s1", "v1"): sections["p_head"],
        ("s2", "v1"): sections["q_head"],
        ("v1", "v2"): sections["p_middle"],
        ("v2", "t1"): sections["p_tail"],
        ("v2", "t2"): sections["q_tail"],
    }
    return _check_built(unit, BOTTLENECK, Embedding(BOTTLENECK, paths, unit))


def embed_case_shared_aset(inst):
    """
    Embed the butterfly when the sessions' A-sets overlap but both
    cross pairs connect around the overlap.
    """
    unit, _, _, shared = _a_sets(inst)
    if not shared:
        raise HypothesisViolated("the sessions' A-sets are disjoint")
    p, q = disjoint_st_paths(unit)
    dag = unit.dag
    first_cross = cross_path_avoiding(unit, shared, unit.s1, unit.t2)
    second_cross = cross_path_avoiding(unit, shared, unit.s2, unit.t1)
    if first_cross is None or second_cross is None:
        raise HypothesisViolated("a cross pair cannot avoid the shared A-set")
    first_shared, last_shared = shared[0], shared[-1]
    # where each cross path leaves one session path and joins the other
    leave_p = [edge for edge in first_cross.edges if edge in p][-1]
    join_q = [edge for edge in first_cross.edges if edge in q][0]
    leave_q = [edge for edge in second_cross.edges if edge in q][-1]
    join_p = [edge for edge in second_cross.edges if edge in p][0]
    heads, tails = dag.heads, dag.tails
    paths = {
        ("s1", "v1"): p.section(unit.s1, heads[leave_p]),
        ("v1", "v3"): p.section(heads[leave_p], tails[first_shared]),
        ("v1", "v5"): first_cross.section(heads[leave_p], tails[join_q]),
        ("v3", "v4"): p.section(tails[first_shared], heads[last_shared]),
        ("v4", "v5"): q.section(heads[last_shared], tails[join_q]),
        ("v5", "t2"): q.section(tails[join_q], unit.t2),
        ("s2", "v2"): q.section(unit.s2, heads[leave_q]),
        ("v2", "v3"): q.section(heads[leave_q], tails[first_shared]),
        ("v2", "v6"): second_cross.section(heads[leave_q], tails[join_p]),
        ("v4", "v6"): p.section(heads[last_shared], tails[join_p]),
        ("v6", "t1"): p.section(tails[join_p], unit.t1),
    }
    return _check_built(unit, BUTTERFLY, Embedding(BUTTERFLY, paths, unit))
