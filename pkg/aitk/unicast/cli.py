# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

"""
Command-line interface:

    aitk-unicast analyze FILE [--witness] [--code] [--certificate] [--via asets|alg45]
    aitk-unicast gen --nodes N --edges M --seed S [--multi] [--connected] [--template T] [--output FILE]
    aitk-unicast fuzz --count K --max-nodes N --max-edges M --seed S [--report FILE]
    aitk-unicast dot FILE [--overlay verdict|witness|code] [--svg FILE]

Exit status: 0 solvable (or success), 1 unsolvable (or fuzz
mismatch), 2 error.
"""

import argparse
import sys

from ._version import __version__
from .coding import extend_code
from .drawing import VALID_OVERLAYS, draw_svg, to_dot
from .errors import HypothesisViolated, UnicastError
from .flow import max_flow
from .fuzz import run_fuzz
from .generator import GenSpec, generate_text
from .netfile import read_instance
from .solvability import decide, decide_by_asets
from .templates import TEMPLATES
from .witness import find_embedding

EXIT_SOLVABLE = 0
EXIT_UNSOLVABLE = 1
EXIT_ERROR = 2

VIA_ASETS = "asets"
VIA_ALG45 = "alg45"


def print_flows(inst):
    """
    Print C(si, tj) for all four source/sink pairs of the raw network.
    """
    dag = inst.dag
    for i in (1, 2):
        for j in (1, 2):
            s, t = inst.raw_source(i), inst.raw_sink(j)
            value = max_flow(dag, s, t)[0] if s != t else "-"
            print("C(s%s,t%s) = %s" % (i, j, value))


def print_asets(verdict):
    for (i, j), aset in sorted(verdict.asets.items()):
        print("A(s%s,t%s) = %s" % (i, j, aset.describe() or "(empty)"))


def cmd_analyze(filename, witness=False, code=False, certificate=False, via=VIA_ALG45):
    """
    Decide one network file and print the report. Returns the exit
    status.
    """
    inst = read_instance(filename)
    print(
        "Network: %s (%s nodes, %s edges)"
        % (filename, inst.dag.num_nodes, inst.dag.num_edges)
    )
    print_flows(inst)
    verdict = None
    if via == VIA_ASETS:
        try:
            verdict = decide_by_asets(inst)
        except HypothesisViolated as exc:
            print("A-set test does not apply (%s); using the flow decision" % exc)
        else:
            print_asets(verdict)
    if verdict is None:
        verdict = decide(inst)
        if verdict.asets:
            print_asets(verdict)
    print("Verdict: %s (branch: %s)" % (verdict.decision, verdict.branch))
    if witness or code:
        if verdict.solvable:
            template, embedding = find_embedding(inst, verdict)
            if witness:
                print("Witness: template %s" % template.tag)
                print(embedding.to_text())
            if code:
                linear = extend_code(embedding.instance, template, embedding)
                print("Code (edge-id a b):")
                print(linear.to_text(embedding.instance.dag))
        else:
            print("No witness: the network is unsolvable")
    if certificate:
        if verdict.certificate is not None:
            print("Certificate:")
            verdict.certificate.info(verdict.augmented)
        elif verdict.solvable:
            print("No certificate: the network is solvable")
        else:
            print("No certificate: a session has no flow at all")
    return EXIT_SOLVABLE if verdict.solvable else EXIT_UNSOLVABLE


def cmd_gen(nodes, edges, seed=0, multi=False, connected=False, output=None, template=None):
    text = generate_text(
        GenSpec(nodes, edges, seed, multi=multi, connected=connected, template=template)
    )
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as fp:
            fp.write(text)
    return 0


def cmd_fuzz(count, max_nodes=10, max_edges=16, seed=0, report=None, quiet=None):
    results = run_fuzz(
        count,
        max_nodes=max_nodes,
        max_edges=max_edges,
        seed=seed,
        quiet=quiet,
        report=report,
    )
    return 0 if results.ok else 1


def cmd_dot(filename, overlay=None, svg=None):
    inst = read_instance(filename)
    if svg is None:
        sys.stdout.write(to_dot(inst, overlay))
    else:
        draw_svg(inst, overlay, svg).save()
        print("Wrote %s" % svg)
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="aitk-unicast",
        description="Solvability of 2-pair unicast network coding problems",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    analyze = commands.add_parser("analyze", help="decide a network file")
    analyze.add_argument("file")
    analyze.add_argument("--witness", action="store_true", help="print a template embedding")
    analyze.add_argument("--code", action="store_true", help="print a GF(2) code")
    analyze.add_argument(
        "--certificate", action="store_true", help="print the unsolvability certificate"
    )
    analyze.add_argument("--via", choices=[VIA_ASETS, VIA_ALG45], default=VIA_ALG45)

    gen = commands.add_parser("gen", help="generate a random network")
    gen.add_argument("--nodes", type=int, required=True)
    gen.add_argument("--edges", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--multi", action="store_true", help="allow parallel edges")
    gen.add_argument(
        "--connected", action="store_true", help="require s1->t1 and s2->t2 paths"
    )
    gen.add_argument(
        "--template", choices=sorted(TEMPLATES), help="subdivide this template and add noise"
    )
    gen.add_argument("--output", help="write here instead of standard output")

    fuzz = commands.add_parser("fuzz", help="check against the brute-force oracles")
    fuzz.add_argument("--count", type=int, default=1000)
    fuzz.add_argument("--max-nodes", type=int, default=10)
    fuzz.add_argument("--max-edges", type=int, default=16)
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--report", help="write a JSON report here")
    fuzz.add_argument("--quiet", action="store_true", default=None)

    dot = commands.add_parser("dot", help="render a network as DOT or SVG")
    dot.add_argument("file")
    dot.add_argument("--overlay", choices=[name for name in VALID_OVERLAYS if name])
    dot.add_argument("--svg", help="write an SVG picture here instead")
    return parser


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        if args.command == "analyze":
            return cmd_analyze(
                args.file,
                witness=args.witness,
                code=args.code,
                certificate=args.certificate,
                via=args.via,
            )
        elif args.command == "gen":
            return cmd_gen(
                args.nodes,
                args.edges,
                args.seed,
                args.multi,
                args.connected,
                args.output,
                args.template,
            )
        elif args.command == "fuzz":
            return cmd_fuzz(
                args.count,
                args.max_nodes,
                args.max_edges,
                args.seed,
                report=args.report,
                quiet=args.quiet,
            )
        elif args.command == "dot":
            return cmd_dot(args.file, args.overlay, args.svg)
    except (UnicastError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ERROR
    return EXIT_ERROR
