#!/usr/bin/env python3
"""
Spanner Bench - greedy t-spanner construction and verification
Builds spanners, checks stretch and pg certificates, measures structure,
runs parameter sweeps and the length-constrained cut toolkit.

Exit codes: 0 ok, 1 verification failed, 2 input/IO error, 3 internal failure.
"""

import argparse
import logging
import sys
import time
from datetime import date
from fractions import Fraction

from dotenv import load_dotenv

from analysis.arboricity import ARBORICITY_BUDGET, arboricity_exact
from analysis.pg import verify_pg_sequence, verify_spanner
from analysis.report import build_report, degeneracy_shape
from analysis.structure import degeneracy, girth
from cuts.demand import PAIR_ORIENTATIONS, cut_sparsity, exponential_demand, separated, sparsity_wrt_demand
from cuts.io import format_demand, format_flow, parse_cut, parse_demand, read_text, write_text
from cuts.moving_cut import APPLY_MODES, apply_cut
from cuts.routing import MWU_EPSILON, route_matching
from gen.families import GeneratorSpec, generate, named_matchings
from gen.reports import write_report_csv
from graph.edgelist import read_graph, write_graph
from spanner.certificate import read_certificate, write_certificate, write_round_csv
from spanner.greedy import DEFAULT_SEED, DEFAULT_THREADS, GreedyConfig, build_spanner, weighted_greedy_bucketed
from spanner.strategies import get_strategy
from sweep.plan import PARALLEL_STRATEGIES, read_plan
from sweep.plot import plot_sizes
from sweep.runner import run_sweep
from utils.debug import set_debug
from utils.errors import ContractViolation, InputError, PathLimitExceeded

load_dotenv()

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _load_graph(args):
    if getattr(args, 'gen', None):
        spec = GeneratorSpec.parse(args.gen, getattr(args, 'seed', DEFAULT_SEED))
        return generate(spec), spec
    if getattr(args, 'graph', None):
        return read_graph(args.graph), None
    raise InputError("give a graph file (--graph) or a generator spec (--gen)")


def _parse_matching(text: str) -> list[tuple[int, int]]:
    pairs = []
    for token in text.replace(' ', '').split(','):
        if not token:
            continue
        a, dash, b = token.partition('-')
        if not dash:
            raise InputError(f"matching edges are written u-v, got {token!r}")
        try:
            pairs.append((int(a), int(b)))
        except ValueError:
            raise InputError(f"matching edges are written u-v, got {token!r}")
    return pairs


def cmd_build(args) -> int:
    g, spec = _load_graph(args)
    print(f"📊 Graph: n={g.vertex_count}, m={g.edge_count}")
    started = time.perf_counter()

    if args.algo == 'bucketed':
        bucketed = weighted_greedy_bucketed(
            g, GreedyConfig(t=args.t, seed=args.seed, strategy=get_strategy(args.strategy), threads=args.threads)
        )
        millis = (time.perf_counter() - started) * 1000.0
        check = verify_spanner(g, bucketed.spanner, 2 * args.t)
        print(f"✓ {len(bucketed.buckets)} weight bucket(s), {bucketed.spanner.edge_count} edges kept")
        if args.out:
            write_graph(bucketed.spanner, f"{args.out}.txt")
        if not check.valid:
            print(f"❌ Stretch check failed: {check.describe()} (bound {2 * args.t})")
            return EXIT_VERIFY_FAILED
        print(f"✓ Verified as a {2 * args.t}-spanner: {check.describe()} ({millis:.1f} ms)")
        return EXIT_OK

    result = build_spanner(
        g, args.t, args.algo, args.strategy, args.seed, args.threads,
        named_rounds=named_matchings(spec) if spec else None,
    )
    millis = (time.perf_counter() - started) * 1000.0
    strategy = 'sequential' if args.algo == 'seq' else args.strategy
    report = build_report(
        g, result.spanner, args.t, result.rounds,
        algorithm=args.algo, strategy=strategy, seed=args.seed, millis=millis,
        arboricity_budget=args.budget,
    )
    print(f"✓ Built {report.m_spanner} edges in {report.rounds} round(s) ({millis:.1f} ms)")
    print(f"  girth={report.as_row()['girth']} degeneracy={report.degeneracy} arboricity={report.arboricity_text()}")
    print(f"  degeneracy shape t^3 log^3 n n^(1/t) = {degeneracy_shape(g.vertex_count, args.t):.1f}")

    if args.out:
        write_graph(result.spanner, f"{args.out}.txt")
        write_certificate(result.certificate, f"{args.out}.cert")
        write_round_csv(result.stats, f"{args.out}.rounds.csv")
        write_report_csv([report.as_row()], f"{args.out}.report.csv")
        print(f"✓ Wrote {args.out}.txt, .cert, .rounds.csv, .report.csv")

    violation = verify_pg_sequence(g.vertex_count, result.certificate, args.t)
    if violation is not None:
        print(f"❌ Certificate rejected: {violation}")
        return EXIT_INTERNAL
    if not report.valid:
        print(f"❌ Stretch check failed: max stretch {report.stretch_text()}")
        return EXIT_VERIFY_FAILED
    print(f"✓ Verified: max stretch {report.stretch_text()} <= {args.t}, certificate accepted")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    h = read_graph(args.spanner)
    check = verify_spanner(g, h, args.t)
    status = EXIT_OK
    if check.valid:
        print(f"✓ Stretch ok: {check.describe()}")
    else:
        print(f"❌ Not a {args.t}-spanner: {check.describe()}")
        status = EXIT_VERIFY_FAILED
    if args.certificate:
        seq = read_certificate(args.certificate, g.vertex_count)
        violation = verify_pg_sequence(g.vertex_count, seq, args.t)
        if violation is None and sorted(seq.edges()) == sorted(h.edge_pairs()):
            print(f"✓ Certificate accepted ({len(seq)} rounds)")
        elif violation is None:
            print("❌ Certificate edges differ from the spanner's edges")
            status = EXIT_VERIFY_FAILED
        else:
            print(f"❌ Certificate rejected: {violation}")
            status = EXIT_VERIFY_FAILED
    return status


def cmd_stats(args) -> int:
    g, _ = _load_graph(args)
    k, _ = degeneracy(g)
    arb = arboricity_exact(g, args.budget)
    g_value = girth(g)
    print(f"📊 n={g.vertex_count} m={g.edge_count}")
    print(f"  girth: {'inf' if g_value == float('inf') else g_value}")
    print(f"  degeneracy: {k}")
    print(f"  arboricity: {arb.describe()}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    plan = read_plan(args.plan)
    if args.threads:
        plan.threads = args.threads
    output = args.output or plan.output
    svg = args.svg or plan.svg
    print(f"📊 Sweep: {len(plan.instances())} instance(s) -> {output}")

    def progress(label, result):
        mark = '✓' if result.report.valid and result.certificate_ok else '❌'
        print(f"  {mark} {label}: m_spanner={result.report.m_spanner} rounds={result.report.rounds}")

    summary = run_sweep(plan, output, progress)
    if svg:
        plot_sizes(summary.reports, svg)
        print(f"✓ Plot written to {svg}")
    if not summary.ok:
        for failure in summary.failures:
            print(f"❌ {failure}")
        return EXIT_VERIFY_FAILED
    print(f"✅ {summary.rows} row(s) written, all verified")
    return EXIT_OK


def cmd_route_check(args) -> int:
    g, _ = _load_graph(args)
    matching = _parse_matching(args.matching)
    outcome = route_matching(g, matching, Fraction(args.delta), args.t, Fraction(args.cap), args.epsilon)
    if outcome.feasible:
        print(f"✓ Routable: {outcome.describe()}")
        if args.flow_out:
            write_text(args.flow_out, format_flow(outcome.flow))
        return EXIT_OK
    note = " (within the epsilon margin)" if outcome.within_margin else ""
    print(f"❌ Not routable{note}: {outcome.describe()}")
    return EXIT_VERIFY_FAILED


def cmd_cut(args) -> int:
    g = read_graph(args.graph)
    if args.cut_command == 'expdemand':
        result = exponential_demand(g, args.h, args.s)
        text = format_demand(result.vertex_demand)
        if args.out:
            write_text(args.out, text)
        else:
            print(text, end='')
        print(f"✓ {len(result.vertex_demand)} vertex pair(s), scale {result.scale}", file=sys.stderr)
        return EXIT_OK

    cut = parse_cut(read_text(args.cut), g)
    if args.cut_command == 'apply':
        cut_graph = apply_cut(g, cut, args.mode)
        if args.out:
            write_graph(cut_graph, args.out)
        print(f"✓ Applied cut of size {cut.size}: {cut_graph.edge_count} edges remain")
        return EXIT_OK
    if args.cut_command == 'sep':
        demand = parse_demand(read_text(args.demand))
        sep = separated(g, cut, demand, args.h)
        ratio = sparsity_wrt_demand(g, cut, demand, args.h)
        print(f"separated: {sep}")
        print(f"sparsity: {'undefined' if ratio is None else ratio}")
        return EXIT_OK
    value = cut_sparsity(g, cut, args.h, args.s, args.orientation)
    print(f"sparsity: {'inf' if value == float('inf') else value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='spanner-bench', description="Greedy t-spanner toolkit")
    parser.add_argument('--debug', action='store_true', help="write round traces to logs/debug_DATE.log")
    parser.add_argument('--verbose', '-v', action='store_true', help="INFO-level logging")
    sub = parser.add_subparsers(dest='command', required=True)

    def graph_source(p):
        p.add_argument('--graph', help="edge-list file")
        p.add_argument('--gen', help="generator spec, e.g. cycle:4 or er:512:0.01")
        p.add_argument('--seed', type=int, default=DEFAULT_SEED)

    p = sub.add_parser('build', help="construct a spanner")
    graph_source(p)
    p.add_argument('--t', type=int, required=True)
    p.add_argument('--algo', choices=['seq', 'par', 'bucketed'], default='par')
    p.add_argument('--strategy', choices=list(PARALLEL_STRATEGIES), default='greedy-maximal')
    p.add_argument('--threads', type=int, default=DEFAULT_THREADS)
    p.add_argument('--budget', type=int, default=ARBORICITY_BUDGET, help="max n for exact arboricity")
    p.add_argument('--out', help="output prefix")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser('verify', help="check a spanner and its certificate")
    p.add_argument('--graph', required=True)
    p.add_argument('--spanner', required=True)
    p.add_argument('--certificate')
    p.add_argument('--t', type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('stats', help="girth, degeneracy and arboricity")
    graph_source(p)
    p.add_argument('--budget', type=int, default=ARBORICITY_BUDGET)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser('sweep', help="run a sweep plan")
    p.add_argument('--plan', required=True)
    p.add_argument('--output')
    p.add_argument('--svg')
    p.add_argument('--threads', type=int)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser('route-check', help="length-bounded routing of a matching")
    graph_source(p)
    p.add_argument('--matching', required=True, help="edges as u-v,u-v,...")
    p.add_argument('--delta', default='1')
    p.add_argument('--t', type=int, required=True)
    p.add_argument('--cap', required=True)
    p.add_argument('--epsilon', type=float, default=MWU_EPSILON)
    p.add_argument('--flow-out')
    p.set_defaults(func=cmd_route_check)

    p = sub.add_parser('cut', help="moving cut tools")
    cut_sub = p.add_subparsers(dest='cut_command', required=True)
    c = cut_sub.add_parser('apply')
    c.add_argument('--graph', required=True)
    c.add_argument('--cut', required=True)
    c.add_argument('--mode', choices=list(APPLY_MODES), default='auto')
    c.add_argument('--out')
    c = cut_sub.add_parser('sep')
    c.add_argument('--graph', required=True)
    c.add_argument('--cut', required=True)
    c.add_argument('--demand', required=True)
    c.add_argument('--h', type=int, required=True)
    c = cut_sub.add_parser('sparsity')
    c.add_argument('--graph', required=True)
    c.add_argument('--cut', required=True)
    c.add_argument('--h', type=int, required=True)
    c.add_argument('--s', type=int, required=True)
    c.add_argument('--orientation', choices=list(PAIR_ORIENTATIONS), default='canonical')
    c = cut_sub.add_parser('expdemand')
    c.add_argument('--graph', required=True)
    c.add_argument('--h', type=int, required=True)
    c.add_argument('--s', type=int, required=True)
    c.add_argument('--out')
    p.set_defaults(func=cmd_cut)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format='%(asctime)s [%(levelname)s] %(message)s',
    )
    if args.debug:
        set_debug(True)
        print(f"🐛 Debug mode enabled, logging to logs/debug_{date.today().isoformat()}.log")

    try:
        return args.func(args)
    except (ContractViolation, PathLimitExceeded) as e:
        print(f"❌ Internal failure: {e}")
        return EXIT_INTERNAL
    except (InputError, OSError) as e:
        print(f"❌ {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n\n⚠️  Interrupted by user")
        sys.exit(1)
