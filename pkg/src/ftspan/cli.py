"""Command line interface.

Exit codes: 0 success (and OK verdicts), 1 failed verdict (stretch violation,
uncovered cycle, girth violation), 2 input, format, or budget errors.
"""

import argparse
import sys

from . import __version__
from .blocking import BlockingSet, extract_blocking_set, subsample_experiment, verify_blocking_set
from .experiment import ExperimentConfig, rows_to_csv, run_scaling_experiment
from .generators import (
    PRODUCT_KINDS,
    READINGS,
    biclique,
    complete_graph,
    cycle_graph,
    lower_bound_product,
    path_graph,
    petersen_graph,
    random_graph,
    reweight,
)
from .graph import FaultMode, GraphFormatError, dump_graph, load_graph, parse_graph, save_graph
from .spanner import GreedyTrace, SpannerParams, ft_greedy_spanner
from .verifier import BudgetExceededError, VerifyMethod, verify_ft_spanner


def _parse_family(text, seed, weights):
    name, _, arg = text.partition(":")
    if name == "complete":
        g = complete_graph(int(arg))
    elif name == "cycle":
        g = cycle_graph(int(arg))
    elif name == "path":
        g = path_graph(int(arg))
    elif name == "petersen":
        if arg:
            raise ValueError("petersen takes no size argument")
        g = petersen_graph()
    elif name == "biclique":
        a, b = arg.split(",")
        g = biclique(int(a), int(b))
    elif name == "gnp":
        n, p = arg.split(",")
        return random_graph(int(n), float(p), seed, weights)
    else:
        raise ValueError(f"unknown family {text!r}")
    if weights is not None:
        g = reweight(g, weights[0], weights[1], seed)
    return g


def _parse_weights(text):
    if text is None or text == "unit":
        return None
    lo, hi = text.split(",")
    return float(lo), float(hi)


def _read_graph(path):
    if path == "-":
        return parse_graph(sys.stdin.read())
    return load_graph(path)


def _write_text(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _mode(text):
    return FaultMode[text.upper()]


def _cmd_generate(args):
    weights = _parse_weights(args.weights)
    g = _parse_family(args.family, args.seed, weights)
    _write_text(dump_graph(g), args.output)
    return 0


def _cmd_spanner(args):
    g = _read_graph(args.graph)
    params = SpannerParams(k=args.k, f=args.f, mode=_mode(args.mode))
    result = ft_greedy_spanner(g, params)
    if args.trace:
        result.trace.save(args.trace)
    if args.output and args.output != "-":
        save_graph(result.graph, args.output)
        print(f"kept {result.graph.m} of {g.m} edges")
    else:
        sys.stdout.write(dump_graph(result.graph))
    return 0


def _cmd_verify(args):
    g = _read_graph(args.graph)
    h = _read_graph(args.spanner)
    params = SpannerParams(k=args.k, f=args.f, mode=_mode(args.mode))
    method = VerifyMethod.SAMPLED if args.method == "sampled" else VerifyMethod.EXHAUSTIVE
    report = verify_ft_spanner(
        g, h, params, method, samples=args.samples, seed=args.seed, budget=args.budget
    )
    print(report.to_line())
    return 0 if report.ok else 1


def _cmd_blocking(args):
    trace = GreedyTrace.load(args.trace)
    blocking = extract_blocking_set(trace)
    _write_text(blocking.to_text(), args.output)
    if args.max_len is not None:
        report = verify_blocking_set(trace.replay(), blocking, args.max_len)
        if report.ok:
            print(f"coverage OK cycles={report.cycles_checked}")
            return 0
        print(f"coverage FAIL cycle={','.join(map(str, report.uncovered_cycle))}")
        return 1
    return 0


def _cmd_subsample(args):
    h = _read_graph(args.spanner)
    blocking = BlockingSet.load(args.blocking)
    report = subsample_experiment(
        h, blocking, args.f, args.max_len, args.trials, seed=args.seed
    )
    _write_text(report.to_csv(), args.output)
    if args.output and args.output != "-":
        print(f"girth_ok {report.girth_ok_count}/{report.trials}")
    return 0 if report.girth_ok_count == report.trials else 1


def _cmd_experiment(args):
    config = ExperimentConfig(
        ns=tuple(int(x) for x in args.ns.split(",")),
        fs=tuple(int(x) for x in args.fs.split(",")),
        k=args.k,
        mode=_mode(args.mode),
        density=args.density,
        weight_range=_parse_weights(args.weights),
        seed=args.seed,
        repeats=args.repeats,
    )
    rows = run_scaling_experiment(config)
    _write_text(rows_to_csv(rows), args.output)
    return 0


def _cmd_lower_bound(args):
    base = _parse_family(args.base, args.seed, None)
    if args.product:
        combos = [(args.product, args.reading or "same-base-edge")]
    else:
        combos = [(kind, reading) for kind in PRODUCT_KINDS for reading in READINGS]
    header = f"{'product':<10} {'reading':<16} {'|B|':>4} {'L':>2} covered size_ok verdict"
    print(header)
    worst = 0
    for kind, reading in combos:
        inst = lower_bound_product(base, args.f, kind, reading)
        print(
            f"{inst.product_kind:<10} {inst.reading:<16} {len(inst.blocking):>4}"
            f" {inst.blocking_length:>2} {str(inst.blocking_verified).lower():<7}"
            f" {str(inst.size_bound_ok).lower():<7} {inst.verdict}"
        )
        if inst.verdict == "FAIL":
            worst = 1
        if args.blocking_out:
            inst.blocking.save(args.blocking_out)
        if args.graph_out:
            save_graph(inst.product, args.graph_out)
    return worst


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ftspan",
        description="Fault-tolerant graph spanners: build, verify, experiment.",
    )
    parser.add_argument("--version", action="version", version=f"ftspan {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a named graph family")
    p.add_argument("family", help="complete:N cycle:N path:N petersen biclique:A,B gnp:N,P")
    p.add_argument("--weights", help="'unit' or 'LO,HI' uniform weights")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(run=_cmd_generate)

    p = sub.add_parser("spanner", help="build a fault-tolerant greedy spanner")
    p.add_argument("graph", help="input graph file, '-' for stdin")
    p.add_argument("-k", type=float, required=True, help="stretch factor")
    p.add_argument("-f", type=int, default=0, help="fault budget")
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--trace", help="write the decision trace here")
    p.add_argument("-o", "--output")
    p.set_defaults(run=_cmd_spanner)

    p = sub.add_parser("verify", help="check the stretch guarantee by brute force")
    p.add_argument("graph")
    p.add_argument("spanner")
    p.add_argument("-k", type=float, required=True)
    p.add_argument("-f", type=int, default=0)
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--method", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10**9, help="max pair checks")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("blocking", help="extract a blocking set from a trace")
    p.add_argument("trace")
    p.add_argument("--max-len", type=int, help="verify coverage of cycles up to this many edges")
    p.add_argument("-o", "--output")
    p.set_defaults(run=_cmd_blocking)

    p = sub.add_parser("subsample", help="random vertex subsampling rounds")
    p.add_argument("spanner")
    p.add_argument("blocking")
    p.add_argument("-f", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(run=_cmd_subsample)

    p = sub.add_parser("experiment", help="spanner size scaling sweep")
    p.add_argument("--ns", required=True, help="comma-separated vertex counts")
    p.add_argument("--fs", required=True, help="comma-separated fault budgets")
    p.add_argument("-k", type=float, required=True)
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--weights", default="1,2", help="'unit' or 'LO,HI'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(run=_cmd_experiment)

    p = sub.add_parser("lower-bound", help="product constructions and their blocking audit")
    p.add_argument("--base", default="cycle:6", help="base graph family")
    p.add_argument("-f", type=int, default=4)
    p.add_argument("--product", choices=list(PRODUCT_KINDS))
    p.add_argument("--reading", choices=list(READINGS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--blocking-out")
    p.add_argument("--graph-out")
    p.set_defaults(run=_cmd_lower_bound)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ValueError, GraphFormatError, BudgetExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
