"""Command-line interface.

Subcommands: spectrum, energy, bounds, enumerate, decompose, gq, verify,
hunt. Graph sources are ``family:<name>[:k=v,...]``,
``enumerate:<n>[:connected]``, a graph6 file path, or ``-`` for graph6 lines
on stdin. Exit codes: 0 clean, 2 when a sweep found violations, 1 on
operational errors.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import TextIO

from .errors import SquareEnergyError
from .families import gq_collinearity_graph, gq_predicted_spectrum
from .graphs import enumerate_graphs, write_graph6
from .harness import (
    ALL_BOUND_NAMES,
    RecordWriter,
    RunConfig,
    RunSummary,
    filter_minimal_counterexample_candidates,
    graph6_or_none,
    resolve_source,
    run_to_path,
)
from .oracles import SEARCH_BUDGET_N, domination_number
from .partitions import (
    certify_superadditivity,
    degree_class_partition,
    domination_partition,
    star_clique_partition,
)
from .spectral import spectrum, square_energies


@contextlib.contextmanager
def _open_out(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="") as handle:
            yield handle


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="base RNG seed")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", default="-", help="output path, '-' for stdout")
    parser.add_argument(
        "--budget-n", type=int, default=SEARCH_BUDGET_N,
        help="max n for exact exponential oracles",
    )


def _print_summary(summary: RunSummary, stream: TextIO | None = None) -> None:
    stream = stream if stream is not None else sys.stderr
    print(
        f"graphs: {summary.graphs_processed}  records: {summary.records_written}  "
        f"skipped: {summary.skipped}  violations: {len(summary.violations)}  "
        f"wall: {summary.wall_time:.2f}s",
        file=stream,
    )
    for name in sorted(summary.minima):
        entry = summary.minima[name]
        print(
            f"  min slack {name}: {entry['slack']:.6g} at {entry['graph6'] or entry['graph_index']}",
            file=stream,
        )


def cmd_spectrum(args: argparse.Namespace) -> int:
    with _open_out(args.out) as out:
        writer = RecordWriter(out, args.format)
        for index, g in enumerate(resolve_source(args.source)):
            spec = spectrum(g)
            writer.write(
                {
                    "graph_index": index,
                    "graph6": graph6_or_none(g),
                    "n": g.n,
                    "m": g.m,
                    "eigenvalues": list(spec.values),
                    "residual_bound": spec.residual_bound,
                }
            )
    return 0


def cmd_energy(args: argparse.Namespace) -> int:
    with _open_out(args.out) as out:
        writer = RecordWriter(out, args.format)
        for index, g in enumerate(resolve_source(args.source)):
            report = square_energies(g)
            writer.write(
                {
                    "graph_index": index,
                    "graph6": graph6_or_none(g),
                    "n": g.n,
                    "m": report.m,
                    "s_plus": report.s_plus,
                    "s_minus": report.s_minus,
                    "energy": report.energy,
                }
            )
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    config = RunConfig(
        source=args.source,
        bounds=tuple(args.set.split(",")),
        out=args.out,
        fmt=args.format,
        seed=args.seed,
        jobs=args.jobs,
        budget_n=args.budget_n,
    )
    summary = run_to_path(config)
    _print_summary(summary)
    return 2 if summary.violations else 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    with _open_out(args.out) as out:
        for g in enumerate_graphs(args.n, connected_only=args.connected):
            out.write(write_graph6(g) + "\n")
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    with _open_out(args.out) as out:
        writer = RecordWriter(out, args.format)
        for index, g in enumerate(resolve_source(args.source)):
            if args.method == "star-clique":
                partition = star_clique_partition(g)
            elif args.method == "domination":
                partition = domination_partition(g, domination_number(g, args.budget_n))
            else:
                partition = degree_class_partition(g)
            certificate = certify_superadditivity(g, partition)
            writer.write(
                {
                    "graph_index": index,
                    "graph6": graph6_or_none(g),
                    "n": g.n,
                    "m": g.m,
                    "method": args.method,
                    "parts": partition.as_lists(),
                    "labels": list(partition.labels),
                    "s_plus": certificate.s_plus_total,
                    "s_minus": certificate.s_minus_total,
                    "slack_plus": certificate.slack_plus,
                    "slack_minus": certificate.slack_minus,
                    "holds": certificate.holds,
                }
            )
    return 0


def cmd_gq(args: argparse.Namespace) -> int:
    params = gq_predicted_spectrum(args.q)
    g = gq_collinearity_graph(args.q)
    spec = spectrum(g)
    energies = square_energies(g)
    predicted = sorted(params.spectrum_multiset(), reverse=True)
    deviation = max(abs(a - b) for a, b in zip(spec.values, predicted))
    with _open_out(args.out) as out:
        RecordWriter(out, args.format).write(
            {
                "q": args.q,
                "n": g.n,
                "m": g.m,
                "k": params.k,
                "predicted": {
                    "k": params.k, "r": params.r, "a": params.a,
                    "f": params.f, "g": params.g,
                    "n": params.n_pred, "m": params.m_pred,
                },
                "spectrum_deviation": deviation,
                "s_plus": energies.s_plus,
                "s_minus": energies.s_minus,
                "graph6": graph6_or_none(g),
            }
        )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    config = RunConfig(
        source=f"enumerate:{args.n}:connected",
        bounds=(args.conjecture,),
        out=args.out,
        fmt=args.format,
        seed=args.seed,
        jobs=args.jobs,
        budget_n=args.budget_n,
    )
    summary = run_to_path(config)
    _print_summary(summary)
    return 2 if summary.violations else 0


def cmd_hunt(args: argparse.Namespace) -> int:
    if args.filter != "minimal-candidates":
        raise SquareEnergyError(f"unknown filter {args.filter!r}")
    graphs = enumerate_graphs(args.n, connected_only=True)
    outcome = filter_minimal_counterexample_candidates(
        graphs, max_subset_size=args.max_subset_size, budget_n=args.budget_n
    )
    violations = 0
    with _open_out(args.out) as out:
        writer = RecordWriter(out, args.format)
        for index, g in enumerate(outcome.survivors):
            report = square_energies(g)
            low = min(report.s_plus, report.s_minus)
            slack = low - (g.n - 1)
            if slack < -1e-6:
                violations += 1
            writer.write(
                {
                    "graph_index": index,
                    "graph6": graph6_or_none(g),
                    "n": g.n,
                    "m": g.m,
                    "min_square_energy": low,
                    "efgw_slack": slack,
                }
            )
    print(
        f"survivors: {len(outcome.survivors)}  rejected: {outcome.rejection_counts}",
        file=sys.stderr,
    )
    return 2 if violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqenergy",
        description="Square-energy toolkit: spectra, bounds, partitions, sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="adjacency spectra of the source graphs")
    p.add_argument("source")
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("energy", help="square energies of the source graphs")
    p.add_argument("source")
    _add_common(p)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("bounds", help="evaluate bound certificates over a source")
    p.add_argument("source")
    p.add_argument(
        "--set", default="all",
        help=f"comma-separated bound names or 'all' ({', '.join(ALL_BOUND_NAMES)})",
    )
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("enumerate", help="stream graph6 lines, one per class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decompose", help="vertex partitions plus their certificates")
    p.add_argument("source")
    p.add_argument(
        "--method", choices=("star-clique", "domination", "degree-class"), required=True
    )
    _add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gq", help="generalized-quadrangle graph summary")
    p.add_argument("--q", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_gq)

    p = sub.add_parser("verify", help="sweep one bound over all connected graphs on n vertices")
    p.add_argument("--conjecture", default="efgw")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", help="filter minimal-counterexample candidates")
    p.add_argument("--filter", default="minimal-candidates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-subset-size", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_hunt)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SquareEnergyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
