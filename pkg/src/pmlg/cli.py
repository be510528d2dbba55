"""Command-line interface.

Exit codes: 0 success (or: match found, all verifications agree),
1 no match (match subcommand), 2 usage or data error, 3 verification
disagreement.
"""

from __future__ import annotations

import argparse
import sys

from .errors import PmlgError
from .graph import degree_stats, is_acyclic, is_deterministic
from .graph_io import read_graph, read_pattern
from .harness import bench_scaling, build_artifact, save_artifact, verify_reduction
from .matching import find_matches, match_exists
from .ov import GENERATOR_MODES, gen_ov_instance, read_ov, write_ov
from .reductions import VARIANTS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmlg",
        description="Pattern matching in labeled graphs and orthogonal-vectors benchmark gadgets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded orthogonal-vectors instance")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("seed", type=int)
    p.add_argument("mode", choices=GENERATOR_MODES)
    p.add_argument("-o", "--out", help="output file (default: stdout)")

    p = sub.add_parser("reduce", help="compile an instance file into artifact files")
    p.add_argument("instance", help="orthogonal-vectors instance file")
    p.add_argument("--variant", choices=VARIANTS, default="undirected")
    p.add_argument("--binary", action="store_true", help="apply the binary-alphabet encoding")
    p.add_argument("--out", required=True, help="output path prefix")
    p.add_argument("--seed", type=int, default=None, help="seed recorded in the metadata line")

    p = sub.add_parser("match", help="match a pattern file against a graph file")
    p.add_argument("graph")
    p.add_argument("pattern")
    p.add_argument("--report-occurrences", action="store_true")
    p.add_argument("--limit", type=int, default=10, help="max occurrences to report")

    p = sub.add_parser("verify", help="check artifact answers against the brute-force solver")
    p.add_argument("instance", nargs="?", help="instance file (or use --random)")
    p.add_argument(
        "--random",
        nargs=4,
        metavar=("N", "D", "SEED", "MODE"),
        help="generate instances instead of reading a file",
    )
    p.add_argument("--variant", choices=VARIANTS, default="undirected")
    p.add_argument("--binary", action="store_true")
    p.add_argument("--count", type=int, default=1, help="batch size (with --random; seeds SEED..SEED+count-1)")

    p = sub.add_parser("bench", help="scaling benchmark on pair-free instances")
    p.add_argument("--variant", choices=VARIANTS, default="undirected")
    p.add_argument("--n-series", default="64,128,256,512", help="comma-separated sizes")
    p.add_argument("--d", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("stats", help="structural statistics of a graph file")
    p.add_argument("graph")

    return parser


def _cmd_gen(args) -> int:
    inst = gen_ov_instance(args.n, args.d, args.seed, args.mode)
    data = write_ov(inst)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def _cmd_reduce(args) -> int:
    with open(args.instance, "rb") as fh:
        inst = read_ov(fh.read())
    art = build_artifact(inst, args.variant, args.binary)
    for path in save_artifact(art, args.out, seed=args.seed):
        print(path)
    return 0


def _cmd_match(args) -> int:
    with open(args.graph, "rb") as fh:
        g = read_graph(fh.read())
    with open(args.pattern, "rb") as fh:
        p = read_pattern(fh.read())
    if args.report_occurrences:
        occurrences = find_matches(g, p, limit=args.limit)
        for occ in occurrences:
            witness = ",".join(str(u) for u in occ.witness)
            print(
                f"start={occ.start}:{occ.start_offset} "
                f"end={occ.end}:{occ.end_offset} witness={witness}"
            )
        return 0 if occurrences else 1
    return 0 if match_exists(g, p) else 1


def _cmd_verify(args) -> int:
    if (args.instance is None) == (args.random is None):
        raise PmlgError("verify needs an instance file or --random, not both")
    reports = []
    if args.random is not None:
        n, d, seed = int(args.random[0]), int(args.random[1]), int(args.random[2])
        mode = args.random[3]
        if mode not in GENERATOR_MODES:
            raise PmlgError(f"unknown mode {mode!r}")
        for i in range(args.count):
            inst = gen_ov_instance(n, d, seed + i, mode)
            reports.append(
                verify_reduction(inst, args.variant, args.binary, seed=seed + i, mode=mode)
            )
    else:
        with open(args.instance, "rb") as fh:
            inst = read_ov(fh.read())
        reports.append(verify_reduction(inst, args.variant, args.binary))
    for idx, report in enumerate(reports):
        if idx:
            print()
        print(report)
    disagreements = sum(1 for r in reports if not r.agree)
    if len(reports) > 1:
        print()
        print(f"count={len(reports)}")
        print(f"disagreements={disagreements}")
    return 0 if disagreements == 0 else 3


def _cmd_bench(args) -> int:
    try:
        n_series = [int(tok) for tok in args.n_series.split(",") if tok.strip()]
    except ValueError:
        raise PmlgError(f"bad n-series {args.n_series!r}") from None
    rows, slope = bench_scaling(args.variant, n_series, args.d, args.seed)
    for row in rows:
        print(
            f"n={row.n} d={row.d} nodes={row.node_count} edges={row.edge_count} "
            f"pattern={row.pattern_length} match_ms={row.match_time_ms:.3f}"
        )
    print(f"slope={'-' if slope is None else f'{slope:.3f}'}")
    return 0


def _cmd_stats(args) -> int:
    with open(args.graph, "rb") as fh:
        g = read_graph(fh.read())
    stats = degree_stats(g)
    print(f"nodes={stats.node_count}")
    print(f"edges={stats.edge_count}")
    print(f"max_degree={stats.max_undirected_degree}")
    print(f"max_in_plus_out={stats.max_in_plus_out}")
    print(f"simple_path={'true' if stats.is_simple_path else 'false'}")
    if g.directed:
        print(f"deterministic={'true' if is_deterministic(g) else 'false'}")
        print(f"acyclic={'true' if is_acyclic(g) else 'false'}")
    else:
        print("deterministic=-")
        print("acyclic=-")
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "reduce": _cmd_reduce,
    "match": _cmd_match,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "stats": _cmd_stats,
}


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (PmlgError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
