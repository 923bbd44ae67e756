"""Command-line interface.

Subcommands: ``detect``, ``sweep-prob``, ``sweep-topn``, ``sweep-del``,
``gen-synth``. Exit codes: 0 success, 1 usage error, 2 unreadable or
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .communities import Partition
from .io import (
    InputFormatError,
    read_citations,
    read_pairs,
    write_detection_json,
    write_pairs,
    write_partition,
)
from .metrics import partition_stats
from .pipeline import Strategy, detect, detect_from_pairs
from .sweeps import (
    ExperimentConfig,
    default_deletion_grid,
    default_probability_grid,
    run_deletion_sweep,
    run_probability_sweep,
    run_topn_sweep,
)
from .synthetic import SyntheticSpec, generate_planted_citation_matrix

USAGE_ERROR = 1
INPUT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _add_input_args(sub, required=True):
    sub.add_argument("--input", type=Path, required=required, help="input citation file")
    sub.add_argument("--format", choices=("edges", "dense"), default="edges",
                     help="input format (default: edges)")


def _add_synth_args(sub):
    sub.add_argument("--synth", action="store_true",
                     help="use a synthetic planted-partition matrix instead of --input")
    sub.add_argument("--blocks", type=int, default=4)
    sub.add_argument("--block-size", type=int, default=25)
    sub.add_argument("--block-sizes", type=_int_list, default=None,
                     help="comma list overriding --blocks/--block-size")
    sub.add_argument("--in-rate", type=float, default=10.0)
    sub.add_argument("--cross-rate", type=float, default=0.0)
    sub.add_argument("--volume", type=int, default=50_000)
    sub.add_argument("--synth-seed", type=int, default=1)


def _add_sweep_args(sub):
    _add_input_args(sub, required=False)
    _add_synth_args(sub)
    sub.add_argument("--reps", type=int, default=20, help="repetitions per grid point")
    sub.add_argument("--seed", type=int, default=0, help="base seed")
    sub.add_argument("--tide-count", choices=("events", "merges"), default="events")
    sub.add_argument("--jobs", type=int, default=1, help="worker threads for repetitions")
    sub.add_argument("--truth-reference", action="store_true",
                     help="score against the planted truth instead of the max run "
                          "(synthetic input only)")
    sub.add_argument("--out", type=Path, required=True, help="output directory")


def build_parser() -> _Parser:
    parser = _Parser(prog="simpair",
                     description="Two-level community detection by most-similar node pairs")
    subs = parser.add_subparsers(dest="command", required=True)

    p_detect = subs.add_parser("detect", help="detect communities on one input")
    _add_input_args(p_detect, required=False)
    p_detect.add_argument("--pairs", type=Path, default=None,
                          help="skip selection and build communities from this pair list")
    p_detect.add_argument("--n-nodes", type=int, default=None,
                          help="node count override when using --pairs with integer ids")
    p_detect.add_argument("--strategy", choices=("max", "psim", "p"), default="max")
    p_detect.add_argument("--topn", type=int, default=None,
                          help="restrict psim to the top-n most similar candidates")
    p_detect.add_argument("--delete", type=float, default=None,
                          help="fraction of each similarity row to hide from max")
    p_detect.add_argument("--levels", type=int, default=1,
                          help="detection passes through coarse-graining "
                               "(0 = iterate until stable)")
    p_detect.add_argument("--seed", type=int, default=0)
    p_detect.add_argument("--tide-count", choices=("events", "merges"), default="events")
    p_detect.add_argument("--out", type=Path, required=True, help="output directory")

    p_prob = subs.add_parser("sweep-prob", help="probability sweep of mixed strategies")
    _add_sweep_args(p_prob)
    p_prob.add_argument("--p-grid", type=_float_list, default=None,
                        help="comma list of probabilities (default 0,0.1,...,1)")
    p_prob.add_argument("--kinds", type=str, default="psim,p",
                        help="random kinds to sweep (comma list from: psim,p)")

    p_topn = subs.add_parser("sweep-topn", help="top-n candidate sweep of psim")
    _add_sweep_args(p_topn)
    p_topn.add_argument("--topn-grid", type=_int_list, required=True,
                        help="comma list of candidate-count cutoffs")

    p_del = subs.add_parser("sweep-del", help="similarity-deletion sweep of max")
    _add_sweep_args(p_del)
    p_del.add_argument("--del-grid", type=_float_list, default=None,
                       help="comma list of deletion fractions (default 0,0.1,...,0.9)")

    p_gen = subs.add_parser("gen-synth", help="write a synthetic planted matrix")
    _add_synth_args(p_gen)
    p_gen.add_argument("--out", type=Path, required=True, help="output directory")

    return parser


def _synthetic_spec(args) -> SyntheticSpec:
    if args.block_sizes is not None:
        sizes = tuple(args.block_sizes)
    else:
        sizes = tuple([args.block_size] * args.blocks)
    return SyntheticSpec(n_blocks=len(sizes), block_sizes=sizes,
                         in_rate=args.in_rate, cross_rate=args.cross_rate,
                         volume=args.volume, seed=args.synth_seed)


def _load_matrix(args, parser):
    """Returns (matrix, truth_partition_or_None)."""
    use_synth = getattr(args, "synth", False)
    if use_synth and args.input is not None:
        parser.error("--input and --synth are mutually exclusive")
    if use_synth:
        matrix, truth = generate_planted_citation_matrix(_synthetic_spec(args))
        return matrix, truth
    if args.input is None:
        parser.error("one of --input or --synth is required")
    try:
        return read_citations(args.input, args.format), None
    except OSError as exc:
        raise InputFormatError(f"{args.input}: {exc.strerror or exc}") from exc


def _cmd_detect(args, parser) -> int:
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)

    if args.pairs is not None:
        if args.input is not None:
            parser.error("--pairs and --input are mutually exclusive")
        try:
            pairs, labels = read_pairs(args.pairs)
        except OSError as exc:
            raise InputFormatError(f"{args.pairs}: {exc.strerror or exc}") from exc
        n_nodes = args.n_nodes
        if n_nodes is None:
            n_nodes = (len(labels) if labels is not None
                       else max(max(p.selector, p.selected) for p in pairs) + 1)
        detection = detect_from_pairs(pairs, n_nodes, args.tide_count)
        node_labels = labels
    else:
        matrix, _ = _load_matrix(args, parser)
        if args.strategy != "psim" and args.topn is not None:
            parser.error("--topn requires --strategy psim")
        if args.strategy != "max" and args.delete is not None:
            parser.error("--delete requires --strategy max")
        strategy = Strategy(args.strategy, topn=args.topn, deletion=args.delete)
        detection = detect(matrix, strategy, seed=args.seed,
                           levels=args.levels, tide_count=args.tide_count)
        node_labels = matrix.node_labels

    stats = partition_stats(detection.result, args.tide_count)
    write_detection_json(out / "result.json", detection, node_labels, stats)
    write_partition(out / "partition_core.tsv", detection.core, node_labels)
    write_partition(out / "partition_real.tsv", detection.real, node_labels)
    write_pairs(out / "pairs.tsv", detection.pairs)
    print(json.dumps(stats, sort_keys=True))
    return 0


def _sweep_config(args, truth: Partition | None, parser) -> ExperimentConfig:
    reference: str | Partition = "max"
    if args.truth_reference:
        if truth is None:
            parser.error("--truth-reference requires --synth")
        reference = truth
    return ExperimentConfig(repetitions=args.reps, base_seed=args.seed,
                            tide_count=args.tide_count, reference=reference,
                            jobs=args.jobs)


def _write_sweep(args, result) -> int:
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    (out / "sweep.csv").write_text(result.to_csv(), encoding="utf-8")
    if result.metadata:
        print(json.dumps(result.metadata, sort_keys=True))
    return 0


def _cmd_sweep_prob(args, parser) -> int:
    matrix, truth = _load_matrix(args, parser)
    kinds = tuple(k.strip() for k in args.kinds.split(",") if k.strip())
    for kind in kinds:
        if kind not in ("psim", "p"):
            parser.error(f"unknown kind {kind!r}")
    cfg = _sweep_config(args, truth, parser)
    grid = args.p_grid if args.p_grid is not None else default_probability_grid()
    return _write_sweep(args, run_probability_sweep(matrix, cfg, grid, kinds))


def _cmd_sweep_topn(args, parser) -> int:
    matrix, truth = _load_matrix(args, parser)
    cfg = _sweep_config(args, truth, parser)
    return _write_sweep(args, run_topn_sweep(matrix, cfg, args.topn_grid))


def _cmd_sweep_del(args, parser) -> int:
    matrix, truth = _load_matrix(args, parser)
    cfg = _sweep_config(args, truth, parser)
    grid = args.del_grid if args.del_grid is not None else default_deletion_grid()
    return _write_sweep(args, run_deletion_sweep(matrix, cfg, grid))


def _cmd_gen_synth(args, parser) -> int:
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    spec = _synthetic_spec(args)
    matrix, truth = generate_planted_citation_matrix(spec)
    coo = matrix.counts.tocoo()
    lines = [f"{i}\t{j}\t{v}\n" for i, j, v in zip(coo.row, coo.col, coo.data)]
    (out / "citations.tsv").write_text("".join(lines), encoding="utf-8")
    write_partition(out / "truth.tsv", truth)
    (out / "spec.json").write_text(json.dumps(spec.describe(), sort_keys=True,
                                              indent=2) + "\n", encoding="utf-8")
    print(f"wrote {matrix.n_nodes} nodes, {matrix.total_citations} citations to {out}")
    return 0


_COMMANDS = {
    "detect": _cmd_detect,
    "sweep-prob": _cmd_sweep_prob,
    "sweep-topn": _cmd_sweep_topn,
    "sweep-del": _cmd_sweep_del,
    "gen-synth": _cmd_gen_synth,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, parser)
    except InputFormatError as exc:
        print(f"simpair: input error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
