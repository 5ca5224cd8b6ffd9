"""Command-line interface.

Every subcommand prints its primary numeric result (a chain count or subset
size) as the last line of standard output, so scripts can consume results
without JSON parsing.  Witness forests and simulation CSVs are written only
when the corresponding flags ask for them.

Exit codes: 0 success, 1 usage error, 2 input error.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import formats
from .flow import k_width
from .greedy import (
    ATTACHED,
    NEW_CHAIN,
    TraceStep,
    greedy_max_heapable_subset,
    greedy_partition_permutation,
    greedy_partition_sequence,
    greedy_partition_set,
)
from .oracle import (
    TooLarge,
    max_clique_intervals,
    oracle_k_width,
    oracle_max_heapable,
    oracle_width_antichain,
)
from .poset import (
    CycleError,
    IdOutOfRange,
    Interval,
    NotAPermutation,
    poset_from_box_set,
    poset_from_interval_sequence,
    poset_from_interval_set,
    poset_from_permutation,
)
from .simulate import (
    MODE_SEQUENCE,
    MODE_SORTED_SET,
    SimConfig,
    estimate_scaling,
    sample_intervals,
    trial_rng,
    write_trials_csv,
    _chain_count,
    _sample_pairs,
)
from .sweep import sweep_partition

_INPUT_ERRORS = (
    formats.InputFormatError,
    OSError,
    CycleError,
    IdOutOfRange,
    NotAPermutation,
    TooLarge,
    ValueError,
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _print_trace(trace) -> None:
    for step in trace:
        if step.kind == ATTACHED:
            print(f"item {step.item}: attached to {step.parent} via slot {step.slot}")
        elif step.kind == NEW_CHAIN:
            print(f"item {step.item}: new chain")
        else:
            print(f"item {step.item}: rejected")


def _emit(count, forest, trace, args) -> int:
    if getattr(args, "trace", False) and trace is not None:
        _print_trace(trace)
    if getattr(args, "witness", None):
        formats.save_forest_json(args.witness, forest)
    print(count)
    return 0


def _cmd_kwidth(args) -> int:
    poset = formats.load_poset_json(args.poset)
    count, forest = k_width(poset, args.k)
    return _emit(count, forest, None, args)


def _cmd_intervals_seq(args) -> int:
    items = formats.load_intervals_csv(args.input)
    count, forest, trace = greedy_partition_sequence(items, args.k)
    return _emit(count, forest, trace, args)


def _cmd_intervals_set(args) -> int:
    items = formats.load_intervals_csv(args.input)
    count, forest, trace = greedy_partition_set(items, args.k)
    return _emit(count, forest, trace, args)


def _cmd_max_heapable(args) -> int:
    items = formats.load_intervals_csv(args.input)
    subset, forest, trace = greedy_max_heapable_subset(items, args.k)
    if subset:
        print("subset:", " ".join(str(i) for i in subset))
    return _emit(len(subset), forest, trace, args)


def _cmd_permutation(args) -> int:
    perm = formats.load_permutation(args.input)
    count, forest = greedy_partition_permutation(perm, args.k)
    trace = tuple(
        TraceStep(value, NEW_CHAIN)
        if forest.parent[value] is None
        else TraceStep(value, ATTACHED, parent=forest.parent[value], slot=forest.parent[value])
        for value in perm
    )
    return _emit(count, forest, trace, args)


def _cmd_trapezoid(args) -> int:
    boxes = formats.load_boxes_csv(args.input)
    count, forest = sweep_partition(boxes, args.k)
    return _emit(count, forest, None, args)


def _cmd_simulate(args) -> int:
    config = SimConfig(n=args.n, k=args.k, trials=args.trials, seed=args.seed, mode=args.mode)
    stats = estimate_scaling(config)
    if args.csv:
        write_trials_csv(args.csv, config, stats)
    print(f"mean count {stats.mean:.6g} over {config.trials} trials (stderr {stats.stderr:.3g})")
    print(f"{stats.normalized:.6g}")
    return 0


def _cmd_oracle(args) -> int:
    if args.what == "kwidth":
        if not args.poset:
            raise formats.InputFormatError("oracle kwidth needs --poset")
        print(oracle_k_width(formats.load_poset_json(args.poset), args.k))
    elif args.what == "antichain":
        if not args.poset:
            raise formats.InputFormatError("oracle antichain needs --poset")
        print(oracle_width_antichain(formats.load_poset_json(args.poset)))
    elif args.what == "maxheap":
        if not args.input:
            raise formats.InputFormatError("oracle maxheap needs --input")
        print(oracle_max_heapable(formats.load_intervals_csv(args.input), args.k))
    else:
        if not args.input:
            raise formats.InputFormatError("oracle clique needs --input")
        print(max_clique_intervals(formats.load_intervals_csv(args.input)))
    return 0


def _random_intervals(rng: random.Random, n: int) -> list[Interval]:
    items = []
    for _ in range(n):
        a, b = rng.randint(0, 3 * n + 2), rng.randint(0, 3 * n + 2)
        items.append(Interval(min(a, b), max(a, b)))
    return items


def _cmd_crosscheck(args) -> int:
    rng = random.Random(args.seed)
    failures = []

    for trial in range(args.trials):
        k = trial % 3 + 1
        items = _random_intervals(rng, rng.randint(1, 24))
        got = greedy_partition_sequence(items, k)[0]
        want = k_width(poset_from_interval_sequence(items), k)[0]
        if got != want:
            failures.append(f"sequence greedy {got} != flow {want} (trial {trial}, k={k})")
        try:
            poset = poset_from_interval_set(items)
        except CycleError:
            continue
        got = greedy_partition_set(items, k)[0]
        want = k_width(poset, k)[0]
        if got != want:
            failures.append(f"set greedy {got} != flow {want} (trial {trial}, k={k})")
    print(f"greedy vs flow: {args.trials} trials")

    for trial in range(args.trials):
        k = trial % 3 + 1
        n = rng.randint(1, 200)
        count = _chain_count(_sample_pairs(trial_rng(args.seed + trial, 0), n), k)
        items = sample_intervals(trial_rng(args.seed + trial, 0), n)
        got = greedy_partition_sequence(items, k)[0]
        if count != got:
            failures.append(f"process {count} != greedy {got} (trial {trial}, k={k})")
    print(f"process vs greedy: {args.trials} trials")

    if failures:
        for line in failures:
            print(f"MISMATCH: {line}", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heapchains",
        description="Minimum partitions of posets, intervals and boxes into k-ary chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("kwidth", _cmd_kwidth, "exact k-width of a poset via max flow")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--poset", required=True, help="poset JSON file")
    p.add_argument("--witness", help="write the chain forest as JSON")

    for name, handler, help_text in [
        ("intervals-seq", _cmd_intervals_seq, "greedy partition of an interval sequence"),
        ("intervals-set", _cmd_intervals_set, "greedy partition of an interval set"),
        ("max-heapable", _cmd_max_heapable, "largest single-chain subset of an interval set"),
    ]:
        p = add(name, handler, help_text)
        p.add_argument("--k", type=_positive_int, required=True)
        p.add_argument("--input", required=True, help="interval CSV file")
        p.add_argument("--witness", help="write the forest as JSON")
        p.add_argument("--trace", action="store_true", help="print one greedy event per line")

    p = add("permutation", _cmd_permutation, "greedy partition of a permutation")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--input", required=True, help="one integer per line")
    p.add_argument("--witness", help="write the forest as JSON")
    p.add_argument("--trace", action="store_true")

    p = add("trapezoid", _cmd_trapezoid, "sweep-line partition of boxes")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--input", required=True, help="box CSV file (lx,ly,ux,uy)")
    p.add_argument("--witness", help="write the forest as JSON")

    p = add("simulate", _cmd_simulate, "Monte-Carlo scaling estimate on random intervals")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=[MODE_SEQUENCE, MODE_SORTED_SET], default=MODE_SEQUENCE)
    p.add_argument("--csv", help="write per-trial rows to this CSV file")

    p = add("oracle", _cmd_oracle, "brute-force reference answers (small inputs)")
    p.add_argument("--what", choices=["kwidth", "maxheap", "antichain", "clique"], required=True)
    p.add_argument("--k", type=_positive_int, default=1)
    p.add_argument("--poset", help="poset JSON (kwidth, antichain)")
    p.add_argument("--input", help="interval CSV (maxheap, clique)")

    p = add("crosscheck", _cmd_crosscheck, "run the built-in solver identities")
    p.add_argument("--trials", type=_positive_int, default=50)
    p.add_argument("--seed", type=int, default=0)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.handler(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
