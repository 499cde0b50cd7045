"""Command-line interface.

Exit codes: 0 success / valid, 1 verification negative, 2 input error,
3 budget refusal, 4 engines disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

import numpy as np

from .engine import (
    AUTO_THRESHOLD,
    BorderArray,
    border_array,
    border_array_incremental,
    border_array_naive,
    border_array_packed,
)
from .enumerator import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    bell_number,
    brute_force_valid,
    count_valid,
    enumerate_valid,
    equivalence_class_count,
    general_border_array,
    ternary_upper_bound,
)
from .verifier import verify
from .words import BinaryWord, ParseError, parse_general_word, parse_word

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_DISAGREE = 4


class InputError(Exception):
    pass


class EngineDisagreement(RuntimeError):
    pass


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _items(args, positional: str | None) -> list[str]:
    if args.input is not None:
        try:
            with open(args.input, encoding="utf-8") as fh:
                return [line.rstrip("\r\n") for line in fh if line.strip()]
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from None
    if positional is None:
        raise InputError("no input given (pass an argument or --input PATH)")
    return [positional]


def cmd_border_array(args) -> int:
    for item in _items(args, args.word):
        try:
            if args.alphabet > 2:
                w = parse_general_word(item, args.alphabet)
                ba = general_border_array(w) if len(w) else None
            else:
                w = parse_word(item.strip())
                ba = border_array(w, engine=args.engine) if len(w) else None
        except ParseError as exc:
            raise InputError(str(exc)) from None
        if ba is None:
            raise InputError("empty word has no border array")
        _emit(args, ba.to_text(), list(ba))
    return EXIT_OK


def cmd_verify(args) -> int:
    status = EXIT_OK
    for item in _items(args, args.array):
        try:
            pi = BorderArray.parse(item)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if not len(pi):
            raise InputError("empty array")
        outcome = verify(pi, engine=args.engine)
        if outcome.valid:
            _emit(args, f"yes {outcome.word}", outcome.to_dict())
        else:
            status = EXIT_INVALID
            _emit(args, f"no {outcome.mismatch_index}", outcome.to_dict())
    return status


def cmd_enumerate(args) -> int:
    if args.n < 1:
        raise InputError("n must be at least 1")
    count = 0
    for node in enumerate_valid(args.n):
        if args.limit is not None and count >= args.limit:
            break
        _emit(args, f"{node.pi.to_text()}\t{node.word}", {"array": list(node.pi), "word": str(node.word)})
        count += 1
    _emit(args, f"# count {count}", {"count": count})
    return EXIT_OK


def cmd_count(args) -> int:
    n, k = args.n, args.alphabet
    if n < 1 or k < 1:
        raise InputError("n and alphabet size must be at least 1")
    result: dict = {"n": n, "alphabet": k}
    lines = []
    exact = None
    if k == 2 and not args.brute:
        exact, how = count_valid(n), "formula 2^(n-1)"
    elif k <= 2 or args.brute:
        exact, how = len(brute_force_valid(n, k, budget=args.budget)), "brute force"
    else:
        try:
            exact, how = len(brute_force_valid(n, k, budget=args.budget)), "brute force"
        except BudgetExceeded:
            how = None
    if exact is not None:
        result.update(exact=exact, exact_method=how)
        lines.append(f"exact\t{exact}\t({how})")
    if k == 2 and args.brute:
        result["formula"] = count_valid(n)
        lines.append(f"formula\t{count_valid(n)}\t(2^(n-1))")
    if k == 3:
        result.update(bound=ternary_upper_bound(n), bound_kind="ternary (3^(n-1)+1)/2")
    elif k > 3:
        result.update(bound=bell_number(n), bound_kind="Bell number B_n")
    if "bound" in result:
        lines.append(f"bound\t{result['bound']}\t({result['bound_kind']})")
    _emit(args, "\n".join(lines), result)
    return EXIT_OK


def cmd_classes(args) -> int:
    n, k = args.n, args.alphabet
    if n < 1 or k < 1:
        raise InputError("n and alphabet size must be at least 1")
    value = equivalence_class_count(n, k, method=args.method, budget=args.budget)
    result = {"n": n, "alphabet": k, "classes": value}
    lines = [f"classes\t{value}"]
    if k == 3:
        result["ternary_bound"] = ternary_upper_bound(n)
        lines.append(f"ternary_bound\t{result['ternary_bound']}")
    if k >= n:
        result["bell"] = bell_number(n)
        lines.append(f"bell\t{result['bell']}")
    _emit(args, "\n".join(lines), result)
    return EXIT_OK


_BENCH_ENGINES = (
    ("naive", border_array_naive),
    ("incremental", border_array_incremental),
    ("packed", border_array_packed),
)


def run_bench(n: int, trials: int, seed: int) -> dict:
    """Time every engine on ``trials`` seeded random words of length ``n``.

    Raises :class:`EngineDisagreement` if the engines ever disagree.
    """
    warm = BinaryWord([0, 1, 1, 0])
    for _, fn in _BENCH_ENGINES:
        fn(warm)
    rng = np.random.default_rng(seed)
    totals = {name: 0.0 for name, _ in _BENCH_ENGINES}
    for _ in range(trials):
        w = BinaryWord(rng.integers(0, 2, n, dtype=np.uint8))
        results = []
        for name, fn in _BENCH_ENGINES:
            t0 = time.perf_counter()
            results.append(fn(w))
            totals[name] += time.perf_counter() - t0
        if any(r != results[0] for r in results[1:]):
            raise EngineDisagreement(f"engines disagree on a length-{n} word")
    mean = {name: t / trials for name, t in totals.items()}
    return {
        "n": n,
        "trials": trials,
        "seed": seed,
        "mean_seconds": mean,
        "speedup_vs_naive": {name: mean["naive"] / t if t > 0 else float("inf") for name, t in mean.items()},
        "outputs_equal": True,
    }


def cmd_bench(args) -> int:
    if args.n < 1 or args.trials < 1:
        raise InputError("n and trials must be at least 1")
    try:
        report = run_bench(args.n, args.trials, args.seed)
    except EngineDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    lines = [f"n={report['n']} trials={report['trials']} seed={report['seed']}", "engine\tmean_s\tspeedup_vs_naive"]
    for name, t in report["mean_seconds"].items():
        lines.append(f"{name}\t{t:.6f}\t{report['speedup_vs_naive'][name]:.2f}")
    lines.append("outputs: all engines equal")
    _emit(args, "\n".join(lines), report)
    return EXIT_OK


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--engine", choices=("naive", "incremental", "packed", "auto"), default="auto",
                        help=f"border-array engine; auto uses packed above length {AUTO_THRESHOLD}")
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max word positions for exhaustive operations")
    common.add_argument("--input", metavar="PATH", help="read items from PATH, one per line")

    parser = argparse.ArgumentParser(prog="abelian-border", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("border-array", parents=[common], help="abelian border array of a word")
    p.add_argument("word", nargs="?")
    p.add_argument("--alphabet", type=int, default=2,
                   help="alphabet size; above 2 the word is whitespace-separated integers")
    p.set_defaults(func=cmd_border_array)

    p = sub.add_parser("verify", parents=[common], help="decide whether an array is valid")
    p.add_argument("array", nargs="?")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list all valid arrays of length n")
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count valid arrays, with bounds")
    p.add_argument("n", type=int)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--brute", action="store_true", help="count by exhaustive enumeration")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("classes", parents=[common], help="count letter-equivalence classes")
    p.add_argument("n", type=int)
    p.add_argument("--alphabet", type=int, default=3)
    p.add_argument("--method", choices=("auto", "exhaustive", "recurrence"), default="auto")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("bench", parents=[common], help="time the three engines")
    p.add_argument("n", type=int)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
