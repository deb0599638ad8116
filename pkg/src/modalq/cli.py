"""Command-line front end.

Subcommands: solve, trace, verify, gates, bench.  Exit codes: 0 on success
(either verdict counts as success), 1 on usage, parse, or internal errors,
2 when the input violates the at-most-one-satisfying-assignment promise.
The MODALQ_BACKEND environment variable sets the default backend where a
--backend flag is accepted.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from .algorithm import run_unique_sat, run_unique_sat_sampled
from .dimacs import DimacsError, parse_dimacs
from .errors import ModalQError, PromiseViolatedError
from .oracle import (
    BoolFn,
    boolfn_from_cnf,
    boolfn_from_table,
    constant_false,
    count_sat,
    point_function,
    random_point_function,
)
from .ops import enumerate_1q_maps, one_qubit_action

MAX_N = 25  # the register adds an answer wire, so n + 1 <= 26


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # report usage problems through exit code 1, not argparse's default 2
    def error(self, message):
        raise _UsageError(message)


def _backend_of(args) -> str:
    name = args.backend or os.environ.get("MODALQ_BACKEND") or "dense"
    if name not in ("dense", "sparse"):
        raise _UsageError(
            f"unknown backend {name!r} (from --backend or MODALQ_BACKEND); "
            "expected 'dense' or 'sparse'"
        )
    return name


def _load_function(args) -> BoolFn:
    if args.table is not None and args.file is not None:
        raise _UsageError("give either FILE or --table, not both")
    if args.table is not None:
        return _parse_table_arg(args.table)
    if args.file is not None:
        with open(args.file, "rb") as fh:
            data = fh.read()
        return boolfn_from_cnf(parse_dimacs(data, lenient=args.lenient))
    raise _UsageError("no input: give a DIMACS FILE or --table N:BITS")


def _parse_table_arg(arg: str) -> BoolFn:
    head, sep, bits = arg.partition(":")
    if not sep:
        raise _UsageError(f"--table expects N:BITS, got {arg!r}")
    try:
        n = int(head)
    except ValueError:
        raise _UsageError(f"--table arity {head!r} is not an integer") from None
    if n < 1:
        raise _UsageError(f"--table arity must be at least 1, got {n}")
    if bits.strip("01") or len(bits) != (1 << n):
        raise _UsageError(
            f"--table bits must be {1 << n} characters of 0/1 for n={n}"
        )
    return boolfn_from_table(n, [int(b) for b in bits])


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _result_text(result) -> str:
    lines = [
        f"n: {result.n}",
        f"verdict: {result.verdict.value}",
        f"sat_count: {'null' if result.sat_count is None else result.sat_count}",
        f"support: {result.final_support}",
    ]
    if result.outcome is not None:
        lines.append(f"outcome: {result.outcome}")
    return "\n".join(lines)


def cmd_solve(args) -> int:
    fn = _load_function(args)
    backend = _backend_of(args)
    if args.mode == "sample":
        if args.seed is None:
            raise _UsageError("--mode sample requires --seed for reproducibility")
        result = run_unique_sat_sampled(
            fn, args.seed, backend=backend, skip_promise_check=args.skip_promise_check
        )
    else:
        if args.seed is not None:
            raise _UsageError("--seed only applies to --mode sample")
        result = run_unique_sat(
            fn, backend=backend, skip_promise_check=args.skip_promise_check
        )
    _emit(args, result.to_json_dict(), _result_text(result))
    return 0


def cmd_trace(args) -> int:
    fn = _load_function(args)
    backend = _backend_of(args)
    result = run_unique_sat(fn, backend=backend, capture_trace=True)
    assert result.trace is not None
    lines = [f"n: {result.n}"]
    for label, st in result.trace.steps:
        lines.append(f"{label:<8}  {st}")
    lines.append(f"verdict: {result.verdict.value}")
    _emit(args, result.to_json_dict(), "\n".join(lines))
    return 0


def _verify_instances(n: int, random_per_n: int, rng: np.random.Generator):
    if n <= 4:
        yield "exhaustive", [constant_false(n), *(point_function(n, a) for a in range(1 << n))]
    else:
        fns = [constant_false(n)]
        fns += [random_point_function(n, rng) for _ in range(random_per_n)]
        yield "random", fns


def cmd_verify(args) -> int:
    if args.n_max < 1 or args.n_max > MAX_N:
        raise _UsageError(
            f"--n-max must be between 1 and {MAX_N} (the register adds an answer wire)"
        )
    if args.random < 1:
        raise _UsageError("--random must be at least 1")
    backend = _backend_of(args)
    rng = np.random.default_rng(args.seed)
    rows = []
    total = failed_total = 0
    for n in range(1, args.n_max + 1):
        for mode, fns in _verify_instances(n, args.random, rng):
            failed = 0
            for fn in fns:
                truth = count_sat(fn)
                try:
                    result = run_unique_sat(fn, backend=backend)
                except ModalQError:
                    failed += 1
                    continue
                expected = "sat" if truth == 1 else "unsat"
                if result.verdict.value != expected or result.sat_count != truth:
                    failed += 1
            rows.append({"n": n, "mode": mode, "checked": len(fns), "failed": failed})
            total += len(fns)
            failed_total += failed
    payload = {
        "backend": backend,
        "n_max": args.n_max,
        "random_per_n": args.random,
        "seed": args.seed,
        "rows": rows,
        "checked": total,
        "failed": failed_total,
        "ok": failed_total == 0,
    }
    text_lines = [f"backend: {backend}"]
    for row in rows:
        text_lines.append(
            f"n={row['n']} {row['mode']}: {row['checked']} checked, {row['failed']} failed"
        )
    text_lines.append(f"total: {total} checked, {failed_total} failed")
    _emit(args, payload, "\n".join(text_lines))
    return 0 if failed_total == 0 else 1


def cmd_gates(args) -> int:
    invertible, singular = enumerate_1q_maps()
    entries = []
    for g in (*invertible, *singular):
        entries.append(
            {"matrix": g.rows(), "invertible": g.is_invertible, "action": one_qubit_action(g)}
        )
    payload = {
        "total": len(entries),
        "invertible_count": len(invertible),
        "non_invertible_count": len(singular),
        "gates": entries,
    }

    def row(g) -> str:
        action = one_qubit_action(g)
        cells = "   ".join(
            f"|{k}⟩ -> {('|' + v + '⟩') if v else '0'}" for k, v in action.items()
        )
        return f"  {g}  {cells}"

    text_lines = [
        f"one-qubit maps over GF(2): {len(entries)} total, "
        f"{len(invertible)} invertible, {len(singular)} non-invertible",
        "invertible (each permutes the three states):",
        *(row(g) for g in invertible),
        "non-invertible (each kills some state):",
        *(row(g) for g in singular),
    ]
    _emit(args, payload, "\n".join(text_lines))
    return 0


def cmd_bench(args) -> int:
    try:
        n_list = [int(part) for part in args.n.split(",") if part]
    except ValueError:
        raise _UsageError(f"--n expects a comma-separated integer list, got {args.n!r}") from None
    if not n_list or any(not 1 <= n <= MAX_N for n in n_list):
        raise _UsageError(f"--n values must be between 1 and {MAX_N}")
    if args.backend not in (None, "dense", "sparse", "both"):
        raise _UsageError("--backend must be dense, sparse, or both")
    timed = ("dense", "sparse") if args.backend in (None, "both") else (args.backend,)

    rows = []
    agree = True
    for n in n_list:
        rng = np.random.default_rng(1000 + n)
        fn = random_point_function(n, rng)
        verdicts = {}
        for backend in ("dense", "sparse"):
            if backend in timed:
                best = min(
                    _timed_run(fn, backend) for _ in range(3)
                )
                seconds, verdict = best
                rows.append(
                    {"n": n, "backend": backend, "seconds": seconds, "verdict": verdict}
                )
            else:
                verdict = run_unique_sat(fn, backend=backend).verdict.value
            verdicts[backend] = verdict
        agree &= verdicts["dense"] == verdicts["sparse"]
    payload = {"rows": rows, "agree": agree}
    text_lines = [
        f"n={row['n']:<3} {row['backend']:<7} {row['seconds']:.6f} s   {row['verdict']}"
        for row in rows
    ]
    text_lines.append(
        "dense/sparse verdicts agree on every instance"
        if agree
        else "dense/sparse verdict MISMATCH"
    )
    _emit(args, payload, "\n".join(text_lines))
    return 0 if agree else 1


def _timed_run(fn: BoolFn, backend: str) -> tuple[float, str]:
    start = time.perf_counter()
    result = run_unique_sat(fn, backend=backend)
    return time.perf_counter() - start, result.verdict.value


def _build_parser() -> _Parser:
    parser = _Parser(prog="modalq", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    src = _Parser(add_help=False)
    src.add_argument("file", nargs="?", help="DIMACS CNF file")
    src.add_argument("--table", help="inline truth table as N:BITS, e.g. 2:0010")
    src.add_argument("--lenient", action="store_true", help="relaxed DIMACS parsing")
    src.add_argument("--backend", choices=("dense", "sparse"), default=None)

    p = sub.add_parser("solve", parents=[src, fmt], help="decide a promise instance")
    p.add_argument("--mode", choices=("support", "sample"), default="support")
    p.add_argument("--seed", type=int, default=None, help="measurement seed (sample mode)")
    p.add_argument("--skip-promise-check", action="store_true")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("trace", parents=[src, fmt], help="print all eight circuit steps")
    p.set_defaults(handler=cmd_trace)

    p = sub.add_parser("verify", parents=[fmt], help="sweep instances against ground truth")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--random", type=int, default=100, help="random instances per n above 4")
    p.add_argument("--seed", type=int, default=0, help="instance generation seed")
    p.add_argument("--backend", choices=("dense", "sparse"), default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("gates", parents=[fmt], help="census of the 16 one-qubit maps")
    p.set_defaults(handler=cmd_gates)

    p = sub.add_parser("bench", parents=[fmt], help="time dense vs sparse runs")
    p.add_argument("--n", default="8,12,16", help="comma-separated register sizes")
    p.add_argument("--backend", default=None, help="dense, sparse, or both (default both)")
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except PromiseViolatedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DimacsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ModalQError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
