"""Command-line surface: compute, table, verify, crosscheck, oracle.

Exit codes: 0 success, 1 verification failure, 2 usage or validation
error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .chow import BlockShape, error_term_closed, error_term_symbolic
from .checks import run_lemma_suite, run_oracle_suite, run_path_suite
from .core import IntersectionSymbol, canonicalize, symbol_to_tau, tau_to_symbol
from .recursion import (
    MemoTable,
    PREFER_DILATON,
    PREFER_STRING,
    compute,
    via_reduction,
)
from .tau_text import (
    CacheRecord,
    canonical_exponent_vectors,
    format_table,
    format_tau_word,
    load_cache,
    parse_tau_word,
    save_cache,
)

__all__ = ["main"]


def _load_memo(path: str | None) -> MemoTable:
    memo = MemoTable()
    if path and os.path.exists(path):
        for record in load_cache(path):
            memo.put(record.symbol, record.value)
    return memo


def _save_memo(path: str | None, memo: MemoTable) -> None:
    if not path:
        return
    records = sorted(
        (CacheRecord(s.m, s.exponents, v) for s, v in memo.items()),
        key=lambda r: (r.m, len(r.exponents), r.exponents),
    )
    save_cache(records, path)


def _parse_exponents(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"invalid argument: bad exponent list {text!r}") from None


def _cmd_compute(args: argparse.Namespace) -> int:
    if (args.tau is None) == (args.d is None):
        raise ValueError("invalid argument: give exactly one of --tau or --d")
    if args.tau is not None:
        symbol = tau_to_symbol(parse_tau_word(args.tau), args.m)
    else:
        symbol = canonicalize(_parse_exponents(args.d), args.m)
    memo = _load_memo(args.cache)
    value = compute(symbol, memo=memo)
    _save_memo(args.cache, memo)
    print(f"value = {value}")
    print(f"scaled24 = {value * 24}")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    memo = _load_memo(args.cache)
    text = format_table(args.max_n, scale24=args.scale24, fmt=args.format, memo=memo)
    _save_memo(args.cache, memo)
    sys.stdout.write(text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    suites = []
    if args.lemmas:
        suites.append(("lemmas", lambda: run_lemma_suite()))
    if args.oracle:
        suites.append(("oracle", lambda: run_oracle_suite()))
    if args.paths:
        suites.append(("paths", lambda: run_path_suite(args.max_n)))
    if not suites:
        suites = [
            ("lemmas", lambda: run_lemma_suite()),
            ("oracle", lambda: run_oracle_suite()),
            ("paths", lambda: run_path_suite(args.max_n)),
        ]
    failed = False
    for name, runner in suites:
        ok, detail = runner()
        print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
        failed = failed or not ok
    return 1 if failed else 0


def _cmd_crosscheck(args: argparse.Namespace) -> int:
    if args.m < 0 or args.n <= args.m:
        raise ValueError("invalid argument: need n > m >= 0")
    failures = 0
    for vector in canonical_exponent_vectors(args.n):
        symbol = IntersectionSymbol(args.m, vector)
        routes = [
            ("string", compute(symbol, PREFER_STRING, MemoTable())),
            ("dilaton", compute(symbol, PREFER_DILATON, MemoTable())),
        ]
        routes.extend(
            (f"reduction[{f}]", compute(symbol, via_reduction(f), MemoTable()))
            for f in range(args.m)
        )
        word = format_tau_word(symbol_to_tau(symbol))
        reference = routes[0][1]
        agree = all(value == reference for _, value in routes)
        status = "ok" if agree else "MISMATCH " + ", ".join(
            f"{name}={value}" for name, value in routes
        )
        print(f"{word} = {reference}  [{len(routes)} paths {status}]")
        if not agree:
            failures += 1
    return 1 if failures else 0


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"invalid argument: bad rational {text!r}") from None


def _cmd_oracle(args: argparse.Namespace) -> int:
    sizes = _parse_exponents(args.blocks)
    exponents = tuple(
        _parse_exponents(part) for part in args.block_d.split(";")
    )
    shape = BlockShape(args.m, sizes, exponents, _parse_fraction(args.c0))
    symbolic = error_term_symbolic(args.variant, shape, args.d)
    closed = error_term_closed(args.variant, shape, args.d)
    print(f"symbolic = {symbolic}")
    print(f"closed   = {closed}")
    print(f"agree    = {'yes' if symbolic == closed else 'NO'}")
    return 0 if symbolic == closed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mstable",
        description="Exact psi intersection numbers on m-stable genus-one spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one number")
    p_compute.add_argument("--m", type=int, required=True, help="stability level")
    p_compute.add_argument("--tau", help='tau word, e.g. "t0^2 t1 t3"')
    p_compute.add_argument("--d", help="comma-separated exponents, e.g. 3,1,0,0")
    p_compute.add_argument("--cache", help="result cache file to read and update")
    p_compute.set_defaults(func=_cmd_compute)

    p_table = sub.add_parser("table", help="print all values with m < n <= N")
    p_table.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_table.add_argument("--scale24", action="store_true")
    p_table.add_argument("--format", choices=("tsv", "pretty"), default="tsv")
    p_table.add_argument("--cache", help="result cache file to read and update")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run the invariant suites")
    p_verify.add_argument("--lemmas", action="store_true")
    p_verify.add_argument("--oracle", action="store_true")
    p_verify.add_argument("--paths", action="store_true")
    p_verify.add_argument("--max-n", type=int, default=6, dest="max_n")
    p_verify.set_defaults(func=_cmd_verify)

    p_cross = sub.add_parser(
        "crosscheck", help="compute all symbols at (n, m) via every path"
    )
    p_cross.add_argument("--n", type=int, required=True)
    p_cross.add_argument("--m", type=int, required=True)
    p_cross.set_defaults(func=_cmd_crosscheck)

    p_oracle = sub.add_parser(
        "oracle", help="one error term, symbolically and in closed form"
    )
    p_oracle.add_argument("--variant", choices=("a", "b", "c"), required=True)
    p_oracle.add_argument("--blocks", required=True, help="block sizes, e.g. 3,2")
    p_oracle.add_argument(
        "--block-d", required=True, dest="block_d",
        help="per-block exponents, ';'-separated, e.g. 0,1,0;0,0",
    )
    p_oracle.add_argument("--m", type=int, required=True)
    p_oracle.add_argument("--d", type=int, required=True, help="off-block mass")
    p_oracle.add_argument("--c0", required=True, help="genus-one scalar, e.g. 1/24")
    p_oracle.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
