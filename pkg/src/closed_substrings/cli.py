"""Command-line interface: ``closedsub {mrc,closed,mcs,fib,exhaust,bench}``.

Exit codes: 0 success, 1 I/O or usage error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bench import ENGINES, rows_to_csv, run_bench
from .closed import compact_representation, enumerate_closed
from .core import MrcArray
from .mcs import census, compute_mcs
from .mrc_partition import compute_mrc_partition
from .mrc_salcp import compute_mrc_salcp
from .search import BudgetExceeded, csv_row, max_mcs
from .words import WordTooLong, fib_census_formula, fibonacci_word

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("path", nargs="?", help="input file (default: stdin)")
    p.add_argument("-s", "--string", help="use this literal text instead of a file")
    chomp = p.add_mutually_exclusive_group()
    chomp.add_argument("--chomp", dest="chomp", action="store_true", default=True,
                       help="drop one trailing newline (default)")
    chomp.add_argument("--no-chomp", dest="chomp", action="store_false",
                       help="keep a trailing newline as a symbol")


def _read_input(args) -> bytes:
    if args.string is not None:
        if args.path is not None:
            raise CliError("give either a path or --string, not both")
        return args.string.encode("utf-8")
    try:
        if args.path is None or args.path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(args.path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {args.path or 'stdin'}: {exc.strerror or exc}") from exc
    if args.chomp:
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    return data


def _mrc(text: bytes, algo: str):
    return compute_mrc_partition(text) if algo == "partition" else compute_mrc_salcp(text)


def _write(out, lines) -> None:
    for line in lines:
        out.write(line)
        out.write("\n")


def format_mrc_tsv(mrc: MrcArray) -> str:
    return "".join(f"{i}\t{r}\t{b}\n" for i, r, b in mrc.entries())


def parse_mrc_tsv(data: str, n: int) -> MrcArray:
    """Inverse of :func:`format_mrc_tsv` for a text of length ``n``."""
    starts, rs, bs = [], [], []
    for line in data.splitlines():
        if line:
            i, r, b = (int(x) for x in line.split("\t"))
            starts.append(i)
            rs.append(r)
            bs.append(b)
    return MrcArray.from_flat(n, starts, rs, bs)


def cmd_mrc(args, out) -> int:
    mrc = _mrc(_read_input(args), args.algo)
    if args.format == "json":
        out.write(json.dumps([{"i": i, "r": r, "b": b} for i, r, b in mrc.entries()]) + "\n")
    else:
        out.write(format_mrc_tsv(mrc))
    return EXIT_OK


def cmd_closed(args, out) -> int:
    text = _read_input(args)
    triples = compact_representation(_mrc(text, args.algo))
    if args.format == "triples":
        _write(out, (f"{i}\t{p}\t{r}" for i, p, r in triples))
        return EXIT_OK
    emitted = 0
    for i, length in enumerate_closed(text, triples):
        if args.limit is not None and emitted >= args.limit:
            out.write(f"# truncated after {args.limit} occurrences\n")
            break
        out.write(f"{i}\t{length}\n")
        emitted += 1
    return EXIT_OK


def cmd_mcs(args, out) -> int:
    text = _read_input(args)
    found = compute_mcs(text, _mrc(text, args.algo))
    if args.format == "json":
        out.write(json.dumps([
            {"start": m.start, "len": m.length, "border": m.border_len, "kind": str(m.kind)}
            for m in found
        ]) + "\n")
    else:
        _write(out, (f"{m.start}\t{m.length}\t{m.border_len}\t{m.kind}" for m in found))
    c = census(found)
    sys.stderr.write(f"census sm={c.sm} runs={c.runs} gm={c.gm} total={c.total}\n")
    return EXIT_OK


def cmd_fib(args, out) -> int:
    try:
        formula = fib_census_formula(args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    names = ("sm", "runs", "gm", "m")
    out.write(f"n={formula.n} F_n={formula.F_n}\n")
    out.write("formula   " + " ".join(f"{k}={v}" for k, v in zip(names, formula.counts())) + "\n")
    if not args.check:
        return EXIT_OK
    try:
        word = fibonacci_word(args.n)
    except WordTooLong as exc:
        raise CliError(str(exc)) from exc
    algo = tuple(census(compute_mcs(word, _mrc(word, args.algo))))
    out.write("algorithm " + " ".join(f"{k}={v}" for k, v in zip(names, algo)) + "\n")
    ok = True
    for k, f, a in zip(names, formula.counts(), algo):
        verdict = "MATCH" if f == a else "MISMATCH"
        ok &= f == a
        out.write(f"{k}\t{f}\t{a}\t{verdict}\n")
    out.write("MATCH\n" if ok else "MISMATCH\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_exhaust(args, out) -> int:
    if args.header:
        out.write("n,sigma,max_mcs,witness\n")
    for n in args.n:
        for sigma in args.sigma:
            try:
                count, witness = max_mcs(n, sigma, workers=args.workers)
            except (BudgetExceeded, ValueError) as exc:
                raise CliError(str(exc)) from exc
            out.write(csv_row(n, sigma, count, witness) + "\n")
            out.flush()
    return EXIT_OK


def cmd_bench(args, out) -> int:
    try:
        rows = run_bench(args.spec, engines=args.engines, repeats=args.repeats)
    except OSError as exc:
        raise CliError(f"cannot read bench input: {exc}") from exc
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    out.write(rows_to_csv(rows))
    return EXIT_OK if all(r.outputs_equal for r in rows) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="closedsub", description="Closed substrings, MRC arrays and maximal closed substrings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def algo(p):
        p.add_argument("--algo", choices=sorted(ENGINES), default="salcp", help="MRC engine (default: salcp)")

    p = sub.add_parser("mrc", help="print the MRC array")
    _add_input(p)
    algo(p)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_mrc)

    p = sub.add_parser("closed", help="print the compact representation or every closed occurrence")
    _add_input(p)
    algo(p)
    p.add_argument("--format", choices=["triples", "expand"], default="triples")
    p.add_argument("--limit", type=int, help="with --format expand, stop after this many occurrences")
    p.set_defaults(func=cmd_closed)

    p = sub.add_parser("mcs", help="print maximal closed substrings; census goes to stderr")
    _add_input(p)
    algo(p)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_mcs)

    p = sub.add_parser("fib", help="MCS census of a Fibonacci word by formula, optionally checked")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="also compute the census and compare")
    algo(p)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("exhaust", help="largest MCS count over all strings of a length and alphabet size")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--sigma", type=int, nargs="+", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--header", action="store_true", help="print a CSV header first")
    p.set_defaults(func=cmd_exhaust)

    p = sub.add_parser("bench", help="time both engines; CSV on stdout")
    p.add_argument("--spec", action="append", required=True,
                   help="fibonacci:N, tribonacci:N, thue_morse:N, random:SIGMA:N[:SEED] or file:PATH[:N]")
    p.add_argument("--engines", nargs="+", choices=sorted(ENGINES), default=["salcp", "partition"])
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "limit", None) is not None and args.limit < 0:
        sys.stderr.write("closedsub: error: --limit must be non-negative\n")
        return EXIT_ERROR
    try:
        return args.func(args, out)
    except CliError as exc:
        sys.stderr.write(f"closedsub: error: {exc}\n")
        return EXIT_ERROR
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
