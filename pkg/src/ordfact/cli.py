"""Command-line entry point.

    ordfact eval --n 36 --function kappa0 --method conjecture
    ordfact batch --limit 1000 --function K --bfile b074206.txt
    ordfact verify --limit 100000 --methods conjecture,theorem2 --jobs 4
    ordfact records --limit 10**30 --function kappa0 --strategy signature
    ordfact tree --n 36 --svg tree36.svg --json tree36.json
    ordfact oeis --compare a.txt b.txt
    ordfact special --kappa-over-2-alpha --limit 30

Exit codes: 0 success, 1 verification/comparison mismatch, 2 usage error,
3 tree node budget exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import core, records, sieve
from .errors import BFileError, BudgetExceeded
from .factor import Signature, factorize, signature_of, smallest_prime_factor_sieve
from .oeis_io import KNOWN, Sequence, compare, parse_bfile, write_bfile
from .tree import DEFAULT_NODE_BUDGET, build_tree, export_json, generation_counts, layout, render_svg

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

EVAL_METHODS = ("recursive", "theorem1", "theorem2", "conjecture", "macmahon")
BATCH_FUNCTIONS = ("K", "kappa0", "tau2", "tau3", "tau4", "upsilon2", "upsilon3")
SIGNATURE_SEARCH_ABOVE = 10**6


class UsageError(Exception):
    pass


def _int(text):
    """Integer argument; accepts plain digits or a power like 10**30 / 10^30."""
    t = text.strip().replace("_", "")
    for op in ("**", "^"):
        if op in t:
            base, _, exp = t.partition(op)
            try:
                return int(base) ** int(exp)
            except ValueError:
                break
    try:
        return int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _positive(text):
    v = _int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _signature_arg(text):
    try:
        exps = [int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip()]
        return Signature(tuple(exps))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad signature {text!r}, want e.g. 3,2,1") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json-lines"), default="plain")
    common.add_argument("--output", metavar="PATH", help="write stdout text to PATH instead")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    p = argparse.ArgumentParser(
        prog="ordfact",
        description="Ordered factorizations K(n) and recursive divisors kappa0(n).",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    e = sub.add_parser("eval", parents=[common], help="evaluate one function at n")
    src = e.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=_positive, nargs="+")
    src.add_argument("--signature", type=_signature_arg, nargs="+",
                     help="prime signature such as 3,2,1 (for n too large to factor)")
    e.add_argument("--function", choices=("K", "kappa0", "kappa_x"), default="kappa0")
    e.add_argument("--method", choices=EVAL_METHODS)
    e.add_argument("--x", type=_int, default=0)

    b = sub.add_parser("batch", parents=[common], help="values on 1..N as a b-file")
    b.add_argument("--limit", type=_positive, required=True)
    b.add_argument("--function", default="kappa0",
                   help="one of %s or a matching A-number" % ", ".join(BATCH_FUNCTIONS))
    b.add_argument("--bfile", metavar="PATH")

    v = sub.add_parser("verify", parents=[common], help="cross-check all routes on 1..N")
    v.add_argument("--limit", type=_positive, required=True)
    v.add_argument("--methods", default=",".join(sieve.METHODS))
    v.add_argument("--no-identities", action="store_true")

    r = sub.add_parser("records", parents=[common], help="sequence records (champions)")
    r.add_argument("--limit", type=_positive, required=True)
    r.add_argument("--function", choices=records.FUNCTIONS, default="kappa0")
    r.add_argument("--strategy", choices=("auto", "sieve", "signature"), default="auto")

    t = sub.add_parser("tree", parents=[common], help="divisor tree of n")
    t.add_argument("--n", type=_positive, required=True)
    t.add_argument("--svg", metavar="PATH")
    t.add_argument("--json", metavar="PATH")
    t.add_argument("--budget", type=_positive, default=DEFAULT_NODE_BUDGET)
    t.add_argument("--generation", type=_int, default=None,
                   help="only draw generations 0..G in the SVG")

    o = sub.add_parser("oeis", parents=[common], help="compare or validate b-files")
    og = o.add_mutually_exclusive_group(required=True)
    og.add_argument("--compare", nargs=2, metavar=("FILE_A", "FILE_B"))
    og.add_argument("--validate", metavar="FILE",
                    help="compare FILE with locally computed --function values")
    o.add_argument("--function", default="kappa0")

    s = sub.add_parser("special", parents=[common], help="special-case sequences")
    sg = s.add_mutually_exclusive_group(required=True)
    sg.add_argument("--squarefree-omega", type=_int, metavar="W",
                    help="kappa0 of products of omega distinct primes, omega = 1..W")
    sg.add_argument("--kappa-over-2-alpha", action="store_true",
                    help="kappa0(n) / 2**alpha*(n) for n = 1..--limit")
    s.add_argument("--limit", type=_positive)
    return p


# -- helpers -------------------------------------------------------------------

def _signatures(args):
    if args.signature:
        return [(None, s) for s in args.signature]
    out = []
    for n in args.n:
        try:
            out.append((n, signature_of(factorize(n))))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


def _kappa0(method, sig):
    if method == "recursive":
        return core.kappa0_recursive_signature(sig)
    if method == "theorem1":
        return core.kappa0_theorem1(sig)
    if method == "theorem2":
        return core.kappa0_theorem2(sig)
    if method == "conjecture":
        return core.kappa0_conjecture(sig)
    return 2 * core.k_macmahon(sig) if sig.omega else 1


def _k(method, sig):
    if method == "recursive":
        return core.k_recursive_signature(sig)
    if method == "macmahon":
        return core.k_macmahon(sig)
    return 1 if sig.omega == 0 else _kappa0(method, sig) // 2


def _batch_values(name, N):
    name = KNOWN.get(name, name).replace("_", "")
    if name == "K":
        return sieve.k_sieve(N).as_list()
    if name == "kappa0":
        return sieve.kappa0_sieve(N).as_list()
    if name.startswith("upsilon") and name[7:].isdigit() and int(name[7:]) >= 1:
        return sieve.upsilon_sieve(N, int(name[7:]))[-1].as_list()
    if name.startswith("tau") and name[3:].isdigit() and int(name[3:]) >= 1:
        i = int(name[3:])
        spf = smallest_prime_factor_sieve(max(N, 2))
        return [core.tau(signature_of(factorize(n, spf)), i) for n in range(1, N + 1)]
    raise UsageError(f"unknown function {name!r}; choose from {', '.join(BATCH_FUNCTIONS)}")


def _records_lines(rows, fmt):
    if fmt == "json-lines":
        return [json.dumps(r, separators=(",", ":")) for r in rows]
    return [" ".join(str(v) for v in r.values()) for r in rows]


# -- subcommands -----------------------------------------------------------------

def cmd_eval(args, out):
    if args.function == "kappa_x":
        if args.method not in (None, "recursive"):
            raise UsageError("kappa_x has only the recursive route")
        if args.signature:
            raise UsageError("kappa_x depends on n itself, pass --n")
        if args.x < 0:
            raise UsageError("--x must be non-negative")
        method = "recursive"
    else:
        method = args.method or "theorem2"
    rows = []
    for n, sig in _signatures(args):
        if args.function == "kappa_x":
            value = core.kappa_x_recursive(n, args.x)
        elif args.function == "K":
            value = _k(method, sig)
        else:
            value = _kappa0(method, sig)
        label = n if n is not None else str(sig)
        rows.append({"n": label, "value": value, "method": method})
    if args.format == "json-lines":
        out.extend(json.dumps(r, separators=(",", ":")) for r in rows)
    else:
        out.extend(str(r["value"]) for r in rows)
    return EXIT_OK


def cmd_batch(args, out):
    values = _batch_values(args.function, args.limit)
    seq = Sequence(1, tuple(values))
    if args.format == "json-lines":
        text = "".join(
            json.dumps({"n": i, "value": v}, separators=(",", ":")) + "\n" for i, v in seq.terms
        )
    else:
        text = write_bfile(seq)
    if args.bfile:
        with open(args.bfile, "w", encoding="ascii", newline="\n") as fh:
            fh.write(write_bfile(seq))
    else:
        out.append(text.rstrip("\n"))
    return EXIT_OK


def cmd_verify(args, out):
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    bad = sorted(set(methods) - set(sieve.METHODS))
    if bad:
        raise UsageError(f"unknown methods {bad}; choose from {', '.join(sieve.METHODS)}")
    report = sieve.verify_range(args.limit, methods, jobs=args.jobs,
                                identities=not args.no_identities)
    if args.format == "json-lines":
        out.append(json.dumps({
            "limit": report.limit, "methods": list(report.methods),
            "identities": list(report.identities), "ok": report.ok,
            "mismatches": len(report.mismatches),
        }, separators=(",", ":")))
        out.extend(json.dumps(m.__dict__, separators=(",", ":")) for m in report.mismatches)
    else:
        out.extend(report.summary_lines())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_records(args, out):
    strategy = args.strategy
    if strategy == "auto":
        strategy = "signature" if args.limit > SIGNATURE_SEARCH_ABOVE else "sieve"
    if strategy == "sieve":
        table = records.champions_sieve(args.limit, args.function)
    else:
        table = records.champions_signature_search(args.limit, args.function)
    rows = [{"n": n, "value": v} for n, v in table.entries]
    out.extend(_records_lines(rows, args.format))
    return EXIT_OK


def cmd_tree(args, out):
    tree = build_tree(args.n, args.budget)
    counts = generation_counts(tree)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(render_svg(layout(tree), max_generation=args.generation))
    if args.json:
        with open(args.json, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(export_json(tree) + "\n")
    summary = {
        "n": args.n,
        "nodes": sum(counts),
        "unit_squares": tree.unit_count(),
        "generations": counts,
    }
    if args.format == "json-lines":
        out.append(json.dumps(summary, separators=(",", ":")))
    else:
        out.append(f"n {args.n}")
        out.append(f"nodes {summary['nodes']}")
        out.append(f"unit_squares {summary['unit_squares']}")
        out.append("generations " + " ".join(map(str, counts)))
    return EXIT_OK


def _read_bfile(path):
    with open(path, encoding="utf-8") as fh:
        return parse_bfile(fh.read())


def cmd_oeis(args, out):
    try:
        if args.compare:
            a, b = (_read_bfile(p) for p in args.compare)
        else:
            a = _read_bfile(args.validate)
            if a.offset < 1:
                raise UsageError(f"{args.validate} starts at index {a.offset}; need >= 1")
            b = Sequence(1, tuple(_batch_values(args.function, max(a.last_index, 1))))
    except BFileError as exc:
        raise UsageError(str(exc)) from None
    except OSError as exc:
        raise UsageError(str(exc)) from None
    report = compare(a, b)
    if args.format == "json-lines":
        out.append(json.dumps({
            "overlap": report.overlap, "first_mismatch": report.first_mismatch,
            "only_left": report.only_left, "only_right": report.only_right,
            "match": report.match,
        }, separators=(",", ":")))
    else:
        out.extend(report.lines())
    return EXIT_OK if report.match else EXIT_MISMATCH


def cmd_special(args, out):
    if args.squarefree_omega is not None:
        if args.squarefree_omega < 0:
            raise UsageError("--squarefree-omega must be >= 0")
        rows = [{"omega": w, "value": core.kappa0_squarefree(w)}
                for w in range(1, args.squarefree_omega + 1)]
    else:
        if args.limit is None:
            raise UsageError("--kappa-over-2-alpha needs --limit")
        spf = smallest_prime_factor_sieve(max(args.limit, 2))
        rows = [{"n": n, "value": core.kappa0_over_2_alpha(n, spf)}
                for n in range(1, args.limit + 1)]
    if args.format == "json-lines":
        out.extend(json.dumps(r, separators=(",", ":")) for r in rows)
    else:
        out.extend(str(r["value"]) for r in rows)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "batch": cmd_batch,
    "verify": cmd_verify,
    "records": cmd_records,
    "tree": cmd_tree,
    "oeis": cmd_oeis,
    "special": cmd_special,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    out: list[str] = []
    try:
        code = COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(f"ordfact: error: {exc}", file=stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"ordfact: {exc}", file=stderr)
        return EXIT_BUDGET

    text = "\n".join(out) + "\n" if out else ""
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
