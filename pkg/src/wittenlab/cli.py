"""Command-line front end.

Every result is a ``TableRecord``. ``--format lines`` prints records exactly as
they appear in cache files; ``--format table`` aligns them in columns. The exit
code is 0 when every requested check passes, 1 when one fails and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence, TextIO

from .combinatorics import Partition, format_rational
from .hodge import extract_hodge_table
from .hurwitz import BudgetError, HurwitzKey, factorization_count_bruteforce, factorization_count_frobenius
from .psi import CorrelatorCache, CorrelatorKey, correlator_keys, default_cache, psi_correlator, tilde_factor
from .records import CacheFormatError, TableRecord, export_cache, import_cache, psi_record
from .verify import SUITES, Bounds, CheckResult

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERIFY_NAMES = ("dvv", "sharp", "virasoro", "hurwitz", "elsv", "cutjoin", "theorem1", "starstar", "asymptotic",
                "laplace", "join-integral", "stirling")


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _exponents(text: str) -> tuple[int, ...]:
    try:
        ks = tuple(int(t) for t in text.split(",")) if text.strip() else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent list {text!r}") from None
    if any(k < 0 for k in ks):
        raise argparse.ArgumentTypeError("exponents must be non-negative")
    return ks


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "lines"), default=argparse.SUPPRESS)
    common.add_argument("--precision-bits", type=int, default=argparse.SUPPRESS, metavar="B")
    common.add_argument("--max-degree", type=int, default=argparse.SUPPRESS, metavar="D")
    common.add_argument("--max-index", type=int, default=argparse.SUPPRESS, metavar="K")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, metavar="T")
    common.add_argument("--cache", default=argparse.SUPPRESS, metavar="PATH",
                        help="load psi values from a cache file first")

    parser = argparse.ArgumentParser(prog="wittenlab", parents=[common],
                                     description="Exact intersection numbers, Hurwitz numbers and their relations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", parents=[common], help="a psi-class intersection number")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--exponents", type=_exponents, required=True)

    h = sub.add_parser("hurwitz", parents=[common], help="a double Hurwitz number")
    h.add_argument("--nu", type=_partition, required=True)
    h.add_argument("--mu", type=_partition, required=True)
    h.add_argument("--r", type=int, required=True)
    h.add_argument("--connected", action="store_true")
    h.add_argument("--method", choices=("brute", "frobenius"), default="brute")

    sub.add_parser("extract-hodge", parents=[common], help="solve for genus-1 one-lambda integrals")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suites", nargs="+", choices=VERIFY_NAMES)
    v.add_argument("--max-genus", type=int)
    v.add_argument("--max-points", type=int)

    e = sub.add_parser("export-cache", parents=[common], help="write psi correlators to a cache file")
    e.add_argument("path")
    e.add_argument("--genus", type=int, default=2, help="fill the cache up to this genus first")
    e.add_argument("--points", type=int, default=4, help="and up to this many points")

    i = sub.add_parser("import-cache", parents=[common], help="read and re-verify a cache file")
    i.add_argument("path")
    return parser


def _options(args) -> dict:
    return {
        "format": getattr(args, "format", "table"),
        "precision_bits": getattr(args, "precision_bits", None),
        "max_degree": getattr(args, "max_degree", None),
        "max_index": getattr(args, "max_index", None),
        "threads": getattr(args, "threads", 1),
    }


def emit(records: Iterable[TableRecord], fmt: str, out: TextIO) -> None:
    records = list(records)
    if fmt == "lines":
        for rec in records:
            out.write(rec.to_line() + "\n")
        return
    rows = [(rec.kind, " ".join(rec.key), rec.value, rec.provenance) for rec in records]
    if not rows:
        return
    widths = [max(len(r[c]) for r in rows) for c in range(3)]
    for r in rows:
        out.write(f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  {r[2]:<{widths[2]}}  {r[3]}\n".rstrip() + "\n")


def _check_record(res: CheckResult) -> TableRecord:
    witness = res.witness or "-"
    return TableRecord("check", (res.name, res.inputs, witness), "pass" if res.passed else "fail")


def cmd_psi(args, opts, out) -> int:
    key = CorrelatorKey.of(args.genus, args.exponents)
    cached = (key.genus, key.exponents) in default_cache
    value = psi_correlator(args.genus, args.exponents)
    emit([psi_record(key.genus, key.exponents, value, "cached" if cached else "computed")], opts["format"], out)
    return EXIT_OK


def cmd_hurwitz(args, opts, out) -> int:
    try:
        key = HurwitzKey(args.nu, args.mu, args.r, args.connected)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        if args.method == "brute":
            value = factorization_count_bruteforce(key)
        else:
            value = factorization_count_frobenius(key)
    except BudgetError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fields = (key.nu.label() or "-", key.mu.label() or "-", str(key.r), "connected" if key.connected else "disconnected")
    emit([TableRecord.exact("hurwitz", fields, value)], opts["format"], out)
    return EXIT_OK


def cmd_extract_hodge(args, opts, out) -> int:
    result = extract_hodge_table()
    records = [TableRecord.exact("hodge", (str(k.genus), ",".join(map(str, k.exponents)), str(k.lambda_index)), v)
               for k, v in result.table.items()]
    check = CheckResult("hodge-extraction", f"{len(result.equations)} equations {len(result.unknowns)} unknowns",
                        result.consistent, f"surplus {result.surplus}")
    records.append(_check_record(check))
    emit(records, opts["format"], out)
    return EXIT_OK if result.consistent else EXIT_FAIL


def cmd_verify(args, opts, out) -> int:
    bounds = Bounds()
    if opts["max_index"] is not None:
        bounds.max_index = opts["max_index"]
    if opts["max_degree"] is not None:
        bounds.max_degree = opts["max_degree"]
    if opts["precision_bits"] is not None:
        if opts["precision_bits"] < 64:
            raise UsageError("--precision-bits must be at least 64")
        bounds.precision_bits = opts["precision_bits"]
        bounds.starstar_bits = max(opts["precision_bits"], 64)
    bounds.max_genus = args.max_genus
    bounds.max_points = args.max_points
    names = list(dict.fromkeys(args.suites))
    threads = max(1, opts["threads"] or 1)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        # map preserves submission order, so output is deterministic
        batches = list(pool.map(lambda name: list(SUITES[name](bounds)), names))
    results = [res for batch in batches for res in batch]
    emit((_check_record(r) for r in results), opts["format"], out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_export_cache(args, opts, out) -> int:
    for g in range(args.genus + 1):
        for n in range(1, args.points + 1):
            if 2 * g - 2 + n > 0:
                for ks in correlator_keys(g, n):
                    psi_correlator(g, ks)
    count = export_cache(args.path)
    out.write(f"wrote {count} records to {args.path}\n")
    return EXIT_OK


def cmd_import_cache(args, opts, out) -> int:
    loaded = CorrelatorCache()
    records = import_cache(args.path, loaded)
    failures = []
    # independent of the file's values but shared across entries
    reference = CorrelatorCache()
    for key, value in loaded.items():
        fresh = psi_correlator(key.genus, key.exponents, reference)
        if fresh != value:
            failures.append(CheckResult("cache-entry", f"g={key.genus} k={','.join(map(str, key.exponents))}", False,
                                        f"file {format_rational(value)} recomputed {format_rational(fresh)}"))
    if not failures:
        for key, value in loaded.items():
            default_cache.put((key.genus, key.exponents), value * tilde_factor(key.exponents))
    summary = CheckResult("cache-import", args.path, not failures, f"{len(records)} records")
    emit([_check_record(r) for r in failures + [summary]], opts["format"], out)
    return EXIT_OK if not failures else EXIT_FAIL


COMMANDS = {
    "psi": cmd_psi,
    "hurwitz": cmd_hurwitz,
    "extract-hodge": cmd_extract_hodge,
    "verify": cmd_verify,
    "export-cache": cmd_export_cache,
    "import-cache": cmd_import_cache,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    opts = _options(args)
    try:
        cache_path = getattr(args, "cache", None)
        if cache_path is not None:
            import_cache(cache_path)
        return COMMANDS[args.command](args, opts, out)
    except UsageError as exc:
        err.write(f"wittenlab: error: {exc}\n")
        return EXIT_USAGE
    except (CacheFormatError, OSError) as exc:
        err.write(f"wittenlab: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
