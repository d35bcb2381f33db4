"""Command-line interface.

    csfkit spider --nu 9
    csfkit expand --nu 6,2,1 [--cache PATH]
    csfkit verify --n 10 [--cache PATH] [--out PATH] [--force]
    csfkit chartable --n 20 --cache PATH

JSON goes to stdout, progress to stderr. Exit codes: 0 computed, 2 usage or
parse error, 3 arithmetic overflow, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
import warnings
from pathlib import Path

from csfkit import cache
from csfkit.graphs import spider
from csfkit.partitions import Partition
from csfkit.positivity import LARGE_N, LargeComputationWarning, positivity_report, theorem_verdict, verify_theorem
from csfkit.schemas import SCHEMA_VERSION
from csfkit.symfunc import CharacterTable

EXIT_OK, EXIT_USAGE, EXIT_OVERFLOW, EXIT_IO = 0, 2, 3, 4
MAX_CHARTABLE_N = 22

log = logging.getLogger("csfkit")


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"


def document(command: str, inputs: dict, results: dict, timing: dict[str, float]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "timing": {k: round(v, 6) for k, v in timing.items()},
    }


def verify_document(n: int, reports) -> dict:
    """The deterministic verify report: no timings, fixed ordering."""
    return {
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "reports": [r.to_json() for r in reports],
        "verdict": theorem_verdict(reports),
    }


def cmd_spider(args: argparse.Namespace) -> dict:
    t0 = time.perf_counter()
    g = spider(args.nu)
    return document("spider", {"nu": list(args.nu)}, g.to_json(), {"construct": time.perf_counter() - t0})


def cmd_expand(args: argparse.Namespace) -> dict:
    nu = args.nu
    timing: dict[str, float] = {}
    g = spider(nu)
    t0 = time.perf_counter()
    table, _ = cache.load_or_build(g.vertex_count, args.cache)
    timing["chartable"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    rep = positivity_report(nu, g, table)
    timing["expand"] = time.perf_counter() - t0
    log.info("nu=%s: %d negative Schur coefficients", nu.text(), len(rep.negative))
    inputs = {"nu": list(nu), "cache": str(args.cache) if args.cache else None}
    return document("expand", inputs, rep.to_json(), timing)


def cmd_verify(args: argparse.Namespace) -> dict:
    n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    if n >= LARGE_N and not args.force:
        raise UsageError(f"n={n} needs 2^{2 * n - 1} subsets per tree; pass --force to run anyway")
    timing: dict[str, float] = {}
    t0 = time.perf_counter()
    table, _ = cache.load_or_build(2 * n, args.cache)
    timing["chartable"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LargeComputationWarning)
        reports = verify_theorem(n, table)
    timing["expand"] = time.perf_counter() - t0
    results = verify_document(n, reports)
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(dumps(results), encoding="ascii")
    print(results["verdict"], file=sys.stderr)
    inputs = {"n": n, "cache": str(args.cache) if args.cache else None,
              "out": str(args.out) if args.out else None, "force": args.force}
    return document("verify", inputs, results, timing)


def cmd_chartable(args: argparse.Namespace) -> dict:
    n = args.n
    if not 0 <= n <= MAX_CHARTABLE_N:
        raise UsageError(f"--n must be between 0 and {MAX_CHARTABLE_N}")
    t0 = time.perf_counter()
    try:
        table = cache.read_table(args.cache, n)
        rebuilt = False
        log.info("cache %s is valid; nothing to do", args.cache)
    except cache.CacheError as exc:
        log.info("building table: %s", exc)
        table = CharacterTable(n).build()
        cache.write_table(table, args.cache)
        rebuilt = True
    results = {"n": n, "count": len(table.partitions), "path": str(args.cache), "rebuilt": rebuilt}
    return document("chartable", {"n": n, "cache": str(args.cache)}, results, {"chartable": time.perf_counter() - t0})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="csfkit", description="Chromatic symmetric functions of spider trees.")
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spider", help="print the spider tree T(nu) as JSON")
    p.add_argument("--nu", type=_partition_arg, required=True, help='partition such as "2,1"')
    p.set_defaults(func=cmd_spider)

    p = sub.add_parser("expand", help="Schur expansion of X_T(nu)")
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.add_argument("--cache", type=Path, default=None, help="character table cache file")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check every spider T(nu), nu a partition of n-1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cache", type=Path, default=None)
    p.add_argument("--out", type=Path, default=None, help="write the deterministic report here")
    p.add_argument("--force", action="store_true", help="allow n >= %d" % LARGE_N)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chartable", help="build and persist the character table of degree n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cache", type=Path, required=True)
    p.set_defaults(func=cmd_chartable)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        doc = args.func(args)
    except UsageError as exc:
        print(f"csfkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as exc:
        print(f"csfkit: arithmetic overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except OSError as exc:
        print(f"csfkit: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(dumps(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
