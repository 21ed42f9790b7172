"""Command line front end: build an index, answer queries, self-test, bench.

Query grammar (positions 1-based, inclusive):

    MINCOVER i j | ALLCOVERS i j | ISCOVER i j l | COVEREDPREF i j l |
    BORDERS i j | PERIODS i j | RUNS

Progression sets are rendered as space-separated start:diff:count terms,
runs as start:end:period terms.  Malformed lines answer EPARSE, positions
outside the text answer ERANGE; processing always continues.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import oracle
from .core_text import FactorError
from .index import QuasiperiodIndex

log = logging.getLogger("qpindex")

_ARITY = {
    "MINCOVER": 2,
    "ALLCOVERS": 2,
    "ISCOVER": 3,
    "COVEREDPREF": 3,
    "BORDERS": 2,
    "PERIODS": 2,
    "RUNS": 0,
}


class QueryError(ValueError):
    def __init__(self, code: str, detail: str) -> None:
        super().__init__(f"{code} {detail}")
        self.code = code
        self.detail = detail


def parse_query(line: str) -> tuple[str, list[int]]:
    toks = line.split()
    cmd = toks[0].upper()
    if cmd not in _ARITY:
        raise QueryError("EPARSE", f"unknown command {toks[0]}")
    if len(toks) - 1 != _ARITY[cmd]:
        raise QueryError("EPARSE", f"{cmd} takes {_ARITY[cmd]} arguments")
    try:
        args = [int(t) for t in toks[1:]]
    except ValueError:
        raise QueryError("EPARSE", "arguments must be integers")
    return cmd, args


def answer_query(ix: QuasiperiodIndex, cmd: str, args: list[int]):
    try:
        if cmd == "MINCOVER":
            return ix.min_cover(*args)
        if cmd == "ALLCOVERS":
            return list(ix.all_covers(*args).progressions)
        if cmd == "ISCOVER":
            return ix.is_cover(*args)
        if cmd == "COVEREDPREF":
            return ix.covered_pref(*args)
        if cmd == "BORDERS":
            return list(ix.borders(*args).progressions)
        if cmd == "PERIODS":
            return ix.periods(*args)
        return [(r.a, r.b, r.p) for r in ix.runs()]
    except FactorError as exc:
        raise QueryError("ERANGE", str(exc))


def render_text(cmd: str, ans) -> str:
    if cmd == "ISCOVER":
        return "true" if ans else "false"
    if cmd in ("MINCOVER", "COVEREDPREF"):
        return str(ans)
    if cmd == "RUNS":
        return " ".join(f"{a}:{b}:{p}" for a, b, p in ans)
    return " ".join(p.render() for p in ans)


def render_json(cmd: str, query: str, ans) -> str:
    if cmd in ("ISCOVER", "MINCOVER", "COVEREDPREF"):
        payload = ans
    elif cmd == "RUNS":
        payload = [list(t) for t in ans]
    else:
        payload = [p.render() for p in ans]
    return json.dumps(
        {"answer": payload, "query": query}, sort_keys=True, separators=(",", ":")
    )


def process_line(ix: QuasiperiodIndex, line: str, as_json: bool) -> str:
    query = line.strip()
    if not query:
        return ""
    try:
        cmd, args = parse_query(query)
        ans = answer_query(ix, cmd, args)
    except QueryError as exc:
        if as_json:
            return json.dumps(
                {"detail": exc.detail, "error": exc.code, "query": query},
                sort_keys=True,
                separators=(",", ":"),
            )
        return f"{exc.code} {exc.detail}"
    return render_json(cmd, query, ans) if as_json else render_text(cmd, ans)


def _load_index(args) -> QuasiperiodIndex:
    if args.index and args.text:
        raise SystemExit("pass either --index or --text, not both")
    if args.index:
        t0 = time.perf_counter()
        ix = QuasiperiodIndex.load(args.index)
        log.info("loaded index n=%d in %.3fs", ix.n, time.perf_counter() - t0)
        return ix
    if args.text:
        return _build_from_file(args.text)
    raise SystemExit("one of --index or --text is required")


def _build_from_file(path: str) -> QuasiperiodIndex:
    with open(path, "rb") as fh:
        data = fh.read()
    if not data:
        raise SystemExit(f"{path}: empty input")
    t0 = time.perf_counter()
    ix = QuasiperiodIndex(data)
    log.info("built index n=%d in %.3fs", ix.n, time.perf_counter() - t0)
    return ix


def cmd_build(args) -> int:
    ix = _build_from_file(args.text)
    print(f"built n={ix.n} runs={len(ix.runs())}")
    if args.index:
        ix.save(args.index)
        print(f"saved {args.index}")
    return 0


def cmd_query(args) -> int:
    ix = _load_index(args)
    for q in args.queries:
        print(process_line(ix, q, args.json))
    return 0


def cmd_batch(args) -> int:
    ix = _load_index(args)
    if args.queries:
        with open(args.queries, "r") as fh:
            lines = fh.readlines()
    else:
        lines = sys.stdin.readlines()
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            outs = pool.map(lambda ln: process_line(ix, ln, args.json), lines)
            for out in outs:
                print(out)
    else:
        for ln in lines:
            print(process_line(ix, ln, args.json))
    return 0


def _selftest_text(rng: random.Random, n: int, alphabet: str) -> str:
    return "".join(rng.choice(alphabet) for _ in range(n))


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    failures = 0

    def report(name: str, checks: int, bad: int) -> None:
        nonlocal failures
        failures += bad
        state = "ok" if bad == 0 else f"FAIL ({bad} mismatches)"
        print(f"selftest: {name} {state} ({checks} checks)")

    # exhaustive small covers
    checks = bad = 0
    from itertools import product

    for n in range(1, 9):
        for bits in product("ab", repeat=n):
            text = "".join(bits)
            ix = QuasiperiodIndex(text)
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    want = sorted(oracle.naive_covers(text[i - 1: j]))
                    got = ix.all_covers(i, j).elements()
                    checks += 1
                    if got != want or ix.min_cover(i, j) != want[0]:
                        bad += 1
    report("exhaustive covers n<=8", checks, bad)

    # randomized equivalence on longer texts
    checks = bad = 0
    for alphabet in ("ab", "abc"):
        for _ in range(args.rounds):
            text = _selftest_text(rng, args.max_n, alphabet)
            n = len(text)
            ix = QuasiperiodIndex(text)
            if {(r.a, r.b, r.p) for r in ix.runs()} != oracle.naive_runs(text):
                bad += 1
            checks += 1
            for _ in range(60):
                i = rng.randrange(1, n + 1)
                j = rng.randrange(i, n + 1)
                sub = text[i - 1: j]
                s = j - i + 1
                ell = rng.randrange(1, s + 1)
                good = (
                    ix.min_cover(i, j) == oracle.naive_min_cover(sub)
                    and ix.all_covers(i, j).elements() == sorted(oracle.naive_covers(sub))
                    and ix.borders(i, j).elements() == oracle.naive_borders(sub)
                    and ix.covered_pref(i, j, ell) == oracle.naive_covered_pref(ell, sub)
                )
                checks += 1
                if not good:
                    bad += 1
    report(f"randomized n={args.max_n}", checks, bad)

    print("selftest:", "PASS" if failures == 0 else "FAIL")
    return 0 if failures == 0 else 1


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    sizes = [int(t) for t in args.sizes.split(",")]
    rows = []
    for n in sizes:
        text = _selftest_text(rng, n, "ab")
        t0 = time.perf_counter()
        ix = QuasiperiodIndex(text)
        build_s = time.perf_counter() - t0
        lat = {"MINCOVER": [], "ALLCOVERS": []}
        for _ in range(args.queries):
            i = rng.randrange(1, n + 1)
            j = rng.randrange(i, n + 1)
            t0 = time.perf_counter()
            ix.min_cover(i, j)
            lat["MINCOVER"].append(time.perf_counter() - t0)
            t0 = time.perf_counter()
            ix.all_covers(i, j)
            lat["ALLCOVERS"].append(time.perf_counter() - t0)
        for op, xs in lat.items():
            xs.sort()
            rows.append(
                (
                    n,
                    op,
                    build_s,
                    statistics.median(xs) * 1e3,
                    xs[int(0.95 * (len(xs) - 1))] * 1e3,
                )
            )
    if args.csv:
        print("n,op,build_s,median_ms,p95_ms")
        for n, op, b, med, p95 in rows:
            print(f"{n},{op},{b:.3f},{med:.4f},{p95:.4f}")
    else:
        print(f"{'n':>8} {'op':<10} {'build_s':>8} {'median_ms':>10} {'p95_ms':>8}")
        for n, op, b, med, p95 in rows:
            print(f"{n:>8} {op:<10} {b:>8.3f} {med:>10.4f} {p95:>8.4f}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qpindex", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build an index from a text file")
    b.add_argument("text", help="input file, read as raw bytes")
    b.add_argument("--index", help="write the index here")
    b.set_defaults(func=cmd_build)

    for name, fn in (("query", cmd_query), ("batch", cmd_batch)):
        p = sub.add_parser(name, help=f"{name} against an index")
        p.add_argument("--index", help="load a saved index")
        p.add_argument("--text", help="build from a text file instead")
        p.add_argument("--json", action="store_true", help="one JSON object per line")
        if name == "query":
            p.add_argument("queries", nargs="+", help="query strings")
        else:
            p.add_argument("--queries", help="query file (default: stdin)")
            p.add_argument("--threads", type=int, default=1, help="worker threads")
        p.set_defaults(func=fn)

    s = sub.add_parser("selftest", help="run oracle-equivalence checks")
    s.add_argument("--seed", type=int, default=20240817)
    s.add_argument("--max-n", type=int, default=128)
    s.add_argument("--rounds", type=int, default=3, help="random texts per alphabet")
    s.set_defaults(func=cmd_selftest)

    be = sub.add_parser("bench", help="latency and build-time table")
    be.add_argument("--sizes", default="1024,4096,16384", help="comma-separated n")
    be.add_argument("--queries", type=int, default=200)
    be.add_argument("--seed", type=int, default=20240817)
    be.add_argument("--csv", action="store_true")
    be.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    level = os.environ.get("QPI_LOG", "warning").upper()
    logging.basicConfig(
        stream=sys.stderr, level=getattr(logging, level, logging.WARNING)
    )
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        # bad paths and corrupt/mismatched index files end with one line
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
