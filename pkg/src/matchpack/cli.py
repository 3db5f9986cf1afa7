"""Command-line front end: ``gen``, ``decompose``, ``verify``, ``oracle``, ``bench``.

Exit codes: 0 success, 1 domain or precondition failure (including bad flags),
2 I/O or parse failure, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .decompose import STRATEGIES, decompose, verify_family
from .errors import (
    BadOrder, BudgetExhausted, CapExceeded, ClaimViolated, InfeasibleDegree,
    InternalContradiction, MatchpackError, OddOrder, ParseError, PreconditionViolated,
    TargetUnreachable,
)
from .generators import Family, GeneratorSpec, gen_named, gen_random_semiregular
from .graph import ceil_quarter, d_threshold, format_graph, read_graph
from .matching import format_family, perfect_matching
from .oracle import DEFAULT_CAP, max_disjoint_pm

EXIT_OK, EXIT_DOMAIN, EXIT_IO, EXIT_INTERNAL = 0, 1, 2, 3
DOMAIN_ERRORS = (BadOrder, InfeasibleDegree, OddOrder, PreconditionViolated, CapExceeded)
BENCH_COLUMNS = ["n", "seed", "D", "target", "achieved", "elapsed_ms", "augment_calls",
                 "case_s_histogram"]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def _read_text(path: str) -> str:
    with open(path, encoding="ascii") as fh:
        return fh.read()


def parse_range(text: str) -> list[int]:
    """``34..48`` (even orders in between), ``34,36`` or a single ``34``."""
    if ".." in text:
        lo, hi = (int(t) for t in text.split("..", 1))
        return list(range(lo, hi + 1, 2)) if lo % 2 == 0 else list(range(lo, hi + 1))
    return [int(t) for t in text.split(",") if t]


def cmd_gen(args) -> int:
    spec = GeneratorSpec(Family(args.family), args.n, args.k, args.seed)
    _write_text(args.out, format_graph(gen_named(spec)))
    return EXIT_OK


def cmd_decompose(args) -> int:
    G = read_graph(args.graph)
    try:
        res = decompose(G, args.target, args.strategy, args.seed, restarts=args.restarts,
                        via_hamilton=args.via_hamilton, repro_dir=args.repro_dir)
        code = EXIT_OK
    except (BudgetExhausted, TargetUnreachable) as exc:
        res = exc.result
        code = EXIT_DOMAIN
    if res.achieved == 0 and perfect_matching(G) is None:
        print("no perfect matching", file=sys.stderr)
    if args.out:
        _write_text(args.out, res.family_text())
    if args.trace:
        _write_text(args.trace, res.trace_lines())
    target = res.target if res.target is not None else res.achieved
    print(f"achieved={res.achieved} target={target}")
    if code == EXIT_OK and res.achieved < target:
        code = EXIT_DOMAIN
    return code


def cmd_verify(args) -> int:
    G = read_graph(args.graph)
    fam = _parse_raw_family(_read_text(args.family))
    check = verify_family(G, fam)
    if check:
        print(f"ok: {len(fam)} disjoint perfect matchings")
        return EXIT_OK
    print(check.violation)
    return EXIT_DOMAIN


def _parse_raw_family(text: str) -> list[list[tuple[int, int]]]:
    # raw edge lists, so that overlapping edges are reported by verify, not the parser
    blocks: list[list[tuple[int, int]]] = [[]]
    seen_any = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        seen_any = True
        if line == "--":
            blocks.append([])
            continue
        try:
            a, b = line.split("-")
            blocks[-1].append((int(a), int(b)))
        except ValueError:
            raise ParseError(f"malformed matching line {line!r}") from None
    return blocks if seen_any else []


def cmd_oracle(args) -> int:
    G = read_graph(args.graph)
    res = max_disjoint_pm(G, cap=args.cap)
    print(f"pm_count={res.pm_count} max_disjoint={res.max_disjoint}")
    if args.out:
        _write_text(args.out, format_family(res.witness))
    return EXIT_OK


def _bench_row(n: int, seed: int, strategy: str, restarts: int) -> dict:
    D = d_threshold(n)
    target = ceil_quarter(n)
    G = gen_random_semiregular(n, D, seed)
    try:
        res = decompose(G, target, strategy, seed, restarts=restarts)
    except (BudgetExhausted, TargetUnreachable) as exc:
        res = exc.result
    hist = res.case_histogram
    return {
        "n": n, "seed": seed, "D": D, "target": target, "achieved": res.achieved,
        "elapsed_ms": round(res.elapsed * 1000),
        "augment_calls": res.augment_calls,
        "case_s_histogram": ";".join(f"{k}:{hist.get(k, 0)}" for k in ("s>=2", "s=1", "s=0")),
    }


def cmd_bench(args) -> int:
    orders = parse_range(args.n)
    if any(n % 2 for n in orders):
        raise PreconditionViolated("even-order", f"orders {orders}")
    if args.strategy == "proof" and any(n < 34 for n in orders):
        raise PreconditionViolated("order>=34", "the proof strategy needs n >= 34")
    jobs = [(n, seed) for n in orders for seed in range(1, args.seeds + 1)]
    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
        rows = list(pool.map(lambda job: _bench_row(job[0], job[1], args.strategy, args.restarts), jobs))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _write_text(args.out, buf.getvalue())
    return EXIT_OK if all(r["achieved"] >= r["target"] for r in rows) else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matchpack", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a graph")
    g.add_argument("--family", required=True, choices=[f.value for f in Family])
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--k", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("decompose", help="find disjoint perfect matchings")
    d.add_argument("graph")
    d.add_argument("--target", type=int)
    d.add_argument("--strategy", choices=STRATEGIES, default="proof")
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--restarts", type=int, default=50)
    d.add_argument("--via-hamilton", action="store_true",
                   help="peel the extra matchings above the threshold from Hamiltonian cycles")
    d.add_argument("--out", help="family file")
    d.add_argument("--trace", help="JSON-lines trace file")
    d.add_argument("--repro-dir", help="directory for stuck-state reproducer files")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="check a family against a graph")
    v.add_argument("graph")
    v.add_argument("family")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact maximum family for a small graph")
    o.add_argument("graph")
    o.add_argument("--cap", type=int, default=DEFAULT_CAP)
    o.add_argument("--out", help="witness family file")
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="run decompose over random graphs")
    b.add_argument("--n", required=True, help="orders, e.g. 34..48 or 34,36")
    b.add_argument("--seeds", type=int, default=1)
    b.add_argument("--strategy", choices=STRATEGIES, default="proof")
    b.add_argument("--restarts", type=int, default=50)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--out", help="CSV file (default stdout)")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ClaimViolated, InternalContradiction) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except MatchpackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
