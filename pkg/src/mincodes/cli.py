"""Command-line interface.

One executable with subcommands:

    mincodes analyze FILE --q 2 [--pretty] [--oracle support|geometric|both]
    mincodes construct simplex --k 3 --q 2
    mincodes construct su2 --t 2
    mincodes construct circulant --spec spec.json
    mincodes search --k 3 --q 2 [--delta 1] [--n-max N] [--budget-nodes N]
                    [--budget-seconds S] [--threads T]
    mincodes acute --d 4 | --check points.txt
    mincodes verify-corpus [--filter GLOB] [--tier fast|all]

Exit codes: 0 success, 1 property failure, 2 usage error, 3 budget
exhaustion.  Reports are JSON on stdout unless --pretty is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import code as code_mod
from . import corpus as corpus_mod
from . import minimal, search
from .code import BudgetExceededError, LinearCode, ParseError, format_matrix
from .construct import CirculantSpec, disjoint_subspaces_code, generalized_circulant, simplex

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class AnalysisReport:
    """Full analysis of one code: parameters, enumerator, minimality, bounds."""

    n: int
    k: int
    q: int
    min_distance: int
    weight_enumerator: dict[str, int]
    divisibility: int
    minimal: bool
    minimal_oracle: str
    ashikhmin_barg: bool
    bounds: dict
    timing_seconds: float

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "min_distance": self.min_distance,
            "weight_enumerator": self.weight_enumerator,
            "divisibility": self.divisibility,
            "minimal": self.minimal,
            "minimal_oracle": self.minimal_oracle,
            "ashikhmin_barg": self.ashikhmin_barg,
            "bounds": self.bounds,
            "timing_seconds": round(self.timing_seconds, 3),
        }

    def pretty(self) -> str:
        we = "+".join(
            ("" if c == 1 and int(w) > 0 else str(c)) + (f"x^{w}" if int(w) else "")
            for w, c in sorted(self.weight_enumerator.items(), key=lambda kv: int(kv[0]))
        )
        rows = [
            ("parameters", f"[{self.n},{self.k},{self.min_distance}]_{self.q}"),
            ("weight enumerator", we),
            ("divisibility", str(self.divisibility)),
            ("minimal", f"{self.minimal} ({self.minimal_oracle} oracle)"),
            ("ashikhmin-barg", str(self.ashikhmin_barg)),
            ("bounds satisfied", str(self.bounds["satisfied"])),
            ("timing", f"{self.timing_seconds:.3f}s"),
        ]
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{name:<{width}}  {val}" for name, val in rows)


def analyze_code(code: LinearCode, oracle: str = "geometric",
                 max_codewords: int | None = None) -> AnalysisReport:
    """Compute the full analysis report for a code."""
    t0 = time.monotonic()
    we = code_mod.weight_enumerator(code, max_codewords)
    if oracle == "support":
        is_min = minimal.is_minimal_support(code)
    elif oracle == "geometric":
        is_min = minimal.is_minimal_geometric(code)
    elif oracle == "both":
        a = minimal.is_minimal_support(code)
        b = minimal.is_minimal_geometric(code)
        if a != b:
            raise AssertionError(f"oracle disagreement: support={a} geometric={b}")
        is_min = a
    else:
        raise ValueError(f"unknown oracle {oracle!r}")
    br = minimal.bounds_report(code, assume_minimal=is_min, max_codewords=max_codewords)
    return AnalysisReport(
        n=code.n,
        k=code.k,
        q=code.q,
        min_distance=we.min_weight,
        weight_enumerator=we.to_dict(),
        divisibility=we.divisibility,
        minimal=is_min,
        minimal_oracle=oracle,
        ashikhmin_barg=minimal.ashikhmin_barg(we),
        bounds=br.to_dict(),
        timing_seconds=time.monotonic() - t0,
    )


def _env_budget() -> int | None:
    val = os.environ.get("MINCODES_MAX_CODEWORDS")
    return int(val) if val else None


def cmd_analyze(args) -> int:
    try:
        text = open(args.file).read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = code_mod.parse_code(text, args.q, allow_rank_deficient=args.allow_rank_deficient)
    report = analyze_code(code, oracle=args.oracle, max_codewords=args.max_codewords)
    if args.pretty:
        print(report.pretty())
    else:
        print(json.dumps(report.to_json_obj(), indent=1))
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.what == "simplex":
        c = simplex(args.k, args.q)
    elif args.what == "su2":
        c = disjoint_subspaces_code(args.t)
    elif args.what == "circulant":
        with open(args.spec) as f:
            spec = CirculantSpec.from_json(f.read())
        c = generalized_circulant(spec)
    else:
        raise ValueError(args.what)
    print(format_matrix(c))
    return EXIT_OK


def cmd_search(args) -> int:
    result = search.search_min_length(
        args.k,
        args.q,
        args.delta,
        n_max=args.n_max,
        budget_nodes=args.budget_nodes,
        budget_seconds=args.budget_seconds,
        threads=args.threads,
    )
    print(json.dumps(result.to_json_obj(), indent=1))
    if result.budget_exhausted:
        print(
            f"budget exhausted: no code up to n={result.exhausted_up_to}, "
            f"longer lengths unresolved",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    return EXIT_OK


def cmd_acute(args) -> int:
    if args.check:
        points = []
        with open(args.check) as f:
            for line in f:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                points.append(tuple(int(ch) for ch in line if not ch.isspace()))
        count = search.count_right_angles(points)
        print(json.dumps({
            "points": len(points),
            "right_angles": count,
            "acute": count == 0,
        }, indent=1))
        return EXIT_OK if count == 0 else EXIT_PROPERTY_FAILURE
    result = search.max_acute_set(
        args.d, budget_nodes=args.budget_nodes, budget_seconds=args.budget_seconds
    )
    print(json.dumps(result.to_json_obj(), indent=1))
    return EXIT_OK if result.proven_maximal else EXIT_BUDGET


def cmd_verify_corpus(args) -> int:
    reports = corpus_mod.verify_all(args.filter, tier=args.tier)
    failed = [r for r in reports if not r.passed]
    for r in reports:
        status = "ok" if r.passed else "FAIL"
        line = f"{r.id}: {status}"
        if not r.passed:
            line += " " + "; ".join(f"{k}: {v}" for k, v in r.details.items())
        print(line, file=sys.stderr)
    print(json.dumps({
        "checked": len(reports),
        "passed": len(reports) - len(failed),
        "failed": [r.id for r in failed],
    }, indent=1))
    return EXIT_OK if not failed else EXIT_PROPERTY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mincodes",
        description="Analyze, construct, search, and verify minimal and "
        "divisible linear codes over GF(2), GF(3), GF(4).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a generator-matrix file")
    p.add_argument("file", help="matrix text file (one row per line)")
    p.add_argument("--q", type=int, default=2, help="field size (2, 3, or 4)")
    p.add_argument("--pretty", action="store_true", help="human-readable table")
    p.add_argument("--oracle", choices=["support", "geometric", "both"],
                   default="geometric", help="minimality oracle")
    p.add_argument("--allow-rank-deficient", action="store_true",
                   help="row-reduce rank-deficient input instead of rejecting it")
    p.add_argument("--max-codewords", type=int, default=_env_budget(),
                   help="enumeration budget override (default: "
                        "MINCODES_MAX_CODEWORDS or 2^26)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a code and print its generator")
    ps = p.add_subparsers(dest="what", required=True)
    s = ps.add_parser("simplex", help="one-weight code on all projective points")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--q", type=int, default=2)
    s = ps.add_parser("su2", help="two-weight code from three disjoint t-spaces")
    s.add_argument("--t", type=int, required=True)
    s = ps.add_parser("circulant", help="circulant block grid from a JSON spec")
    s.add_argument("--spec", required=True, help="CirculantSpec JSON file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="minimum length of a divisible minimal code")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--delta", type=int, default=1)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--threads", type=int, default=1,
                   help="worker count (first-column subtrees; results are "
                        "identical for any value)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("acute", help="maximum acute sets in the 0/1 hypercube")
    p.add_argument("--d", type=int, help="dimension to search")
    p.add_argument("--check", help="file of 0/1 vectors (one per line) to test")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.set_defaults(func=cmd_acute)

    p = sub.add_parser("verify-corpus", help="re-derive the embedded matrices' parameters")
    p.add_argument("--filter", default="*", help="id glob, e.g. 'm9-*'")
    p.add_argument("--tier", choices=["fast", "all"], default="all")
    p.set_defaults(func=cmd_verify_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "acute" and not args.check and args.d is None:
        parser.error("acute needs --d or --check")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
