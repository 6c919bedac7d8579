"""Command line entry point: ``hyperconv laws|invariants|enumerate|explore``."""
from __future__ import annotations

import argparse
import json
import sys

from ._bits import as_list
from .errors import HyperconvError
from .harness.context import TARGETS, alphas, hyper_top, space_json, target_space
from .harness.enumerate import enumerate_spaces
from .harness.explore import search_reflection
from .harness.laws import ScopeConfig
from .harness.report import run_laws
from .hyperspace import arens_number, lindelof_number, solidity_check
from .space import load_space


def _exclusion(text: str) -> tuple:
    law_id, sep, reason = text.partition("=")
    if not sep or not law_id or not reason:
        raise argparse.ArgumentTypeError("exclusions look like ID=REASON")
    return law_id, reason


def _cmd_laws(args) -> int:
    config = ScopeConfig(max_points=args.max_points, function_points=min(3, args.max_points),
                         depth=args.depth, seed=args.seed, random_posets=args.random_posets,
                         exclude=tuple(sorted(args.exclude)))
    only = [s for part in args.only for s in part.split(",") if s] if args.only else None
    report = run_laws(config, only, workers=args.workers)
    if args.report == "json":
        print(report.to_json(timing=args.timing))
    else:
        print(report.to_text())
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(report.to_json(timing=args.timing) + "\n")
    return 0 if report.ok else 1


def _cmd_invariants(args) -> int:
    X = load_space(args.space_file)
    out = {"space": space_json(X), "opens": len(X.opens),
           "components": [as_list(c) for c in X.components],
           "separation": X.separation_profile()}
    labels = [args.alpha] if args.alpha else ["p", "k", "kappa", "s"]
    out["alpha"] = {}
    for label in labels:
        alpha = alphas(X)[label]
        out["alpha"][label] = {
            "families": len(alpha),
            "intersection_closed": alpha.is_intersection_closed(),
            "solidity": solidity_check(hyper_top(X, label)).as_dict(),
            "lindelof": {str(as_list(u)): lindelof_number(alpha, u) for u in X.opens},
            "arens": {str(as_list(u)): arens_number(alpha, u) for u in X.opens},
        }
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def _cmd_enumerate(args) -> int:
    spaces = list(enumerate_spaces(args.points, t0_only=args.t0))
    if args.count:
        print(len(spaces))
    else:
        for X in spaces:
            print(json.dumps(space_json(X), sort_keys=True))
    return 0


def _cmd_explore(args) -> int:
    results = []
    for X in enumerate_spaces(args.points, t0_only=True):
        for z in args.targets.split(","):
            res = search_reflection(X, target_space(z), args.seed)
            results.append({"space": space_json(X), "Z": z, **res})
    print(json.dumps(results, indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperconv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    laws = sub.add_parser("laws", help="check the law registry")
    laws.add_argument("--only", action="append", help="comma separated law ids")
    laws.add_argument("--max-points", type=int, default=4)
    laws.add_argument("--depth", type=int, default=8, help="transfer truncation depth")
    laws.add_argument("--report", choices=("text", "json"), default="text")
    laws.add_argument("--seed", type=int, default=0)
    laws.add_argument("--random-posets", type=int, default=2)
    laws.add_argument("--exclude", action="append", type=_exclusion, default=[],
                      metavar="ID=REASON", help="exclude a law from scope, with a reason")
    laws.add_argument("--workers", type=int, default=1)
    laws.add_argument("--timing", action="store_true", help="add wall times to the JSON output")
    laws.add_argument("--output", help="also write the JSON report here")
    laws.set_defaults(func=_cmd_laws)

    inv = sub.add_parser("invariants", help="print invariants of a space given as JSON")
    inv.add_argument("space_file")
    inv.add_argument("--alpha", choices=("p", "k", "kappa", "s"))
    inv.set_defaults(func=_cmd_invariants)

    en = sub.add_parser("enumerate", help="list labeled topologies on N points")
    en.add_argument("--points", type=int, required=True)
    en.add_argument("--t0", action="store_true")
    en.add_argument("--count", action="store_true", help="print only the number of spaces")
    en.set_defaults(func=_cmd_enumerate)

    ex = sub.add_parser("explore", help="search hyperconvergences whose lift is T[X,Z]")
    ex.add_argument("--points", type=int, default=2)
    ex.add_argument("--targets", default=",".join(TARGETS))
    ex.add_argument("--seed", type=int, default=0)
    ex.set_defaults(func=_cmd_explore)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HyperconvError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
