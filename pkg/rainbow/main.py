"""
Command-line entry point

    python -m rainbow solve --family f.json
    python -m rainbow generate --construction theorem13-tight --n 4 --ks 2,2 --out f.json
    python -m rainbow verify --target lemma21 --n 5..7 --t 2..3 --trials 100 --seed 1
    python -m rainbow search --n 4 --ks 2,2 --budget 500
    python -m rainbow nu --family f.json
    python -m rainbow check-inequality --lemma 3.4 --n 100000 --ks 2x45000

JSON on stdout is the machine contract; logs go to stderr. Exit codes:
0 success, 1 a conforming verification cell failed, 2 usage or input
error, 3 a budget ran out.
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from . import __version__
from .constructive import bipartite_greedy, partite_recursive, random_permutation_certify
from .core import FamilyFormatError, MatchingBudgetExceeded, RainbowError, dump_family, load_family
from .generators import ConstructionSpec, build_construction
from .harness import CampaignSpec, check_lemma32, check_lemma34, run_campaign, write_report
from .settings import get_settings
from .solver import SolverConfig, Verdict, brute_force_rainbow, extremal_search, find_rainbow, matching_number

logger = logging.getLogger("rainbow")

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CommandResult = Tuple[Dict[str, Any], int]


# ============================================================================
# Argument parsing
# ============================================================================

def parse_range(raw: str) -> List[int]:
    """'6..9' (inclusive), '2,3' or a mix such as '2..4,7'"""
    values: List[int] = []
    for part in raw.replace(" ", "").split(","):
        if not part:
            continue
        if ".." in part:
            low, high = part.split("..", 1)
            start, stop = int(low), int(high)
            if start > stop:
                raise argparse.ArgumentTypeError(f"empty range {part}")
            values.extend(range(start, stop + 1))
        else:
            values.append(int(part))
    if not values:
        raise argparse.ArgumentTypeError(f"no values in '{raw}'")
    return values


def parse_int_list(raw: str) -> List[int]:
    """'3,2,2' or repeated values as 'VALUExCOUNT', e.g. '2x40000'"""
    values: List[int] = []
    for part in raw.replace(" ", "").split(","):
        if not part:
            continue
        if "x" in part:
            value, count = part.split("x", 1)
            values.extend([int(value)] * int(count))
        else:
            values.append(int(part))
    if not values:
        raise argparse.ArgumentTypeError(f"no values in '{raw}'")
    return values


def parse_seed(raw: str) -> int:
    seed = int(raw)
    if seed < 0:
        raise argparse.ArgumentTypeError(f"seed must be nonnegative (got {seed})")
    return seed


def _common_flags() -> argparse.ArgumentParser:
    # Accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=parse_seed, default=argparse.SUPPRESS, help="Random seed (default from settings)")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="Worker cap for campaigns")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="Only warnings on stderr")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="Print JSON instead of text")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="rainbow", description="Rainbow matching toolkit", parents=[common])
    parser.add_argument("--version", action="version", version=f"rainbow {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", parents=[common], help="Decide whether a family admits a rainbow matching")
    solve.add_argument("--family", required=True, help="Family JSON file")
    solve.add_argument(
        "--algorithm", default="exact",
        choices=["exact", "brute-force", "greedy", "recursive", "randomized"],
    )
    solve.add_argument("--node-budget", type=int, default=None)
    solve.add_argument(
        "--order", default="smallest-family-first",
        choices=["input-order", "smallest-family-first", "min-degree-vertex"],
    )
    solve.add_argument("--t", type=int, default=None, help="randomized: number of families to certify")
    solve.add_argument("--max-trials", type=int, default=None)
    solve.add_argument("--trace", default=None, help="Write the constructive trace to this file")
    solve.add_argument("--skip-hypothesis-check", action="store_true")

    generate = sub.add_parser("generate", parents=[common], help="Emit a construction or random family")
    generate.add_argument(
        "--construction", required=True,
        choices=["star", "cover", "clique", "partite-threshold", "theorem13-tight", "complete", "random-uniform", "random-partite"],
    )
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--k", type=int, default=None)
    generate.add_argument("--ks", type=parse_int_list, default=None)
    generate.add_argument("--t", type=int, default=None)
    generate.add_argument("--center", type=int, default=1)
    generate.add_argument("--part", type=int, default=1)
    generate.add_argument("--fixed", type=parse_int_list, default=None)
    generate.add_argument("--sizes", type=parse_int_list, default=None)
    generate.add_argument("--partite", action="store_true", help="complete: balanced k-partite instead of C([n], k)")
    generate.add_argument("--out", default=None, help="Output file (default: stdout)")

    verify = sub.add_parser("verify", parents=[common], help="Run a verification campaign")
    verify.add_argument(
        "--target", required=True,
        choices=["theorem12", "lemma21", "theorem13", "theorem14", "prop23", "corollary26", "question16-explore", "oracle", "partite-tight"],
    )
    verify.add_argument("--n", type=parse_range, required=True)
    verify.add_argument("--k", type=parse_range, default=[2])
    verify.add_argument("--t", type=parse_range, default=[2])
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--node-budget", type=int, default=None)
    verify.add_argument("--include-below-hypothesis", action="store_true")
    verify.add_argument("--full-families", action="store_true")
    verify.add_argument("--samples", type=int, default=10_000)
    verify.add_argument("--report", default=None, help="Append JSON-lines records to this file")

    search = sub.add_parser("search", parents=[common], help="Local search for large families without a rainbow matching")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--ks", type=parse_int_list, required=True)
    search.add_argument("--t", type=int, default=None)
    search.add_argument("--budget", type=int, default=2000)
    search.add_argument("--node-budget", type=int, default=None)
    search.add_argument("--out", default=None, help="Write the best family to this file")

    nu = sub.add_parser("nu", parents=[common], help="Matching numbers of family members")
    nu.add_argument("--family", required=True)
    nu.add_argument("--member", type=int, default=None, help="1-based member index (default: all)")
    nu.add_argument("--node-budget", type=int, default=None)

    check = sub.add_parser("check-inequality", parents=[common], help="Evaluate the analytic inequalities")
    check.add_argument("--lemma", required=True, choices=["3.2", "3.4"])
    check.add_argument("--n", type=float, required=True)
    check.add_argument("--ks", type=parse_int_list, default=None, help="3.4: uniformities, descending")
    check.add_argument("--t", type=float, default=None, help="3.2: the variable t")
    check.add_argument("--k1", type=float, default=None)
    check.add_argument("--k2", type=float, default=None)
    return parser


# ============================================================================
# Commands
# ============================================================================

def _write_json(path: str, data: Any) -> None:
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    logger.info(f"Wrote {path}")


def cmd_solve(args: argparse.Namespace) -> CommandResult:
    F = load_family(args.family)
    started = time.perf_counter()

    if args.algorithm == "exact":
        cfg = SolverConfig(node_budget=args.node_budget, order_heuristic=args.order, seed=args.seed)
        outcome = find_rainbow(F, cfg)
        payload = outcome.to_dict()
        code = EXIT_BUDGET if outcome.verdict is Verdict.BUDGET_EXCEEDED else EXIT_OK
        return payload, code

    if args.algorithm == "brute-force":
        matching = brute_force_rainbow(F)
        payload = {"verdict": "matching" if matching else "no-matching", "witness": matching.to_dict() if matching else None}
    elif args.algorithm in ("greedy", "recursive"):
        run = bipartite_greedy if args.algorithm == "greedy" else partite_recursive
        matching, trace = run(F, check_hypothesis=not args.skip_hypothesis_check)
        payload = {"verdict": "matching", "witness": matching.to_dict()}
        if args.trace:
            _write_json(args.trace, trace.model_dump(mode="json"))
    else:
        if args.t is None:
            raise argparse.ArgumentTypeError("--algorithm randomized needs --t")
        certified = random_permutation_certify(F, args.t, max_trials=args.max_trials, seed=args.seed)
        payload = certified.to_dict()
        payload["timing"] = {"millis": round((time.perf_counter() - started) * 1000, 3)}
        return payload, EXIT_OK if certified.found else EXIT_BUDGET

    payload["timing"] = {"millis": round((time.perf_counter() - started) * 1000, 3)}
    return payload, EXIT_OK


def cmd_generate(args: argparse.Namespace) -> CommandResult:
    spec = ConstructionSpec(
        kind=args.construction,
        n=args.n,
        k=args.k,
        ks=args.ks,
        t=args.t,
        center=args.center,
        part=args.part,
        fixed=args.fixed,
        sizes=args.sizes,
        partite_complete=args.partite,
        seed=args.seed,
    )
    F = build_construction(spec)
    payload: Dict[str, Any] = {
        "construction": spec.model_dump(mode="json"),
        "sizes": F.sizes,
        "product": F.size_product(),
    }
    if args.out:
        dump_family(F, args.out)
        payload["out"] = args.out
    else:
        payload["family"] = F.to_dict()
    return payload, EXIT_OK


def cmd_verify(args: argparse.Namespace) -> CommandResult:
    spec = CampaignSpec(
        target=args.target,
        n=args.n,
        k=args.k,
        t=args.t,
        trials=args.trials,
        seed=args.seed,
        node_budget=args.node_budget,
        include_below_hypothesis=args.include_below_hypothesis,
        full_families=args.full_families,
        samples=args.samples,
    )
    started = time.perf_counter()
    report = run_campaign(spec, threads=args.threads)
    if args.report:
        write_report(report, args.report)

    cells = []
    for cell in report.cells:
        summary = cell.model_dump(mode="json", exclude={"counterexamples", "millis"})
        summary["counterexamples"] = len(cell.counterexamples)
        cells.append(summary)
    payload = {
        "target": spec.target,
        "ok": report.ok,
        "conforming_failures": report.conforming_failures,
        "budget_exceeded": report.budget_exceeded,
        "cells": cells,
        "report": args.report,
        "timing": {"millis": round((time.perf_counter() - started) * 1000, 3)},
    }
    if not report.ok:
        return payload, EXIT_REFUTED
    return payload, EXIT_BUDGET if report.budget_exceeded else EXIT_OK


def cmd_search(args: argparse.Namespace) -> CommandResult:
    started = time.perf_counter()
    cfg = SolverConfig(node_budget=args.node_budget, seed=args.seed)
    result = extremal_search(args.n, args.ks, t=args.t, budget=args.budget, seed=args.seed, cfg=cfg)
    if args.out:
        dump_family(result.family, args.out)
    payload = result.to_dict()
    payload["timing"] = {"millis": round((time.perf_counter() - started) * 1000, 3)}
    return payload, EXIT_BUDGET if result.budget_exhausted else EXIT_OK


def cmd_nu(args: argparse.Namespace) -> CommandResult:
    F = load_family(args.family)
    if args.member is not None and not 1 <= args.member <= F.t:
        raise FamilyFormatError(f"no member {args.member} in a family of {F.t}")
    indices = [args.member] if args.member is not None else list(range(1, F.t + 1))
    cfg = SolverConfig(node_budget=args.node_budget, seed=args.seed)
    started = time.perf_counter()
    values = []
    code = EXIT_OK
    for i in indices:
        try:
            values.append({"family": i, "nu": matching_number(F[i - 1], cfg)})
        except MatchingBudgetExceeded as e:
            values.append({"family": i, "nu": None, "lower": e.lower, "upper": e.upper})
            code = EXIT_BUDGET
    payload = {"members": values, "timing": {"millis": round((time.perf_counter() - started) * 1000, 3)}}
    return payload, code


def cmd_check_inequality(args: argparse.Namespace) -> CommandResult:
    if args.lemma == "3.2":
        if args.t is None or args.k1 is None or args.k2 is None:
            raise argparse.ArgumentTypeError("--lemma 3.2 needs --t, --k1 and --k2")
        return check_lemma32(args.t, args.n, args.k1, args.k2).model_dump(mode="json"), EXIT_OK
    if args.ks is None:
        raise argparse.ArgumentTypeError("--lemma 3.4 needs --ks")
    check = check_lemma34(int(args.n), args.ks)
    payload = check.model_dump(mode="json")
    payload["exploratory"] = check.exploratory
    # A long ks list is noise in the output
    if len(payload["ks"]) > 16:
        payload["ks"] = {"t": len(check.ks), "k1": check.ks[0], "k2": check.ks[1], "sum": check.sum_k}
    return payload, EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "solve": cmd_solve,
    "generate": cmd_generate,
    "verify": cmd_verify,
    "search": cmd_search,
    "nu": cmd_nu,
    "check-inequality": cmd_check_inequality,
}


# ============================================================================
# Output
# ============================================================================

def _render_text(payload: Dict[str, Any], indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(_render_text(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(line for line in lines if line is not None)


def _configure_logging(quiet: bool) -> None:
    level = logging.WARNING if quiet else getattr(logging, get_settings().log_level.upper(), logging.INFO)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"rainbow: invalid RAINBOW_* settings: {e}", file=sys.stderr)
        return EXIT_USAGE
    args.seed = getattr(args, "seed", settings.seed)
    args.threads = getattr(args, "threads", settings.threads)
    quiet = getattr(args, "quiet", False)
    as_json = getattr(args, "json", False)
    _configure_logging(quiet)

    try:
        payload, code = COMMANDS[args.command](args)
    except (RainbowError, ValidationError, argparse.ArgumentTypeError) as e:
        if isinstance(e, MatchingBudgetExceeded):
            logger.error(str(e))
            return EXIT_BUDGET
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE

    payload = {"command": args.command, "seed": args.seed, "version": __version__, **payload}
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(_render_text(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
