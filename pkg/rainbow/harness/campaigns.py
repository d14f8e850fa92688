"""
Verification campaigns

A campaign expands its (n, k, t) grid into cells. Each cell knows what it
expects (matching, no matching, oracle agreement, or plain exploration) and
whether it sits inside the statement's hypothesis. Instance j of a cell is
drawn from the generator seeded with (seed, hash(cell key), j), so any
instance replays on its own, and results are folded in (cell, index) order
whatever the worker count.
"""

import hashlib
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from math import prod, sqrt
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .. import __version__
from ..constructive import (
    bipartite_greedy,
    indicator_sums,
    expected_indicator_sum,
    partite_recursive,
    random_permutation_certify,
    verify_greedy_trace,
    verify_recursion_trace,
)
from ..core.exceptions import GuardViolation, HypothesisViolated, ParameterError
from ..core.hypergraph import Family
from ..core.thresholds import (
    binomial,
    theorem12_regime,
    theorem13_regime,
    theorem14_regime,
    threshold_corollary26,
    threshold_cover,
    threshold_partite,
    threshold_question16,
)
from ..core.validation import validate_rainbow
from ..generators import (
    add_random_edge,
    gen_clique,
    gen_complete_partite,
    gen_cover,
    gen_partite_threshold,
    gen_random_family,
    gen_theorem13_tight,
)
from ..settings import get_settings
from ..solver import SolverConfig, Verdict, brute_force_rainbow, find_rainbow
from .models import CampaignReport, CampaignSpec, CellPlan, CellReport, InstanceResult
from .reporting import environment

logger = logging.getLogger(__name__)

# Product cap for random oracle instances
ORACLE_PRODUCT_CAP = 10**5
QUESTION16_MAX_ATTEMPTS = 10_000


# ============================================================================
# Seeds
# ============================================================================

def cell_entropy(key: str) -> int:
    return int.from_bytes(hashlib.sha256(key.encode("utf-8")).digest()[:8], "big")


def instance_rng(seed: int, key: str, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, cell_entropy(key), index]))


# ============================================================================
# Cell planning
# ============================================================================

def _key(target: str, variant: str, n: int, k: int, t: int) -> str:
    return f"{target}/{variant}/n={n},k={k},t={t}"


def _plan(spec: CampaignSpec, variant: str, n: int, k: int, t: int, **fields) -> CellPlan:
    fields.setdefault("instances", spec.trials)
    return CellPlan(key=_key(spec.target, variant, n, k, t), target=spec.target, variant=variant, n=n, k=k, t=t, **fields)


def _skipped(spec: CampaignSpec, variant: str, n: int, k: int, t: int, reason: str) -> CellPlan:
    return _plan(spec, variant, n, k, t, expectation="explore", conforming=False, instances=0, skip_reason=reason)


def _plan_theorem12(spec: CampaignSpec, n: int, k: int, t: int) -> List[CellPlan]:
    if k < 2:
        return [_skipped(spec, "random", n, k, t, "needs k >= 2 parts")]
    size = threshold_partite(n, k, t) + 1
    if size > n**k:
        return [_skipped(spec, "random", n, k, t, f"size {size} exceeds n^k={n**k}")]
    return [_plan(spec, "random", n, k, t, sizes=[size] * t, expectation="matching", conforming=theorem12_regime(n, k, t))]


def _plan_lemma21(spec: CampaignSpec, n: int, k: int, t: int) -> List[CellPlan]:
    # k is the number of parts the bipartite members choose from
    parts = max(k, 2)
    size = threshold_partite(n, 2, t) + 1
    if size > n * n:
        return [_skipped(spec, "random", n, parts, t, f"size {size} exceeds n^2={n * n}")]
    return [_plan(spec, "random", n, parts, t, sizes=[size] * t, expectation="matching", conforming=n > t)]


def _plan_theorem13(spec: CampaignSpec, n: int, k: int, t: int) -> List[CellPlan]:
    if t < 2:
        return [_skipped(spec, "tight", n, k, t, "needs t >= 2")]
    if k > n:
        return [_skipped(spec, "tight", n, k, t, "needs k <= n")]
    tight = [binomial(n - 1, k - 1)] * 2 + [binomial(n, k)] * (t - 2)
    plans = [_plan(spec, "tight", n, k, t, sizes=tight, expectation="no-matching", conforming=True, instances=1)]
    above = [tight[0] + 1] + tight[1:]
    if above[0] > binomial(n, k):
        plans.append(_skipped(spec, "above", n, k, t, "star is already complete"))
    else:
        plans.append(_plan(spec, "above", n, k, t, sizes=above, expectation="matching", conforming=theorem13_regime(n, [k] * t)))
    return plans


def _plan_theorem14(spec: CampaignSpec, n: int, k: int, t: int) -> List[CellPlan]:
    if k > n:
        return [_skipped(spec, "above", n, k, t, "needs k <= n")]
    plans = []
    size = threshold_cover(n, k, t) + 1
    if size > binomial(n, k):
        plans.append(_skipped(spec, "above", n, k, t, f"size {size} exceeds C(n,k)={binomial(n, k)}"))
    else:
        plans.append(_plan(spec, "above", n, k, t, sizes=[size] * t, expectation="matching", conforming=theorem14_regime(n, k, t)))
    if t - 1 <= n:
        plans.append(_plan(
            spec, "tight-cover", n, k, t, sizes=[threshold_cover(n, k, t)] * t,
            expectation="no-matching", conforming=True, instances=1,
        ))
    if k * t - 1 <= n:
        plans.append(_plan(
            spec, "tight-clique", n, k, t, sizes=[binomial(k * t - 1, k)] * t,
            expectation="no-matching", conforming=True, instances=1,
        ))
    return plans


def _plan_prop23(spec: CampaignSpec, n: int, k: int, t: int) -> List[CellPlan]:
    if t > n:
        return [_skipped(spec, "random", n, k, t, f"t={t} exceeds the {n} families")]
    size = n**k if spec.full_families else threshold_partite(n, k, t) + 1
    if size > n**k:
        return [_skipped(spec, "random", n, k, t, f"size {size} exceeds n^k={n**k}")]
    return [_plan(spec, "random", n, k, t, sizes=[size] * n, expectation="matching", conforming=True)]


def _plan_corollary26(spec: CampaignSpec, n: int, k: int, t: int) -> List[CellPlan]:
    # Perfect rainbow matchings: t is always n
    size = threshold_corollary26(n, k) + 1
    return [_plan(spec, "random", n, k, n, sizes=[size] * n, expectation="matching", conforming=True)]


def _plan_question16(spec: CampaignSpec, n: int, k: int, t: int) -> List[CellPlan]:
    if k > n:
        return [_skipped(spec, "random", n, k, t, "needs k <= n")]
    return [_plan(spec, "random", n, k, t, expectation="explore", conforming=False)]


def _plan_oracle(spec: CampaignSpec, n: int, k: int, t: int) -> List[CellPlan]:
    if k > n:
        return [_skipped(spec, "random", n, k, t, "needs k <= n")]
    return [_plan(spec, "random", n, k, t, expectation="agree", conforming=True)]


def _plan_partite_tight(spec: CampaignSpec, n: int, k: int, t: int) -> List[CellPlan]:
    if t - 1 > n:
        return [_skipped(spec, "tight", n, k, t, f"fixed set of {t - 1} does not fit a part of {n}")]
    size = threshold_partite(n, k, t)
    plans = [_plan(spec, "tight", n, k, t, sizes=[size] * t, expectation="no-matching", conforming=True, instances=1)]
    if n < t:
        plans.append(_skipped(spec, "plus-one", n, k, t, "no legal edge outside the fixed set"))
    else:
        plans.append(_plan(
            spec, "plus-one", n, k, t, sizes=[size + 1] * t,
            expectation="matching", conforming=theorem12_regime(n, k, t),
        ))
    return plans


_PLANNERS: Dict[str, Callable[[CampaignSpec, int, int, int], List[CellPlan]]] = {
    "theorem12": _plan_theorem12,
    "lemma21": _plan_lemma21,
    "theorem13": _plan_theorem13,
    "theorem14": _plan_theorem14,
    "prop23": _plan_prop23,
    "corollary26": _plan_corollary26,
    "question16-explore": _plan_question16,
    "oracle": _plan_oracle,
    "partite-tight": _plan_partite_tight,
}


def _check_guards(spec: CampaignSpec) -> None:
    settings = get_settings()
    if spec.target == "corollary26":
        limits = {"n": settings.corollary26_max_n, "k": settings.corollary26_max_k}
    else:
        limits = {"n": settings.campaign_max_n, "k": settings.campaign_max_k, "t": settings.campaign_max_t}
    for name, limit in limits.items():
        values = getattr(spec, name)
        if max(values) > limit:
            raise GuardViolation(f"{spec.target}: {name} values {values} exceed the guard {name} <= {limit}")


def plan_cells(spec: CampaignSpec) -> List[CellPlan]:
    """Every cell of the grid, with infeasible and below-hypothesis cells marked skipped"""
    _check_guards(spec)
    planner = _PLANNERS[spec.target]
    plans: Dict[str, CellPlan] = {}
    for n in spec.n:
        for k in spec.k:
            for t in spec.t:
                for plan in planner(spec, n, k, t):
                    if plan.key in plans:
                        continue
                    if plan.skip_reason is None and not plan.conforming and plan.expectation != "explore":
                        if not spec.include_below_hypothesis:
                            plan = plan.model_copy(update={"skip_reason": "below hypothesis"})
                    plans[plan.key] = plan
    return list(plans.values())


# ============================================================================
# Instances
# ============================================================================

def _oracle_sizes(n: int, k: int, t: int, rng: np.random.Generator) -> List[int]:
    total = binomial(n, k)
    sizes = [int(s) for s in rng.integers(0, total + 1, size=t)]
    while prod(sizes) > ORACLE_PRODUCT_CAP:
        largest = sizes.index(max(sizes))
        sizes[largest] //= 2
    return sizes


def _question16_sizes(n: int, k: int, t: int, rng: np.random.Generator) -> List[int]:
    """Descending sizes with prod_{i<=r} |R_i| > (C(n,k) - C(n-r+1,k))^r for every r"""
    total = binomial(n, k)
    for _ in range(QUESTION16_MAX_ATTEMPTS):
        sizes = sorted((int(s) for s in rng.integers(1, total + 1, size=t)), reverse=True)
        product = 1
        for r, size in enumerate(sizes, start=1):
            product *= size
            if product <= threshold_question16(n, k, r):
                break
        else:
            return sizes
    raise ParameterError(f"no size vector met the prefix conditions in {QUESTION16_MAX_ATTEMPTS} draws (n={n}, k={k}, t={t})")


def build_instance(plan: CellPlan, rng: np.random.Generator) -> Family:
    """The family for one instance of a cell, drawn from rng"""
    n, k, t = plan.n, plan.k, plan.t
    target, variant = plan.target, plan.variant

    if target in ("theorem12", "corollary26"):
        return gen_random_family(n, [k] * t, plan.sizes, partite=True, seed=rng)
    if target == "lemma21":
        parts = [tuple(sorted(int(p) for p in rng.choice(np.arange(1, k + 1), size=2, replace=False))) for _ in range(t)]
        return gen_random_family(n, [2] * t, plan.sizes, partite=True, seed=rng, parts=parts, part_count=k)
    if target == "theorem13":
        if variant == "tight":
            return gen_theorem13_tight(n, [k] * t)
        return gen_random_family(n, [k] * t, plan.sizes, seed=rng)
    if target == "theorem14":
        if variant == "tight-cover":
            return Family([gen_cover(n, k, t)] * t)
        if variant == "tight-clique":
            return Family([gen_clique(n, k, t)] * t)
        return gen_random_family(n, [k] * t, plan.sizes, seed=rng)
    if target == "prop23":
        if plan.sizes[0] == n**k:
            return Family([gen_complete_partite(n, k)] * n)
        return gen_random_family(n, [k] * n, plan.sizes, partite=True, seed=rng)
    if target == "question16-explore":
        return gen_random_family(n, [k] * t, _question16_sizes(n, k, t, rng), seed=rng)
    if target == "oracle":
        return gen_random_family(n, [k] * t, _oracle_sizes(n, k, t, rng), seed=rng)
    if target == "partite-tight":
        H = gen_partite_threshold(n, k, t)
        if variant == "tight":
            return Family([H] * t)
        return Family([add_random_edge(H, rng) for _ in range(t)])
    raise ParameterError(f"unknown campaign target {target}")


def _check_expectation(plan: CellPlan, verdict: str) -> Optional[str]:
    if plan.expectation == "matching" and verdict == "no-matching":
        return "refuted: no rainbow matching above the bound"
    if plan.expectation == "no-matching" and verdict == "matching":
        return "tight construction admits a rainbow matching"
    return None


def _cross_check_constructive(plan: CellPlan, F: Family, solver_verdict: str) -> Tuple[Optional[str], bool]:
    """(failure, hypothesis_violation) from running the matching constructive algorithm"""
    try:
        if plan.target == "lemma21":
            matching, greedy = bipartite_greedy(F, check_hypothesis=False)
            problems = verify_greedy_trace(F, greedy)
        else:
            matching, trace = partite_recursive(F, check_hypothesis=False)
            problems = verify_recursion_trace(F, trace)
    except HypothesisViolated as e:
        return (f"constructive algorithm stuck: {e}" if plan.conforming else None), True
    if problems:
        return f"trace unsound: {problems[0]}", False
    if not validate_rainbow(F, matching):
        return "constructive witness invalid", False
    if solver_verdict == "no-matching":
        return "constructive matching but the solver refutes", False
    return None, False


def run_instance(plan: CellPlan, index: int, seed: int, node_budget: Optional[int] = None) -> InstanceResult:
    """Build and run instance `index` of a cell"""
    started = time.perf_counter()
    rng = instance_rng(seed, plan.key, index)
    F = build_instance(plan, rng)
    cfg = SolverConfig(node_budget=node_budget, seed=seed)
    failure: Optional[str] = None
    violated = False
    witness = None
    nodes = 0

    if plan.target == "prop23":
        certified = random_permutation_certify(F, plan.t, seed=int(rng.integers(0, 2**63 - 1)))
        verdict = "matching" if certified.found else "budget-exceeded"
        if certified.found:
            witness = certified.matching.to_dict()
            if not validate_rainbow(F.subfamily(certified.indices), certified.matching):
                failure = "sampler witness invalid"
    else:
        outcome = find_rainbow(F, cfg)
        verdict, nodes = outcome.verdict.value, outcome.nodes
        if outcome.matching is not None:
            witness = outcome.matching.to_dict()
            if not validate_rainbow(F, outcome.matching):
                failure = "solver witness invalid"
        if failure is None and plan.target == "oracle" and outcome.verdict is not Verdict.BUDGET_EXCEEDED:
            brute = brute_force_rainbow(F)
            if (brute is not None) != outcome.found:
                failure = f"oracle disagreement: solver {verdict}, brute force {'matching' if brute else 'no-matching'}"
            elif brute is not None and not validate_rainbow(F, brute):
                failure = "oracle witness invalid"
        if failure is None and plan.target in ("theorem12", "lemma21") and outcome.verdict is not Verdict.BUDGET_EXCEEDED:
            failure, violated = _cross_check_constructive(plan, F, verdict)

    if failure is None and verdict != "budget-exceeded":
        failure = _check_expectation(plan, verdict)

    keep = failure is not None or (plan.expectation == "explore" and verdict == "no-matching")
    return InstanceResult(
        index=index,
        verdict=verdict,
        failure=failure,
        hypothesis_violation=violated,
        family=F.to_dict() if keep else None,
        witness=witness,
        millis=(time.perf_counter() - started) * 1000,
        nodes=nodes,
    )


def _run_task(task: Tuple[CellPlan, int, int, Optional[int]]) -> InstanceResult:
    plan, index, seed, node_budget = task
    return run_instance(plan, index, seed, node_budget)


# ============================================================================
# Campaign driver
# ============================================================================

def _prop23_stats(plan: CellPlan, spec: CampaignSpec) -> Dict[str, float]:
    F = build_instance(plan, instance_rng(spec.seed, plan.key, 0))
    sums = indicator_sums(F, spec.samples, seed=cell_entropy(plan.key) ^ spec.seed)
    mean = float(sums.mean())
    stderr = float(sums.std(ddof=1) / sqrt(len(sums))) if len(sums) > 1 else 0.0
    predicted = expected_indicator_sum(F)
    within = abs(mean - predicted) <= 3 * stderr if stderr > 0 else mean == predicted
    return {
        "indicator_mean": mean,
        "indicator_stderr": stderr,
        "predicted_mean": predicted,
        "within_3se": float(within),
        "samples": float(len(sums)),
    }


def _fold(plan: CellPlan, spec: CampaignSpec, results: List[InstanceResult]) -> CellReport:
    report = CellReport(
        key=plan.key,
        target=plan.target,
        variant=plan.variant,
        n=plan.n,
        k=plan.k,
        t=plan.t,
        sizes=plan.sizes,
        expectation=plan.expectation,
        conforming=plan.conforming,
        seed=spec.seed,
        skipped=plan.skip_reason,
    )
    if plan.skip_reason:
        logger.info(f"{plan.key}: skipped ({plan.skip_reason})")
        return report

    for result in results:
        report.instances += 1
        report.millis += result.millis
        if result.verdict == "matching":
            report.positives += 1
        elif result.verdict == "no-matching":
            report.refutations += 1
        else:
            report.budget_exceeded += 1
        if result.hypothesis_violation:
            report.hypothesis_violations += 1
        if result.failure is not None:
            report.failures += 1
            report.failed_indices.append(result.index)
            logger.error(f"{plan.key} instance {result.index} (seed {spec.seed}): {result.failure}")
        if result.family is not None:
            report.counterexamples.append(result)

    if plan.target == "prop23":
        report.stats = _prop23_stats(plan, spec)
        report.stats["success_rate"] = report.positives / report.instances

    logger.info(
        f"{plan.key}: {report.instances} instances, {report.positives} matching, "
        f"{report.refutations} refuted, {report.budget_exceeded} over budget, {report.failures} failures"
    )
    return report


def run_campaign(spec: CampaignSpec, threads: Optional[int] = None) -> CampaignReport:
    """Run every cell of a campaign; results do not depend on `threads`"""
    settings = get_settings()
    node_budget = spec.node_budget or settings.node_budget
    workers = threads or settings.threads or os.cpu_count() or 1

    plans = plan_cells(spec)
    tasks = [
        (plan, index, spec.seed, node_budget)
        for plan in plans
        if plan.skip_reason is None
        for index in range(plan.instances)
    ]
    logger.info(f"campaign {spec.target}: {len(plans)} cells, {len(tasks)} instances, {workers} workers")

    if workers == 1 or len(tasks) < 2:
        results = [_run_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))

    by_cell: Dict[str, List[InstanceResult]] = {plan.key: [] for plan in plans}
    for (plan, _, _, _), result in zip(tasks, results):
        by_cell[plan.key].append(result)

    report = CampaignReport(spec=spec, version=__version__, environment=environment())
    report.cells = [_fold(plan, spec, by_cell[plan.key]) for plan in plans]
    if not report.ok:
        logger.error(f"campaign {spec.target}: {report.conforming_failures} failures on conforming cells")
    return report


def replay_instance(spec: CampaignSpec, cell_key: str, index: int) -> InstanceResult:
    """Re-run one instance of a campaign exactly as the campaign ran it"""
    plans = {plan.key: plan for plan in plan_cells(spec)}
    if cell_key not in plans:
        raise ParameterError(f"campaign has no cell {cell_key}")
    plan = plans[cell_key]
    if not 0 <= index < max(plan.instances, 1):
        raise ParameterError(f"cell {cell_key} has no instance {index}")
    node_budget = spec.node_budget or get_settings().node_budget
    return run_instance(plan, index, spec.seed, node_budget)


# ============================================================================
# Single-cell entry points
# ============================================================================

def check_corollary26(n: int, k: int, trials: int, seed: int = 0, node_budget: Optional[int] = None) -> CellReport:
    """Random perfect-matching instances above (n-1)n^(k-1); every one must admit a matching"""
    spec = CampaignSpec(target="corollary26", n=[n], k=[k], t=[n], trials=trials, seed=seed, node_budget=node_budget)
    return run_campaign(spec, threads=1).cells[0]


def explore_question16(n: int, k: int, t: int, budget: int, seed: int = 0, node_budget: Optional[int] = None) -> CellReport:
    """Sample families meeting every prefix product condition; any refutation is kept verbatim"""
    spec = CampaignSpec(target="question16-explore", n=[n], k=[k], t=[t], trials=budget, seed=seed, node_budget=node_budget)
    return run_campaign(spec, threads=1).cells[0]
