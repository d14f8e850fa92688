"""
Numeric evaluators for the analytic inequalities behind the product theorem
"""

import logging
import math
from typing import Optional, Sequence, Tuple

from ..core.exceptions import GuardViolation, ParameterError
from ..settings import get_settings
from .models import Lemma32Check, Lemma34Check

logger = logging.getLogger(__name__)


def _require_positive(**values: float) -> None:
    bad = {name: v for name, v in values.items() if not v > 0}
    if bad:
        raise ParameterError(f"logarithm of a nonpositive argument: {bad}")


def eval_f_lemma32(t: float, n: float, k1: float, k2: float) -> float:
    """f(t) = t (ln k1^2 + ln t - ln n) - ln(k1 k2) + 2 ln n"""
    _require_positive(t=t, n=n, k1=k1, k2=k2)
    if n <= 1:
        raise ParameterError(f"need n > 1 (got n={n})")
    return t * (2 * math.log(k1) + math.log(t) - math.log(n)) - math.log(k1 * k2) + 2 * math.log(n)


def f_derivative_lemma32(t: float, n: float, k1: float) -> float:
    """f'(t) = ln k1^2 + ln t - ln n + 1"""
    _require_positive(t=t, n=n, k1=k1)
    return 2 * math.log(k1) + math.log(t) - math.log(n) + 1


def lemma32_decreasing_region(t: float, n: float, k1: float) -> bool:
    """True where f'(t) < 0, i.e. n > e k1^2 t"""
    _require_positive(t=t, n=n, k1=k1)
    return n > math.e * k1 * k1 * t


def check_lemma32(t: float, n: float, k1: float, k2: float) -> Lemma32Check:
    return Lemma32Check(
        t=t,
        n=n,
        k1=k1,
        k2=k2,
        value=eval_f_lemma32(t, n, k1, k2),
        derivative=f_derivative_lemma32(t, n, k1),
        decreasing_region=lemma32_decreasing_region(t, n, k1),
    )


def lemma34_range(n: int, k1: int, epsilon: float) -> Tuple[float, float]:
    """[n(1 - eps), n - n (8 k1 ln n / n)^(1/k1)] for the sum of uniformities"""
    low = n * (1 - epsilon)
    ratio = 8 * k1 * math.log(n) / n
    high = n - n * ratio ** (1 / k1) if ratio < 1 else -math.inf
    return low, high


def check_lemma34(
    n: int,
    ks: Sequence[int],
    epsilon: Optional[float] = None,
    min_n: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> Lemma34Check:
    """
    Compare (k1 k2 / n^2)^(1/t) against 1 - (1 - sum k_i / n)^k1 / 2 in
    double precision. Sums outside the lemma's range still evaluate but come
    back non-conforming; differences within the tolerance are indeterminate.
    """
    settings = get_settings()
    epsilon = settings.lemma34_epsilon if epsilon is None else epsilon
    min_n = settings.lemma34_min_n if min_n is None else min_n
    tolerance = settings.float_tolerance if tolerance is None else tolerance

    ks = list(ks)
    if len(ks) < 2:
        raise ParameterError(f"need t >= 2 uniformities (got {ks})")
    if any(k < 1 for k in ks):
        raise ParameterError(f"uniformities must be positive: {ks}")
    if any(a < b for a, b in zip(ks, ks[1:])):
        raise ParameterError(f"uniformities must be sorted descending: {ks}")
    if n < min_n:
        raise GuardViolation(f"n={n} is below the large-n guard {min_n}")
    total = sum(ks)
    if total > n:
        raise ParameterError(f"sum of uniformities {total} exceeds n={n}")

    t, k1, k2 = len(ks), ks[0], ks[1]
    lhs = (k1 * k2 / (n * n)) ** (1 / t)
    rhs = 1 - 0.5 * (1 - total / n) ** k1
    if abs(lhs - rhs) <= tolerance:
        verdict = "indeterminate"
    else:
        verdict = "holds" if lhs > rhs else "fails"

    low, high = lemma34_range(n, k1, epsilon)
    conforming = low <= total <= high
    if not conforming:
        logger.info(f"check_lemma34 n={n}: sum k={total} outside [{low:.1f}, {high:.1f}], result is exploratory")
    return Lemma34Check(
        n=n,
        ks=ks,
        lhs=lhs,
        rhs=rhs,
        verdict=verdict,
        sum_k=total,
        range_low=low,
        range_high=high,
        conforming=conforming,
        epsilon=epsilon,
    )
