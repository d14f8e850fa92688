"""
Closed-form thresholds

All bounds that gate a verdict are exact Python integers. Only the regime
predicate for the product theorem needs logarithms.
"""

import math
from typing import Sequence

from .exceptions import ParameterError


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def binomial(n: int, k: int) -> int:
    """C(n, k), 0 when k > n; arbitrary precision"""
    _require(n >= 0 and k >= 0, f"binomial needs nonnegative arguments (got n={n}, k={k})")
    return math.comb(n, k)


def threshold_partite(n: int, r: int, t: int) -> int:
    """(t-1) n^(r-1): each r-partite family must exceed this"""
    _require(n >= 1 and r >= 1 and t >= 1, f"need n, r, t >= 1 (got {n}, {r}, {t})")
    return (t - 1) * n ** (r - 1)


def threshold_erdos(n: int, k: int, t: int) -> int:
    """max{C(kt-1, k), C(n, k) - C(n-t+1, k)}"""
    _require(n >= k >= 1 and t >= 1, f"need n >= k >= 1 and t >= 1 (got n={n}, k={k}, t={t})")
    return max(binomial(k * t - 1, k), threshold_cover(n, k, t))


def threshold_cover(n: int, k: int, t: int) -> int:
    """C(n, k) - C(n-t+1, k): k-sets of [n] meeting a fixed (t-1)-set"""
    _require(n >= k >= 1 and t >= 1, f"need n >= k >= 1 and t >= 1 (got n={n}, k={k}, t={t})")
    return binomial(n, k) - binomial(max(n - t + 1, 0), k)


def threshold_product(n: int, ks: Sequence[int]) -> int:
    """C(n-1, k1-1) C(n-1, k2-1) prod_{i>=3} C(n, k_i) for k1 >= k2 >= ... >= kt"""
    ks = list(ks)
    _require(len(ks) >= 2, f"product threshold needs t >= 2 (got t={len(ks)})")
    _require(all(k >= 1 for k in ks), f"uniformities must be positive: {ks}")
    _require(all(a >= b for a, b in zip(ks, ks[1:])), f"uniformities must be sorted descending: {ks}")
    _require(n >= ks[0], f"need n >= k1 (got n={n}, k1={ks[0]})")
    value = binomial(n - 1, ks[0] - 1) * binomial(n - 1, ks[1] - 1)
    for k in ks[2:]:
        value *= binomial(n, k)
    return value


def threshold_matsumoto_tokushige(n: int, k1: int, k2: int) -> int:
    """Cross-intersecting product bound C(n-1, k1-1) C(n-1, k2-1), valid for n >= 2 max(k1, k2)"""
    _require(k1 >= 1 and k2 >= 1, f"uniformities must be positive (got {k1}, {k2})")
    _require(n >= 2 * max(k1, k2), f"need n >= 2 max(k1, k2) (got n={n})")
    return binomial(n - 1, k1 - 1) * binomial(n - 1, k2 - 1)


def threshold_question16(n: int, k: int, r: int) -> int:
    """(C(n, k) - C(n-r+1, k))^r, the prefix product bound being asked about"""
    return threshold_cover(n, k, r) ** r


def threshold_corollary26(n: int, k: int) -> int:
    """(n-1) n^(k-1): perfect rainbow matchings of n partite families"""
    return threshold_partite(n, k, n)


# ============================================================================
# Regimes in which the theorems are stated
# ============================================================================

def theorem12_regime(n: int, k: int, t: int) -> bool:
    return n >= 3 * (k - 1) * (t - 1)


def theorem14_regime(n: int, k: int, t: int) -> bool:
    return n > 3 * k * k * t


def theorem13_regime(n: int, ks: Sequence[int]) -> bool:
    """sum k_i <= n (1 - (8 k1 ln n / n)^(1/k1)) with k1 the largest uniformity"""
    if n < 2 or not ks:
        return False
    k1 = max(ks)
    ratio = 8 * k1 * math.log(n) / n
    if ratio >= 1:
        return False
    return sum(ks) <= n * (1 - ratio ** (1 / k1))
