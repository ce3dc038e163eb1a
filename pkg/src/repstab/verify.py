"""Independent cross-checks of the pipeline.

The total dimension of cohomological degree i at n points equals a sum of
symmetric-group index terms over partitions of n with exactly n - i parts
(equivalently, an unsigned Stirling number of the first kind).  Comparing
that against the weighted sum of stable multiplicities times family
dimension polynomials exercises every module at once, through an entirely
different formula than the one that produced the multiplicities.

The identity is only tested at n >= 3i + 1, where stable and unstable
multiplicities agree; below that bound it can legitimately fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .charpoly import evaluate_polynomial, stable_dimension_poly
from .partitions import Partition, centralizer_order, enumerate_partitions, enumerate_partitions_up_to
from .stable import InternalConsistencyError, stable_coefficients

__all__ = [
    "DimensionReport",
    "VerificationResult",
    "dim_hi",
    "stirling1_unsigned",
    "verify_dimension_consistency",
    "verify_all",
]


@dataclass(frozen=True)
class DimensionReport:
    """One dimension-identity check at a given degree i and point count n."""

    i: int
    n: int
    lhs: Fraction
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class VerificationResult:
    reports: tuple[DimensionReport, ...]
    violations: tuple[str, ...]
    observations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations and all(r.passed for r in self.reports)


def dim_hi(i: int, n: int) -> int:
    """Total dimension of degree-i cohomology at n points.

    Sum over partitions mu of n with exactly n - i parts of the group order
    divided by the centralizer order; equals the unsigned Stirling number
    of the first kind |s(n, n - i)|.
    """
    if n < 1 or i < 0 or i > n - 1:
        raise ValueError(f"need 0 <= i <= n - 1 with n >= 1, got i={i}, n={n}")
    total = 0
    n_fact = math.factorial(n)
    for mu in enumerate_partitions(n):
        if mu.length == n - i:
            total += n_fact // centralizer_order(mu)
    return total


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, k: int) -> int:
    """|s(n, k)| by the recurrence |s(n,k)| = |s(n-1,k-1)| + (n-1)|s(n-1,k)|."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    return stirling1_unsigned(n - 1, k - 1) + (n - 1) * stirling1_unsigned(n - 1, k)


def verify_dimension_consistency(i: int, n: int) -> DimensionReport:
    """Check sum over |lam| <= 2i of d_i(lam) * dim(lam at n) == dim_hi(i, n).

    Requires n >= 3i + 1 so that stable multiplicities equal the unstable
    ones (this also gives n >= 2i, the polynomial regime of the dimension
    count).  Families larger than 2i contribute nothing.
    """
    if n < 3 * i + 1:
        raise ValueError(
            f"dimension identity only guaranteed for n >= 3i + 1, got i={i}, n={n}"
        )
    lhs = Fraction(0)
    for lam in enumerate_partitions_up_to(2 * i):
        d = stable_coefficients(lam, i).multiplicities[i]
        if d:
            lhs += d * evaluate_polynomial(stable_dimension_poly(lam), n)
    return DimensionReport(i, n, lhs, dim_hi(i, n))


def verify_all(max_i: int) -> VerificationResult:
    """Dimension reports for i = 0..max_i at n = 3i+1 and 3i+2, plus sweeps.

    Sweeps cover every family with |lam| <= 2*max_i: the two vanishing
    theorems and sign/integrality are violations; non-decreasing behavior
    and vanishing of the trivial family beyond degree 1 hold in all
    computed data but are conjectural, so breaches are only observations.
    """
    if max_i < 0:
        raise ValueError("max_i must be non-negative")
    reports = []
    for i in range(max_i + 1):
        for n in (3 * i + 1, 3 * i + 2):
            reports.append(verify_dimension_consistency(i, n))
    violations: list[str] = []
    observations: list[str] = []
    sweep_degree = 2 * max_i
    for lam in enumerate_partitions_up_to(2 * max_i):
        try:
            d = stable_coefficients(lam, sweep_degree).multiplicities
        except InternalConsistencyError as exc:
            violations.append(f"lam={lam}: {exc}")
            continue
        half = (lam.size + 1) // 2  # i < |lam| / 2  <=>  i <= half - 1
        for i in range(min(half, sweep_degree + 1)):
            if d[i]:
                violations.append(
                    f"lam={lam}: d_{i} = {d[i]} but degrees below |lam|/2 must vanish"
                )
        for i in range(min(lam.length, sweep_degree + 1)):
            if d[i]:
                violations.append(
                    f"lam={lam}: d_{i} = {d[i]} but degrees below the length must vanish"
                )
        if lam.parts:
            for i in range(sweep_degree):
                if d[i] > d[i + 1]:
                    observations.append(
                        f"lam={lam}: d_{i} = {d[i]} > d_{i + 1} = {d[i + 1]} "
                        "(non-decreasing behavior broken)"
                    )
        else:
            for i in range(2, sweep_degree + 1):
                if d[i]:
                    observations.append(
                        f"trivial family: d_{i} = {d[i]} nonzero beyond degree 1"
                    )
    return VerificationResult(tuple(reports), tuple(violations), tuple(observations))
