"""Necklace polynomials and the per-class stable generating functions.

For a partition rho with cycle counts j_1, ..., j_r the attached power
series is

    (1 - z) * prod_t binom(M_t(z^-1), j_t) * (z^t - z^2t + z^3t - ...)^j_t

where M_t is the t-th necklace polynomial.  Each factor pairs a Laurent
polynomial of valuation -t*j_t with a power series of valuation t*j_t, so
the product has no negative exponents; truncation bookkeeping in the series
type keeps every reported coefficient exact.

The caches here (necklace binomials, per-factor products, full series) are
plain dicts of immutable values: concurrent readers are safe, and duplicate
computation of a key always inserts an identical value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition
from .series import LaurentSeries, series_mul, series_scale, series_sub

__all__ = [
    "NecklacePolynomial",
    "PhiCache",
    "mobius",
    "necklace",
    "geometric_power_coeff",
    "geometric_power_series",
    "necklace_binomial",
    "phi_infinity",
    "default_phi_cache",
]


def mobius(n: int) -> int:
    """Moebius function by trial-division factorization (n stays small here)."""
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    primes = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            primes += 1
        else:
            d += 1
    if n > 1:
        primes += 1
    return -1 if primes % 2 else 1


@dataclass(frozen=True)
class NecklacePolynomial:
    """M_k(z) = (1/k) * sum over divisors d of k of mobius(k/d) * z^d."""

    k: int
    coeffs: tuple[Fraction, ...]  # ascending, degree k

    def at_inverse(self) -> LaurentSeries:
        """M_k(z^-1) as an exact Laurent polynomial."""
        pairs = {-e: c for e, c in enumerate(self.coeffs) if c != 0}
        return LaurentSeries.from_pairs(pairs)


@lru_cache(maxsize=None)
def necklace(k: int) -> NecklacePolynomial:
    if k < 1:
        raise ValueError("necklace polynomials are indexed by positive integers")
    coeffs = [Fraction(0)] * (k + 1)
    for d in range(1, k + 1):
        if k % d == 0:
            coeffs[d] = Fraction(mobius(k // d), k)
    return NecklacePolynomial(k, tuple(coeffs))


@lru_cache(maxsize=None)
def geometric_power_coeff(j: int, l: int) -> int:
    """Coefficient of z^(l*t) in (z^t - z^2t + ...)^j; independent of t."""
    if j < 1:
        raise ValueError("exponent j must be at least 1")
    if l < j:
        return 0
    return (-1) ** (l - j) * math.comb(l - 1, l - j)


def geometric_power_series(t: int, j: int, max_degree: int) -> LaurentSeries:
    """(z^t - z^2t + ...)^j with every coefficient through z^max_degree exact."""
    pairs = {
        l * t: geometric_power_coeff(j, l) for l in range(j, max_degree // t + 1)
    }
    return LaurentSeries.from_pairs(pairs, truncation=max_degree)


class PhiCache:
    """Memo tables for necklace binomials, per-factor products, and full series.

    Series-valued entries are stored at the widest truncation computed so
    far and restricted on the way out, so callers see results identical to
    a cold computation at their requested degree.
    """

    def __init__(self):
        self._binomials: dict[tuple[int, int], LaurentSeries] = {}
        self._factors: dict[tuple[int, int], LaurentSeries] = {}
        self._phi: dict[Partition, LaurentSeries] = {}

    def clear(self) -> None:
        self._binomials.clear()
        self._factors.clear()
        self._phi.clear()

    def necklace_binomial(self, t: int, j: int) -> LaurentSeries:
        """binom(M_t(z^-1), j) as an exact Laurent polynomial, via the
        recursion binom(M, j) = ((M - j + 1) / j) * binom(M, j - 1)."""
        if t < 1 or j < 0:
            raise ValueError("need t >= 1 and j >= 0")
        if j == 0:
            return LaurentSeries.one()
        cached = self._binomials.get((t, j))
        if cached is None:
            m_inv = necklace(t).at_inverse()
            shifted = series_sub(m_inv, LaurentSeries.monomial(0, j - 1))
            step = series_scale(shifted, Fraction(1, j))
            cached = series_mul(step, self.necklace_binomial(t, j - 1))
            self._binomials[(t, j)] = cached
        return cached

    def _factor(self, t: int, j: int, max_degree: int) -> LaurentSeries:
        """binom(M_t(z^-1), j) * (z^t - z^2t + ...)^j, exact through max_degree.

        The geometric part is computed with a guard band of t*j extra terms
        to offset the binomial part's valuation of -t*j.
        """
        cached = self._factors.get((t, j))
        if cached is None or (
            cached.truncation is not None and cached.truncation < max_degree
        ):
            geo = geometric_power_series(t, j, max_degree + t * j)
            cached = series_mul(self.necklace_binomial(t, j), geo)
            self._factors[(t, j)] = cached
        return cached.restrict(max_degree)

    def phi_infinity(self, rho: Partition, max_degree: int) -> LaurentSeries:
        """The stable generating function of rho, exact through z^max_degree."""
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        cached = self._phi.get(rho)
        if cached is None or (
            cached.truncation is not None and cached.truncation < max_degree
        ):
            acc = LaurentSeries((1, -1))  # 1 - z, exact
            for t, j in rho.cycle_counts().items():
                acc = series_mul(acc, self._factor(t, j, max_degree))
            cached = acc
            self._phi[rho] = cached
        return cached.restrict(max_degree)


_DEFAULT_CACHE = PhiCache()


def default_phi_cache() -> PhiCache:
    return _DEFAULT_CACHE


def necklace_binomial(t: int, j: int, cache: PhiCache | None = None) -> LaurentSeries:
    return (cache or _DEFAULT_CACHE).necklace_binomial(t, j)


def phi_infinity(
    rho: Partition, max_degree: int, cache: PhiCache | None = None
) -> LaurentSeries:
    return (cache or _DEFAULT_CACHE).phi_infinity(rho, max_degree)
