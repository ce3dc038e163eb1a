"""Character polynomials in the binomial basis.

A character polynomial is a finite rational combination of products
binom(X_1, j_1) * binom(X_2, j_2) * ... indexed by partitions rho in cycle
notation, where X_i counts the i-cycles of a permutation.  The polynomial
attached to a partition family evaluates to the character of every member
of the family at once; its coefficients come from summing character values
over vertical-strip subdiagrams with alternating signs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .characters import char_value, dimension
from .partitions import (
    Partition,
    enumerate_partitions,
    enumerate_partitions_up_to,
    is_vertical_strip,
)

__all__ = [
    "CharacterPolynomial",
    "young_to_charpoly",
    "evaluate",
    "stable_dimension_poly",
    "evaluate_polynomial",
]


class CharacterPolynomial:
    """A finite map from partitions rho to binomial-basis coefficients F_rho."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, Fraction | int] = ()):
        self.terms: dict[Partition, Fraction] = {
            rho: Fraction(c) for rho, c in dict(terms).items() if c != 0
        }

    @property
    def degree(self) -> int:
        """Largest |rho| with a nonzero coefficient (0 for the zero polynomial)."""
        return max((rho.size for rho in self.terms), default=0)

    def coefficient(self, rho: Partition) -> Fraction:
        return self.terms.get(rho, Fraction(0))

    def evaluate(self, cycle_counts: Mapping[int, int]) -> Fraction:
        """Numeric value at the given cycle counts (absent counts are zero)."""
        total = Fraction(0)
        for rho, coeff in self.terms.items():
            prod = 1
            for part, mult in rho.cycle_counts().items():
                prod *= math.comb(int(cycle_counts.get(part, 0)), mult)
                if prod == 0:
                    break
            if prod:
                total += coeff * prod
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        items = ", ".join(f"{rho}: {c}" for rho, c in sorted(self.terms.items()))
        return f"CharacterPolynomial({{{items}}})"


@lru_cache(maxsize=None)
def young_to_charpoly(lam: Partition) -> CharacterPolynomial:
    """The unique character polynomial agreeing with the whole family of lam.

    The coefficient of binom(X, rho) is (-1)^(|lam| - |rho|) times the sum
    of chi^mu_rho over partitions mu of |rho| from which lam is obtained by
    adding at most one box per row.
    """
    k = lam.size
    all_mu = [
        mu
        for m in range(k + 1)
        for mu in enumerate_partitions(m)
        if is_vertical_strip(lam, mu)
    ]
    terms: dict[Partition, int] = {}
    for rho in enumerate_partitions_up_to(k):
        sign = (-1) ** (k - rho.size)
        total = sum(char_value(mu, rho) for mu in all_mu if mu.size == rho.size)
        if total:
            terms[rho] = sign * total
    return CharacterPolynomial(terms)


def evaluate(poly: CharacterPolynomial, cycle_counts: Mapping[int, int]) -> Fraction:
    """Evaluate a character polynomial at explicit cycle counts."""
    return poly.evaluate(cycle_counts)


def _binomial_poly(b: int) -> list[Fraction]:
    """Coefficients of binom(n, b) as an exact polynomial in n, ascending."""
    coeffs = [Fraction(1)]
    for t in range(b):
        coeffs = [Fraction(0)] + coeffs
        for e in range(len(coeffs) - 1):
            coeffs[e] -= t * coeffs[e + 1]
    return [c / math.factorial(b) for c in coeffs]


def evaluate_polynomial(coeffs: tuple[Fraction, ...], n: int) -> Fraction:
    """Horner evaluation of ascending coefficients at an integer point."""
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * n + c
    return total


@lru_cache(maxsize=None)
def stable_dimension_poly(lam: Partition) -> tuple[Fraction, ...]:
    """Dimension of the family member at n as an exact polynomial in n.

    Only the all-ones basis elements survive at the identity (every other
    cycle count is zero there), so this is sum_b F_{1^b} * binom(n, b).
    Ascending coefficients; degree |lam| with leading coefficient
    dim(lam) / |lam|!.
    """
    chi = young_to_charpoly(lam)
    k = lam.size
    out = [Fraction(0)] * (k + 1)
    for b in range(k + 1):
        coeff = chi.coefficient(Partition((1,) * b))
        if coeff == 0:
            continue
        for e, c in enumerate(_binomial_poly(b)):
            out[e] += coeff * c
    assert out[k] == Fraction(dimension(lam), math.factorial(k))
    return tuple(out)
