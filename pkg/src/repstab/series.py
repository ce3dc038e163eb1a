"""Exact rational and truncated Laurent-series arithmetic.

Coefficients are :class:`fractions.Fraction` values; the stdlib keeps them
in lowest terms with a positive denominator after every operation.  A
:class:`LaurentSeries` carries an explicit truncation degree: the highest
exponent whose coefficient is meaningful.  Reading a coefficient past it
raises :class:`TruncationError` instead of returning a silent zero, and
arithmetic propagates truncations pessimistically, so correctness of
truncated products does not rely on caller discipline.

Exact Laurent polynomials (everything beyond the stored span is exactly
zero) carry ``truncation=None``.

All values are immutable after construction and safe to share between
threads; every operation is a pure function.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "Rational",
    "TruncationError",
    "LaurentSeries",
    "rat_add",
    "rat_mul",
    "rat_neg",
    "rat_div",
    "series_add",
    "series_sub",
    "series_neg",
    "series_mul",
    "series_scale",
]

#: Exact arbitrary-precision rational number, always in lowest terms.
Rational = Fraction


class TruncationError(Exception):
    """A coefficient beyond a series' truncation degree was requested."""


def rat_add(a: Fraction | int, b: Fraction | int) -> Fraction:
    """Exact sum in lowest terms."""
    return Fraction(a) + Fraction(b)


def rat_mul(a: Fraction | int, b: Fraction | int) -> Fraction:
    """Exact product in lowest terms."""
    return Fraction(a) * Fraction(b)


def rat_neg(a: Fraction | int) -> Fraction:
    """Exact negation."""
    return -Fraction(a)


def rat_div(a: Fraction | int, b: Fraction | int) -> Fraction:
    """Exact quotient in lowest terms; raises ZeroDivisionError for b == 0."""
    return Fraction(a) / Fraction(b)


_INF = float("inf")


def _as_bound(truncation: int | None) -> float | int:
    return _INF if truncation is None else truncation


def _as_truncation(bound: float | int) -> int | None:
    return None if bound == _INF else int(bound)


class LaurentSeries:
    """A truncated formal Laurent series with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``z**(min_degree + i)``.  Exponents
    below ``min_degree`` or between the stored span and ``truncation`` are
    exactly zero; exponents above ``truncation`` are unknown.  Leading and
    trailing zero coefficients are trimmed at construction, so
    ``min_degree`` is the valuation of every nonzero series.
    """

    __slots__ = ("min_degree", "coeffs", "truncation")

    def __init__(
        self,
        coeffs: Iterable[Fraction | int] = (),
        min_degree: int = 0,
        truncation: int | None = None,
    ):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[0] == 0:
            del cs[0]
            min_degree += 1
        while cs and cs[-1] == 0:
            del cs[-1]
        if not cs:
            min_degree = 0
        elif truncation is not None and min_degree + len(cs) - 1 > truncation:
            raise ValueError("stored coefficients extend past the truncation degree")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.min_degree = min_degree
        self.truncation = truncation

    @classmethod
    def zero(cls, truncation: int | None = None) -> "LaurentSeries":
        return cls((), 0, truncation)

    @classmethod
    def one(cls) -> "LaurentSeries":
        return cls((1,), 0, None)

    @classmethod
    def monomial(
        cls, exponent: int, coeff: Fraction | int = 1, truncation: int | None = None
    ) -> "LaurentSeries":
        return cls((coeff,), exponent, truncation)

    @classmethod
    def from_pairs(
        cls, pairs: Mapping[int, Fraction | int], truncation: int | None = None
    ) -> "LaurentSeries":
        if not pairs:
            return cls.zero(truncation)
        lo = min(pairs)
        hi = max(pairs)
        cs = [pairs.get(e, 0) for e in range(lo, hi + 1)]
        return cls(cs, lo, truncation)

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient; None for the zero series."""
        return self.min_degree if self.coeffs else None

    @property
    def top_degree(self) -> int:
        """Highest stored exponent (min_degree - 1 for the zero series)."""
        return self.min_degree + len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> Fraction:
        """The coefficient of z**exponent; errors above the truncation degree."""
        if self.truncation is not None and exponent > self.truncation:
            raise TruncationError(
                f"coefficient of z^{exponent} requested, but series is only "
                f"valid through z^{self.truncation}"
            )
        i = exponent - self.min_degree
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def coefficients(self, lo: int, hi: int) -> list[Fraction]:
        """Coefficients of z**lo .. z**hi inclusive."""
        return [self.coefficient(e) for e in range(lo, hi + 1)]

    def restrict(self, truncation: int) -> "LaurentSeries":
        """Forget everything above ``truncation`` (must not extend validity)."""
        if self.truncation is not None and truncation > self.truncation:
            raise TruncationError(
                f"cannot restrict to z^{truncation}: series only valid "
                f"through z^{self.truncation}"
            )
        kept = self.coeffs[: max(0, truncation - self.min_degree + 1)]
        return LaurentSeries(kept, self.min_degree, truncation)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.min_degree == other.min_degree
            and self.coeffs == other.coeffs
            and self.truncation == other.truncation
        )

    def __hash__(self) -> int:
        return hash((self.min_degree, self.coeffs, self.truncation))

    def __repr__(self) -> str:
        return (
            f"LaurentSeries({list(self.coeffs)!r}, min_degree={self.min_degree}, "
            f"truncation={self.truncation})"
        )

    def __str__(self) -> str:
        if self.is_zero():
            body = "0"
        else:
            terms = []
            for i, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                e = self.min_degree + i
                if e == 0:
                    terms.append(str(c))
                elif c == 1:
                    terms.append(f"z^{e}")
                elif c == -1:
                    terms.append(f"-z^{e}")
                else:
                    terms.append(f"{c}*z^{e}")
            body = " + ".join(terms).replace("+ -", "- ")
        if self.truncation is None:
            return body
        return f"{body} + O(z^{self.truncation + 1})"


def series_add(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    """Coefficientwise sum; the result is valid through min of the inputs."""
    bound = min(_as_bound(f.truncation), _as_bound(g.truncation))
    truncation = _as_truncation(bound)
    if f.is_zero() and g.is_zero():
        return LaurentSeries.zero(truncation)
    lo = min(v for v in (f.valuation(), g.valuation()) if v is not None)
    hi = int(min(max(f.top_degree, g.top_degree), bound))
    if hi < lo:
        return LaurentSeries.zero(truncation)
    coeffs = [f.coefficient(e) + g.coefficient(e) for e in range(lo, hi + 1)]
    return LaurentSeries(coeffs, lo, truncation)


def series_neg(f: LaurentSeries) -> LaurentSeries:
    return series_scale(f, -1)


def series_sub(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    return series_add(f, series_neg(g))


def series_scale(f: LaurentSeries, c: Fraction | int) -> LaurentSeries:
    """Coefficientwise scaling; the truncation degree is unchanged."""
    c = Fraction(c)
    if c == 0:
        return LaurentSeries.zero(f.truncation)
    return LaurentSeries([c * x for x in f.coeffs], f.min_degree, f.truncation)


def series_mul(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    """Cauchy product, valid through min(trunc(f) + val(g), trunc(g) + val(f)).

    With valuations -m and -n this is the classical rule that the product of
    truncations to maxDegree + n and maxDegree + m is exact to maxDegree.
    """
    vf, vg = f.valuation(), g.valuation()
    bound_f = _as_bound(f.truncation) + (vg if vg is not None else _INF)
    bound_g = _as_bound(g.truncation) + (vf if vf is not None else _INF)
    bound = min(bound_f, bound_g)
    truncation = _as_truncation(bound)
    if f.is_zero() or g.is_zero():
        return LaurentSeries.zero(truncation)
    lo = vf + vg
    hi = int(min(f.top_degree + g.top_degree, bound))
    if hi < lo:
        return LaurentSeries.zero(truncation)
    acc = [Fraction(0)] * (hi - lo + 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        base = f.min_degree + i + g.min_degree
        for k, b in enumerate(g.coeffs):
            e = base + k
            if e > hi:
                break
            if b != 0:
                acc[e - lo] += a * b
    return LaurentSeries(acc, lo, truncation)
