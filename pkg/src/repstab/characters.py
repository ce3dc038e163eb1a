"""Memoized symmetric-group character tables via the Murnaghan-Nakayama rule.

The recursion removes the largest part of the class partition and sums over
removable border strips of that size, with a sign given by strip height.
Every (mu, rho) pair is computed at most once; tables can be filled
bottom-up over group sizes (the default for batch work) or lazily on
demand, with identical results.

Construction mutates the memo table; under CPython's atomic dict operations
concurrent lazy lookups are safe because duplicate computations of the same
key insert identical values.  A fully built table is effectively immutable
and can be shared freely between threads.
"""

from __future__ import annotations

from .partitions import Partition, border_strips, enumerate_partitions

__all__ = ["CharacterTable", "char_value", "dimension", "build_tables"]


class CharacterTable:
    """Character values chi^mu_rho for symmetric groups, memoized by (mu, rho)."""

    def __init__(self):
        self._memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}

    def char_value(self, mu: Partition, rho: Partition) -> int:
        """The irreducible character indexed by mu evaluated on class rho."""
        if mu.size != rho.size:
            raise ValueError(
                f"mu and rho must partition the same integer, got |mu|={mu.size} "
                f"and |rho|={rho.size}"
            )
        return self._eval(mu.parts, rho.parts)

    def _eval(self, mu: tuple[int, ...], rho: tuple[int, ...]) -> int:
        key = (mu, rho)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if sum(mu) <= 1:
            value = 1
        else:
            value = 0
            for strip in border_strips(Partition(mu), rho[0]):
                value += (-1) ** strip.height * self._eval(
                    strip.remaining.parts, rho[1:]
                )
        self._memo[key] = value
        return value

    def dimension(self, mu: Partition) -> int:
        """Dimension of the irreducible indexed by mu (the identity column)."""
        return self._eval(mu.parts, (1,) * mu.size)

    def build(self, max_size: int) -> "CharacterTable":
        """Materialize all values for group sizes 0..max_size, bottom-up."""
        for m in range(max_size + 1):
            parts = enumerate_partitions(m)
            for mu in parts:
                for rho in parts:
                    self._eval(mu.parts, rho.parts)
        return self

    def entries(self, m: int) -> list[tuple[Partition, Partition, int]]:
        """The full S_m table as (mu, rho, value) rows in canonical order."""
        parts = enumerate_partitions(m)
        return [(mu, rho, self.char_value(mu, rho)) for mu in parts for rho in parts]


_DEFAULT_TABLE = CharacterTable()


def char_value(mu: Partition, rho: Partition) -> int:
    """chi^mu_rho from the shared default table (lazily memoized)."""
    return _DEFAULT_TABLE.char_value(mu, rho)


def dimension(mu: Partition) -> int:
    """Dimension of the irreducible indexed by mu; 1 for the empty partition."""
    return _DEFAULT_TABLE.dimension(mu)


def build_tables(max_size: int) -> CharacterTable:
    """A fresh table with all sizes 0..max_size filled bottom-up."""
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    return CharacterTable().build(max_size)
