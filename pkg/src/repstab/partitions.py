"""Integer partitions, Young-diagram combinatorics, and border strips.

Partitions are canonically stored as non-increasing tuples of positive
integers; cycle notation (multiplicities of each part size) is a derived
view.  Enumeration order is decreasing lexicographic on part tuples, which
fixes the ordering of every table and CSV this package emits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "Partition",
    "BorderStrip",
    "enumerate_partitions",
    "enumerate_partitions_up_to",
    "is_vertical_strip",
    "border_strips",
    "centralizer_order",
    "partition_to_text",
    "parse_partition",
]


class Partition:
    """A non-increasing tuple of positive integers; () is the empty partition."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        for i, p in enumerate(ps):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and ps[i - 1] < p:
                raise ValueError(f"partition parts must be non-increasing: {ps}")
        self.parts = ps

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def cycle_counts(self) -> dict[int, int]:
        """Multiplicity of each part size, keyed by part in increasing order."""
        counts: dict[int, int] = {}
        for p in reversed(self.parts):
            counts[p] = counts.get(p, 0) + 1
        return counts

    @classmethod
    def from_cycle_counts(cls, counts: Mapping[int, int]) -> "Partition":
        parts: list[int] = []
        for part in sorted(counts, reverse=True):
            mult = counts[part]
            if mult < 0:
                raise ValueError("cycle counts must be non-negative")
            parts.extend([part] * mult)
        return cls(parts)

    def contains(self, inner: "Partition") -> bool:
        """True iff inner fits inside self rowwise (Young-diagram inclusion)."""
        if inner.length > self.length:
            return False
        return all(inner.parts[i] <= self.parts[i] for i in range(inner.length))

    def padded(self, n: int) -> "Partition":
        """The partition (n - size, parts...) indexing this family's member at n."""
        k = self.size
        if n - k < (self.parts[0] if self.parts else 0):
            raise ValueError(f"family member undefined at n={n} for {self}")
        if n == k:
            return Partition(self.parts)
        return Partition((n - k,) + self.parts)

    def _key(self) -> tuple:
        return (self.size, tuple(-p for p in self.parts))

    def __lt__(self, other: "Partition") -> bool:
        return self._key() < other._key()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return partition_to_text(self)


@dataclass(frozen=True)
class BorderStrip:
    """A removable border strip: connected rim cells with no 2x2 square.

    Cells are 0-indexed (row, column) coordinates inside the host diagram;
    height is the number of rows touched minus one; remaining is the host
    partition with the strip removed.
    """

    cells: frozenset[tuple[int, int]]
    height: int
    remaining: Partition


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order on part tuples."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition(t) for t in _partition_tuples(n, n if n else 1))


def enumerate_partitions_up_to(n: int) -> tuple[Partition, ...]:
    """Partitions of 0, 1, ..., n concatenated in canonical order."""
    out: list[Partition] = []
    for m in range(n + 1):
        out.extend(enumerate_partitions(m))
    return tuple(out)


def is_vertical_strip(outer: Partition, inner: Partition) -> bool:
    """True iff outer arises from inner by adding at most one box per row."""
    if not outer.contains(inner):
        return False
    for i, p in enumerate(outer.parts):
        q = inner.parts[i] if i < inner.length else 0
        if p - q > 1:
            return False
    return True


def border_strips(mu: Partition, size: int) -> list[BorderStrip]:
    """All border strips of exactly ``size`` cells removable from mu.

    A removable strip starts at the rightmost cell of its topmost row and
    zig-zags down the rim, so it is determined by that topmost row; each
    possible topmost row is tested in turn.
    """
    if size < 1:
        raise ValueError("strip size must be at least 1")
    parts = mu.parts
    m = len(parts)
    strips: list[BorderStrip] = []
    for top in range(m):
        remaining = size
        for bottom in range(top, m):
            below = parts[bottom + 1] if bottom + 1 < m else 0
            if remaining <= parts[bottom] - below:
                start = parts[bottom] - remaining + 1  # 1-indexed column
                cells: set[tuple[int, int]] = set()
                new_parts = list(parts)
                for q in range(top, bottom):
                    for col in range(parts[q + 1], parts[q] + 1):
                        cells.add((q, col - 1))
                    new_parts[q] = parts[q + 1] - 1
                for col in range(start, parts[bottom] + 1):
                    cells.add((bottom, col - 1))
                new_parts[bottom] = start - 1
                left = Partition([p for p in new_parts if p > 0])
                strips.append(BorderStrip(frozenset(cells), bottom - top, left))
                break
            if bottom + 1 >= m:
                break
            remaining -= parts[bottom] - parts[bottom + 1] + 1
            if remaining < 1:
                break
    return strips


def centralizer_order(rho: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type rho."""
    order = 1
    for part, mult in rho.cycle_counts().items():
        order *= math.factorial(mult) * part**mult
    return order


def partition_to_text(p: Partition) -> str:
    """Text encoding shared by the CLI and CSV output: "2+1"; empty is "0"."""
    if not p.parts:
        return "0"
    return "+".join(str(x) for x in p.parts)


def parse_partition(text: str) -> Partition:
    """Parse "2+1" or "2,1" (the empty partition is "0")."""
    s = text.strip()
    if s == "0":
        return Partition()
    pieces = s.replace(",", "+").split("+")
    try:
        parts = [int(x) for x in pieces]
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    if any(p < 1 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise ValueError(
            f"cannot parse partition from {text!r}: "
            "non-increasing positive parts required"
        )
    return Partition(parts)
