"""Top-level pipeline: stable multiplicities and fixed-degree decompositions.

For a partition family the signed series sum_i (-1)^i d_i z^i is assembled
as the binomial-basis coefficients of its character polynomial paired with
the per-class generating functions.  Integrality and the alternating sign
are asserted during assembly; they fail loudly on any arithmetic slip, so
they double as an end-to-end self-check.

Multiplicities are stored unsigned; the signed series is a presentation
detail.  CSV output uses the schema ``partition,i,d_i`` with partitions in
the shared "+" text encoding and rows ordered by (|partition|, canonical
partition order, i).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .charpoly import young_to_charpoly
from .genfun import phi_infinity
from .partitions import Partition, enumerate_partitions_up_to, partition_to_text
from .series import LaurentSeries, series_add, series_scale

__all__ = [
    "InternalConsistencyError",
    "StableSeries",
    "CohomologyDecomposition",
    "stable_coefficients",
    "cohomology_decomposition",
    "batch_table",
    "table_csv",
    "format_signed_series",
    "format_decomposition",
]


class InternalConsistencyError(RuntimeError):
    """An assembled series violated integrality or the alternating sign."""


@dataclass(frozen=True)
class StableSeries:
    """Stable multiplicities d_0..d_max_degree of one partition family."""

    partition: Partition
    max_degree: int
    multiplicities: tuple[int, ...]

    @property
    def signed_coefficients(self) -> tuple[int, ...]:
        """Coefficients of the signed series, (-1)^i * d_i."""
        return tuple(
            -d if i % 2 else d for i, d in enumerate(self.multiplicities)
        )


@dataclass(frozen=True)
class CohomologyDecomposition:
    """Families with positive multiplicity in one cohomological degree."""

    degree: int
    entries: tuple[tuple[Partition, int], ...]


def stable_coefficients(lam: Partition, max_degree: int) -> StableSeries:
    """Compute d_0(lam)..d_max_degree(lam) exactly.

    Assembles sum_rho F_rho * Phi_rho in canonical rho order, then checks
    that every coefficient is an integer of sign (-1)^i before unsigning.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    chi = young_to_charpoly(lam)
    acc = LaurentSeries.zero(truncation=max_degree)
    for rho in sorted(chi.terms):
        term = series_scale(phi_infinity(rho, max_degree), chi.terms[rho])
        acc = series_add(acc, term)
    multiplicities = []
    for i in range(max_degree + 1):
        c = acc.coefficient(i)
        if c.denominator != 1:
            raise InternalConsistencyError(
                f"coefficient of z^{i} for {lam} is not an integer: {c}"
            )
        value = int(c)
        if value and (value < 0) != bool(i % 2):
            raise InternalConsistencyError(
                f"coefficient of z^{i} for {lam} has the wrong sign: {value}"
            )
        multiplicities.append(abs(value))
    return StableSeries(lam, max_degree, tuple(multiplicities))


def cohomology_decomposition(i: int) -> CohomologyDecomposition:
    """All families appearing in cohomological degree i, with multiplicities.

    Families larger than 2i cannot appear, and neither can families longer
    than i, so the sweep over |lam| <= 2i with length(lam) <= i is complete.
    Each series is computed only to degree i, the one coefficient needed.
    """
    if i < 0:
        raise ValueError("degree must be non-negative")
    entries = []
    for lam in enumerate_partitions_up_to(2 * i):
        if lam.length > i:
            continue
        d = stable_coefficients(lam, i).multiplicities[i]
        if d > 0:
            entries.append((lam, d))
    return CohomologyDecomposition(i, tuple(entries))


def batch_table(
    max_partition_size: int, max_degree: int, threads: int = 1
) -> list[StableSeries]:
    """StableSeries for every |lam| <= max_partition_size, in canonical order.

    Shared caches (character tables, generating functions) are warmed first;
    per-family assemblies are then independent and may run on a thread pool.
    The output order is fixed regardless of thread count.
    """
    lams = enumerate_partitions_up_to(max_partition_size)
    for rho in lams:
        phi_infinity(rho, max_degree)
    for lam in lams:
        young_to_charpoly(lam)  # also fills the shared character table
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda p: stable_coefficients(p, max_degree), lams))
    else:
        rows = [stable_coefficients(lam, max_degree) for lam in lams]
    return rows


def table_csv(rows: Iterable[StableSeries]) -> str:
    """Render rows in the CSV schema: header ``partition,i,d_i``, LF endings."""
    lines = ["partition,i,d_i"]
    for row in sorted(rows, key=lambda r: r.partition._key()):
        text = partition_to_text(row.partition)
        for i, d in enumerate(row.multiplicities):
            lines.append(f"{text},{i},{d}")
    return "\n".join(lines) + "\n"


def format_signed_series(signed_coefficients: Iterable[int]) -> str:
    """Signed ascending-power display, e.g. ``-z^1 + 2z^2 - 2z^3``."""
    pieces: list[str] = []
    for i, c in enumerate(signed_coefficients):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = f"z^{i}"
        else:
            body = f"{abs(c)}z^{i}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces) if pieces else "0"


def format_decomposition(decomposition: CohomologyDecomposition) -> str:
    """Display like ``V(1)^⊕2 + V(2)^⊕2 + ... + V(3,1)``; V(0) is trivial."""
    terms = []
    for lam, mult in decomposition.entries:
        name = "V(0)" if not lam.parts else "V(" + ",".join(map(str, lam.parts)) + ")"
        terms.append(name if mult == 1 else f"{name}^⊕{mult}")
    return " + ".join(terms) if terms else "0"
