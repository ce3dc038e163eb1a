"""Command-line interface.

Thin wrappers over the library: each subcommand parses and validates its
arguments, delegates to the core modules, and formats output.  Exit codes:
0 success, 1 runtime/IO failure, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import sys

import click

from .characters import build_tables
from .charpoly import CharacterPolynomial, young_to_charpoly
from .partitions import (
    Partition,
    enumerate_partitions,
    parse_partition,
    partition_to_text,
)
from .stable import (
    batch_table,
    cohomology_decomposition,
    format_decomposition,
    format_signed_series,
    stable_coefficients,
    table_csv,
)
from .verify import verify_all


def _partition_argument(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _write_text(path: str, content: str) -> None:
    try:
        with open(path, "w", newline="") as handle:
            handle.write(content)
    except OSError as exc:
        click.echo(f"error: cannot write {path}: {exc}", err=True)
        sys.exit(1)


def format_charpoly(poly: CharacterPolynomial) -> str:
    """Human-readable binomial-basis form, e.g. ``(X1 C 1) - 1``.

    Terms are grouped by their X variables (X1 products first, counts
    descending), with the constant term last.
    """

    def key(rho: Partition):
        pairs = tuple((part, -mult) for part, mult in rho.cycle_counts().items())
        return (rho.size == 0, pairs)

    ordered = sorted(poly.terms, key=key)
    pieces: list[str] = []
    for rho in ordered:
        coeff = poly.terms[rho]
        factors = "".join(
            f"(X{part} C {mult})" for part, mult in rho.cycle_counts().items()
        )
        if not factors:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = factors
        else:
            body = f"{abs(coeff)}{factors}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces) if pieces else "0"


@click.group()
def main():
    """Stable multiplicities of symmetric-group representation families in
    the cohomology of ordered configuration spaces of the plane."""


@main.command()
@click.argument("partition")
@click.option("--max-degree", default=30, show_default=True, help="Highest power computed.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="Also write rows partition,i,d_i to this file.")
def series(partition: str, max_degree: int, csv_path: str | None):
    """Print the signed multiplicity series of one partition family."""
    if max_degree < 0:
        raise click.UsageError("--max-degree must be non-negative")
    lam = _partition_argument(partition)
    row = stable_coefficients(lam, max_degree)
    click.echo(format_signed_series(row.signed_coefficients))
    if csv_path:
        _write_text(csv_path, table_csv([row]))


@main.command()
@click.argument("degree", type=int)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="Also write the entries as partition,i,d_i rows.")
def cohomology(degree: int, csv_path: str | None):
    """Print the decomposition of one cohomological degree."""
    if degree < 0:
        raise click.UsageError("degree must be non-negative")
    decomposition = cohomology_decomposition(degree)
    click.echo(format_decomposition(decomposition))
    if csv_path:
        lines = ["partition,i,d_i"]
        lines += [
            f"{partition_to_text(lam)},{degree},{mult}"
            for lam, mult in decomposition.entries
        ]
        _write_text(csv_path, "\n".join(lines) + "\n")


@main.command()
@click.option("--max-size", required=True, type=int, help="Largest partition size.")
@click.option("--max-degree", required=True, type=int, help="Highest power computed.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False),
              help="CSV output path.")
@click.option("--threads", default=1, show_default=True,
              help="Worker threads for the per-family assemblies.")
def table(max_size: int, max_degree: int, out_path: str, threads: int):
    """Write the full multiplicity table as CSV."""
    if max_size < 0 or max_degree < 0:
        raise click.UsageError("--max-size and --max-degree must be non-negative")
    if threads < 1:
        raise click.UsageError("--threads must be at least 1")
    rows = batch_table(max_size, max_degree, threads=threads)
    _write_text(out_path, table_csv(rows))
    click.echo(f"wrote {len(rows)} families x {max_degree + 1} degrees to {out_path}")


@main.command()
@click.argument("partition")
def charpoly(partition: str):
    """Print a family's character polynomial in the binomial basis."""
    lam = _partition_argument(partition)
    click.echo(format_charpoly(young_to_charpoly(lam)))


@main.command()
@click.argument("size", type=int)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="Also write rows mu,rho,value.")
def chartable(size: int, csv_path: str | None):
    """Print the character table of the symmetric group on SIZE letters."""
    if size < 0:
        raise click.UsageError("size must be non-negative")
    table_ = build_tables(size)
    parts = enumerate_partitions(size)
    labels = [partition_to_text(p) for p in parts]
    values = [[table_.char_value(mu, rho) for rho in parts] for mu in parts]
    left = max(len("mu \\ rho"), max((len(s) for s in labels), default=0))
    widths = [
        max(len(labels[c]), max(len(str(values[r][c])) for r in range(len(parts))))
        for c in range(len(parts))
    ]
    header = "mu \\ rho".ljust(left) + "  " + "  ".join(
        labels[c].rjust(widths[c]) for c in range(len(parts))
    )
    click.echo(header.rstrip())
    for r in range(len(parts)):
        row = labels[r].ljust(left) + "  " + "  ".join(
            str(values[r][c]).rjust(widths[c]) for c in range(len(parts))
        )
        click.echo(row.rstrip())
    if csv_path:
        lines = ["mu,rho,value"]
        lines += [
            f"{labels[r]},{labels[c]},{values[r][c]}"
            for r in range(len(parts))
            for c in range(len(parts))
        ]
        _write_text(csv_path, "\n".join(lines) + "\n")


@main.command()
@click.option("--max-i", "max_i", default=3, show_default=True,
              help="Highest cohomological degree checked.")
def verify(max_i: int):
    """Run the dimension-identity and vanishing/sign verification suite."""
    if max_i < 0:
        raise click.UsageError("--max-i must be non-negative")
    result = verify_all(max_i)
    click.echo("dimension identity:")
    for report in result.reports:
        status = "ok" if report.passed else "FAIL"
        click.echo(
            f"  i={report.i} n={report.n}: lhs={report.lhs} rhs={report.rhs} {status}"
        )
    if result.violations:
        click.echo("violations:")
        for line in result.violations:
            click.echo(f"  {line}")
    else:
        click.echo("vanishing and sign sweeps: ok")
    if result.observations:
        click.echo("observations:")
        for line in result.observations:
            click.echo(f"  {line}")
    if result.passed:
        click.echo(f"RESULT: PASS ({len(result.reports)} reports)")
    else:
        click.echo("RESULT: FAIL", err=True)
        sys.exit(3)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
