"""HTTP service exposing the pipeline.

A long-running process keeps the shared memo tables (characters, necklace
binomials, generating functions) warm across requests, so repeated queries
are cheap.  Request and response bodies are pydantic models; malformed
partitions are rejected with a 422 before any computation runs.

Run with ``repstab serve`` or ``uvicorn repstab.service:app``.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field, field_validator

from .characters import build_tables
from .charpoly import young_to_charpoly
from .cli import format_charpoly
from .partitions import enumerate_partitions, parse_partition, partition_to_text
from .stable import (
    batch_table,
    cohomology_decomposition,
    format_decomposition,
    format_signed_series,
    stable_coefficients,
    table_csv,
)
from .verify import verify_all


def _validate_partition(text: str) -> str:
    parse_partition(text)  # raises ValueError -> 422
    return text


class SeriesRequest(BaseModel):
    partition: str = Field(description='Partition text, e.g. "2+1"; "0" is trivial.')
    max_degree: int = Field(30, ge=0, le=200)

    _check = field_validator("partition")(_validate_partition)


class SeriesResponse(BaseModel):
    partition: str
    max_degree: int
    multiplicities: list[int]
    signed_coefficients: list[int]
    display: str


class DecompositionRequest(BaseModel):
    degree: int = Field(ge=0, le=8)


class DecompositionEntry(BaseModel):
    partition: str
    multiplicity: int


class DecompositionResponse(BaseModel):
    degree: int
    entries: list[DecompositionEntry]
    display: str


class CharPolyRequest(BaseModel):
    partition: str

    _check = field_validator("partition")(_validate_partition)


class CharPolyTerm(BaseModel):
    rho: str
    coefficient: str


class CharPolyResponse(BaseModel):
    partition: str
    degree: int
    terms: list[CharPolyTerm]
    display: str


class CharTableRequest(BaseModel):
    size: int = Field(ge=0, le=14)


class CharTableResponse(BaseModel):
    size: int
    partitions: list[str]
    values: list[list[int]]


class VerifyRequest(BaseModel):
    max_i: int = Field(3, ge=0, le=5)


class VerifyReport(BaseModel):
    i: int
    n: int
    lhs: str
    rhs: int
    passed: bool


class VerifyResponse(BaseModel):
    reports: list[VerifyReport]
    violations: list[str]
    observations: list[str]
    passed: bool


class TableRequest(BaseModel):
    max_size: int = Field(ge=0, le=16)
    max_degree: int = Field(ge=0, le=100)


app = FastAPI(
    title="repstab",
    description=(
        "Stable multiplicities of symmetric-group representation families "
        "in the cohomology of ordered configuration spaces of the plane."
    ),
)


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/series", response_model=SeriesResponse)
def series(request: SeriesRequest) -> SeriesResponse:
    lam = parse_partition(request.partition)
    row = stable_coefficients(lam, request.max_degree)
    return SeriesResponse(
        partition=partition_to_text(lam),
        max_degree=request.max_degree,
        multiplicities=list(row.multiplicities),
        signed_coefficients=list(row.signed_coefficients),
        display=format_signed_series(row.signed_coefficients),
    )


@app.post("/cohomology", response_model=DecompositionResponse)
def cohomology(request: DecompositionRequest) -> DecompositionResponse:
    decomposition = cohomology_decomposition(request.degree)
    return DecompositionResponse(
        degree=request.degree,
        entries=[
            DecompositionEntry(partition=partition_to_text(lam), multiplicity=mult)
            for lam, mult in decomposition.entries
        ],
        display=format_decomposition(decomposition),
    )


@app.post("/charpoly", response_model=CharPolyResponse)
def charpoly(request: CharPolyRequest) -> CharPolyResponse:
    lam = parse_partition(request.partition)
    poly = young_to_charpoly(lam)
    terms = [
        CharPolyTerm(rho=partition_to_text(rho), coefficient=str(poly.terms[rho]))
        for rho in sorted(poly.terms)
    ]
    return CharPolyResponse(
        partition=partition_to_text(lam),
        degree=poly.degree,
        terms=terms,
        display=format_charpoly(poly),
    )


@app.post("/chartable", response_model=CharTableResponse)
def chartable(request: CharTableRequest) -> CharTableResponse:
    table = build_tables(request.size)
    parts = enumerate_partitions(request.size)
    return CharTableResponse(
        size=request.size,
        partitions=[partition_to_text(p) for p in parts],
        values=[[table.char_value(mu, rho) for rho in parts] for mu in parts],
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    result = verify_all(request.max_i)
    return VerifyResponse(
        reports=[
            VerifyReport(i=r.i, n=r.n, lhs=str(r.lhs), rhs=r.rhs, passed=r.passed)
            for r in result.reports
        ],
        violations=list(result.violations),
        observations=list(result.observations),
        passed=result.passed,
    )


@app.post("/table", response_class=PlainTextResponse)
def table(request: TableRequest) -> PlainTextResponse:
    rows = batch_table(request.max_size, request.max_degree)
    return PlainTextResponse(table_csv(rows), media_type="text/csv")
