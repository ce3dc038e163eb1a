"""Stable multiplicities of symmetric-group representation families in the
cohomology of ordered configuration spaces of the plane.

Exact integer/rational arithmetic end to end: partition combinatorics,
memoized character tables, character polynomials in the binomial basis,
necklace-polynomial generating functions, and an independent dimension
oracle for cross-checking the results.
"""

from .characters import CharacterTable, build_tables, char_value, dimension
from .charpoly import (
    CharacterPolynomial,
    evaluate,
    stable_dimension_poly,
    young_to_charpoly,
)
from .genfun import (
    NecklacePolynomial,
    PhiCache,
    geometric_power_coeff,
    necklace,
    necklace_binomial,
    phi_infinity,
)
from .partitions import (
    BorderStrip,
    Partition,
    border_strips,
    centralizer_order,
    enumerate_partitions,
    enumerate_partitions_up_to,
    is_vertical_strip,
    parse_partition,
    partition_to_text,
)
from .series import (
    LaurentSeries,
    Rational,
    TruncationError,
    rat_add,
    rat_div,
    rat_mul,
    rat_neg,
    series_add,
    series_mul,
    series_scale,
    series_sub,
)
from .stable import (
    CohomologyDecomposition,
    InternalConsistencyError,
    StableSeries,
    batch_table,
    cohomology_decomposition,
    stable_coefficients,
    table_csv,
)
from .verify import (
    DimensionReport,
    VerificationResult,
    dim_hi,
    stirling1_unsigned,
    verify_all,
    verify_dimension_consistency,
)

__version__ = "0.1.0"

__all__ = [
    "BorderStrip",
    "CharacterPolynomial",
    "CharacterTable",
    "CohomologyDecomposition",
    "DimensionReport",
    "InternalConsistencyError",
    "LaurentSeries",
    "NecklacePolynomial",
    "Partition",
    "PhiCache",
    "Rational",
    "StableSeries",
    "TruncationError",
    "VerificationResult",
    "batch_table",
    "border_strips",
    "build_tables",
    "centralizer_order",
    "char_value",
    "cohomology_decomposition",
    "dim_hi",
    "dimension",
    "enumerate_partitions",
    "enumerate_partitions_up_to",
    "evaluate",
    "geometric_power_coeff",
    "is_vertical_strip",
    "necklace",
    "necklace_binomial",
    "parse_partition",
    "partition_to_text",
    "phi_infinity",
    "rat_add",
    "rat_div",
    "rat_mul",
    "rat_neg",
    "series_add",
    "series_mul",
    "series_scale",
    "series_sub",
    "stable_coefficients",
    "stable_dimension_poly",
    "stirling1_unsigned",
    "table_csv",
    "verify_all",
    "verify_dimension_consistency",
    "young_to_charpoly",
]
