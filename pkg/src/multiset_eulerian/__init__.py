"""Exact Eulerian and ordered Stirling combinatorics over multisets.

The package computes descent, partition and segmentation statistics of
multiset permutations together with their q-analogs, relates them to
lattice points of dilated order-simplex products, and verifies the
resulting identities by independent routes with exact arithmetic
throughout.
"""

from .combinatorics import (
    Chain,
    Shape,
    Word,
    chain_block_sizes,
    chain_major_index,
    chain_to_partition,
    descent_set,
    format_chain,
    format_word,
    iter_all_chains,
    iter_chains,
    iter_chains_of_word,
    iter_permutations,
    iter_shapes,
    major_index,
    partition_to_chain,
)
from .lattice import (
    chain_region_count,
    chain_weight_sum,
    classify_first,
    classify_second,
    coordinate_sum,
    f1,
    f1_enumerated,
    f2,
    f2_enumerated,
    in_closed_simplex,
    in_region,
    iter_points,
    point_count,
    region_gf,
    region_point_count,
    validate_point,
)
from .numbers import (
    EulerianRow,
    QPolyFamily,
    StirlingRow,
    a_polynomials,
    b_polynomials,
    c_polynomials,
    eulerian_closed,
    eulerian_row_closed,
    eulerian_row_enum,
    lah_ordered,
    lah_row,
    solve_from_identity,
    stirling2_closed,
    stirling2_row_closed,
    stirling2_row_enum,
)
from .qpoly import QPolynomial, binomial, multinomial, q_binomial
from .verify import (
    CheckRecord,
    IdentityId,
    IdentityReport,
    SuiteResult,
    SuiteRun,
    check_decomposition,
    check_identity,
    run_suite,
    suite_jobs,
)

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "CheckRecord",
    "EulerianRow",
    "IdentityId",
    "IdentityReport",
    "QPolyFamily",
    "QPolynomial",
    "Shape",
    "StirlingRow",
    "SuiteResult",
    "SuiteRun",
    "Word",
    "a_polynomials",
    "b_polynomials",
    "binomial",
    "c_polynomials",
    "chain_block_sizes",
    "chain_major_index",
    "chain_region_count",
    "chain_to_partition",
    "chain_weight_sum",
    "check_decomposition",
    "check_identity",
    "classify_first",
    "classify_second",
    "coordinate_sum",
    "descent_set",
    "eulerian_closed",
    "eulerian_row_closed",
    "eulerian_row_enum",
    "f1",
    "f1_enumerated",
    "f2",
    "f2_enumerated",
    "format_chain",
    "format_word",
    "in_closed_simplex",
    "in_region",
    "iter_all_chains",
    "iter_chains",
    "iter_chains_of_word",
    "iter_permutations",
    "iter_points",
    "iter_shapes",
    "lah_ordered",
    "lah_row",
    "major_index",
    "multinomial",
    "partition_to_chain",
    "point_count",
    "q_binomial",
    "region_gf",
    "region_point_count",
    "run_suite",
    "solve_from_identity",
    "stirling2_closed",
    "stirling2_row_closed",
    "stirling2_row_enum",
    "suite_jobs",
    "validate_point",
]
