"""Exact arithmetic in the near-center of the symmetric group algebra.

The subalgebra of C[S_n] commuting with every permutation that fixes the
last symbol is spanned by marked class sums: conjugacy classes refined by
the length of the cycle through n.  This package computes its generalized
characters, structure constants, and star-factorization counts with exact
rational arithmetic, alongside a brute-force oracle that recomputes the same
quantities directly in the group algebra.
"""

from .errors import DomainError, GuardExceeded, UnsupportedPattern, default_guard
from .partitions import (
    MarkedPartition,
    Partition,
    add_part,
    class_size,
    decrement_part,
    enumerate_marked_partitions,
    enumerate_partitions,
    format_marked_partition,
    format_partition,
    marked_class_size,
    multiplicity,
    num_parts,
    parse_marked_partition,
    parse_partition,
    remove_part,
)
from .tableaux import (
    StandardTableau,
    content_polynomial,
    content_sums,
    content_vector,
    dimension,
    enumerate_syt,
    enumerate_syt_marked,
    marked_content,
    shape_contents,
)
from .characters import character_table, chi, chi_near_hook
from .genchar import (
    Asf,
    Const,
    Elementary,
    Power,
    PowerSum,
    Product,
    Sum,
    VarRange,
    XN,
    Xn,
    connection_coefficient,
    evaluate_asf,
    genchar,
    genchar_hook_row,
    genchar_strahov,
    genchar_table2,
    multi_product_coefficient,
    orthogonality_check,
    subscript_sum_chi,
    superscript_sum,
    table1_poly,
    table1_rows,
    weighted_sum,
)
from .oracle import (
    GroupAlgebraElement,
    Permutation,
    VerificationError,
    central_idempotent,
    class_sum,
    enumerate_star_factorizations,
    evaluate_asf_at_jm,
    extract_marked_coefficient,
    ga_multiply,
    is_near_central,
    jm_element,
    jm_power_coefficients,
    run_verify,
    z1_idempotent,
)
from .starcount import (
    StarClosedCase,
    TruncatedSeries,
    series_cosh,
    series_exp,
    series_mul,
    series_pow,
    series_sinh,
    star_count,
    star_count_by_cycle_count,
    star_count_class,
    star_count_closed,
)

__version__ = "0.1.0"
