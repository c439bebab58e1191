"""Generalized Bressoud bijection for d-distinct integer partitions."""

from .bijection import (
    ConditionViolation,
    GroupedRows,
    NotDDistinctError,
    NotDistinctError,
    PaddedParts,
    StepTrace,
    forward,
    inverse,
    regroup_by_residue,
    sort_parts,
    staircase_add,
    staircase_subtract,
    trace,
)
from .enumeration import count, d_distinct_partitions, partitions_of, target_partitions
from .partition import (
    BRESSOUD,
    BRESSOUD_DUAL,
    EMPTY,
    NotAPartitionError,
    Partition,
    ResiduePermutation,
    all_permutations,
    conjugate,
    format_partition,
    is_d_distinct,
    make_partition,
    parse_partition,
    render_young,
    satisfies_conditions,
)
from .verification import VerificationReport, verify_identity, verify_lemma_conjugate, verify_range

__version__ = "0.1.0"
