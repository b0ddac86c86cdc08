"""Exact combinatorics of cumulative rearrangements.

A composition is cumulative for a modulus q when none of its prefix sums is
divisible by q.  This package counts, decides and constructs the cumulative
rearrangements of an integer partition, exactly and with every fast path
cross-validated against brute-force enumeration.
"""

from .core import (
    Composition,
    Partition,
    ResidueProfile,
    as_composition,
    as_partition,
    concatenate,
    is_cumulative,
    mod_inverse,
    part_multiplicity,
    partial_sums,
    profile_max,
    profile_norm,
    profile_weight,
    residue_profile,
    scale_composition,
    scale_profile,
)
from .count import CountTable, binomial, cumulative_count, factorial, reduced_count
from .decide import (
    ExistenceVerdict,
    MaximizerCheck,
    WitnessReport,
    existence_verdict,
    is_prime,
    reduced_nonempty,
    shortcut_nonzero,
    witness,
    witness_pattern,
)
from .enumeration import (
    brute_count,
    brute_reduced,
    cumulative_rearrangements,
    partitions_of,
    rearrangements,
)

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "Partition",
    "ResidueProfile",
    "as_composition",
    "as_partition",
    "partial_sums",
    "concatenate",
    "part_multiplicity",
    "is_cumulative",
    "residue_profile",
    "profile_norm",
    "profile_weight",
    "profile_max",
    "scale_profile",
    "scale_composition",
    "mod_inverse",
    "partitions_of",
    "rearrangements",
    "cumulative_rearrangements",
    "brute_count",
    "brute_reduced",
    "factorial",
    "binomial",
    "CountTable",
    "reduced_count",
    "cumulative_count",
    "is_prime",
    "MaximizerCheck",
    "ExistenceVerdict",
    "WitnessReport",
    "reduced_nonempty",
    "existence_verdict",
    "shortcut_nonzero",
    "witness_pattern",
    "witness",
]
