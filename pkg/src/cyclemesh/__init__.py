"""Exact permutation statistics and their mesh-pattern counterparts.

The library computes adjacent q-cycle statistics, applies the fundamental
transformation, counts mesh-pattern occurrences, builds the associated exact
integer series, and runs the exhaustive verifications tying them together.
"""

from .bfile import BFileError, SeriesDiff, diff_series, read_bfile
from .counting import (
    DEFAULT_BRUTE_FORCE_BOUND,
    CensusTable,
    CheckResult,
    CoefficientSeries,
    VerificationReport,
    a2_series,
    a_formula,
    avoider_series,
    avoiding_permutations,
    census,
    f_series,
    ode_residual,
    verify_conjecture,
    verify_theorem1,
)
from .foata import foata_forward, foata_inverse
from .mesh import (
    MeshPattern,
    avoids,
    count_occurrences,
    named_pattern,
    occurrences,
    parse_pattern,
    r_pattern,
    s_pattern,
    transform_pattern,
)
from .perms import (
    CycleDecomposition,
    Permutation,
    QCycleProfile,
    adjacent_q_cycle_count,
    all_permutations,
    cycle_decomposition,
    direct_sum,
    identity,
    left_to_right_minima,
    make_permutation,
    permutation_from_cycles,
    q_cycle_profile,
    strong_fixed_points,
    symmetry,
)

__version__ = "0.1.0"

__all__ = [
    "BFileError",
    "CensusTable",
    "CheckResult",
    "CoefficientSeries",
    "CycleDecomposition",
    "DEFAULT_BRUTE_FORCE_BOUND",
    "MeshPattern",
    "Permutation",
    "QCycleProfile",
    "SeriesDiff",
    "VerificationReport",
    "a2_series",
    "a_formula",
    "adjacent_q_cycle_count",
    "all_permutations",
    "avoider_series",
    "avoiding_permutations",
    "avoids",
    "census",
    "count_occurrences",
    "cycle_decomposition",
    "diff_series",
    "direct_sum",
    "f_series",
    "foata_forward",
    "foata_inverse",
    "identity",
    "left_to_right_minima",
    "make_permutation",
    "named_pattern",
    "occurrences",
    "ode_residual",
    "parse_pattern",
    "permutation_from_cycles",
    "q_cycle_profile",
    "r_pattern",
    "read_bfile",
    "s_pattern",
    "strong_fixed_points",
    "symmetry",
    "transform_pattern",
    "verify_conjecture",
    "verify_theorem1",
]
