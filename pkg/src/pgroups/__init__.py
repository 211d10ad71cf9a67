"""Bounded abelian p-groups: indicators, fully invariant subgroups, the
fundamental matrix, endomorphism ideals and the dagger correspondence, plus a
symbolic layer for transfinite Ulm data.

The package is organized one concern per module; this namespace re-exports
the everyday surface.
"""
from .errors import (
    BudgetExceededError,
    CanonicalFormMismatchError,
    GroupTooLargeError,
    IncomparableContextError,
    IndexOutOfRangeError,
    InvalidInputError,
    MismatchedParentError,
    NoAliasError,
    NonIncreasingExponentsError,
    NonPrimeError,
    NotAdmissibleError,
    NotFullyInvariantError,
    NotNormalizableError,
    PGroupError,
    RingTooLargeError,
    ShapeViolationError,
    UnknownFormatError,
    ZeroMultiplicityError,
)
from .groups import (
    DEFAULT_MAX_GROUP_ORDER,
    DEFAULT_MAX_SUBGROUP_SIZE,
    Element,
    GroupSpec,
    INF,
    Subgroup,
    add,
    block_subgroup,
    enumerate_elements,
    exponent,
    full_subgroup,
    fundamental_subgroup,
    height,
    make_group,
    neg,
    smul,
    subgroup_from_set,
    subgroup_generated,
    subgroup_leq,
    subgroup_meet,
    subgroup_sum,
    ulm_invariants,
    zero_subgroup,
)
from .indicators import (
    Indicator,
    TOP,
    admissible_glb,
    admissible_lub,
    check_endo_monotone,
    enumerate_admissible,
    has_gap_at,
    ind_max,
    ind_min,
    ind_of,
    indicator_subgroup,
    indicator_universe,
    is_admissible,
    is_realizable,
    min_admissible,
    precedes,
)
from .matrix import (
    FundMatrix,
    RisingPath,
    alias,
    build_matrix,
    check_alias,
    check_distinct,
    check_join_meet,
    check_monotone,
    check_path_roundtrip,
    check_quartering,
    entry_join,
    entry_meet,
    enumerate_rising_paths,
    indicator_to_path,
    path_chain_check,
    path_tally,
    path_to_indicator,
    quartering,
    sigma_sum,
    sigma_sum_verdicts,
    verify_sigma_sum,
)
from .lattice import (
    FILattice,
    canonical_fi_form,
    check_fundamental_containment,
    enumerate_fi_subgroups,
    fi_closure,
    hasse_export,
    is_valid_fi_form,
    lattice_stats,
    subgroup_name,
    verify_indicator_coverage,
)
from .endos import (
    DEFAULT_MAX_IDEAL_RING_ORDER,
    DEFAULT_MAX_RING_ORDER,
    DaggerReport,
    Endo,
    EndoRing,
    Ideal,
    apply,
    compose,
    dagger_ideal,
    dagger_inv_class,
    dagger_subgroup,
    endo_add,
    endo_rank,
    enumerate_endos,
    enumerate_ideals,
    find_dagger_collision,
    get_ring,
    ideal_generated,
    ideal_leq,
    ideal_meet,
    ideal_sum,
    identity_endo,
    image,
    is_dagger_closed,
    make_endo,
    principal_ideal,
    ring_order,
    scalar_endo,
    special_ideals,
    verify_fun_identities,
    verify_galois_suite,
    zero_endo,
)
from .symbolic import (
    BasicGroupSpec,
    BasicSequence,
    CardinalValue,
    Ordinal,
    SymbolicIdealDescriptor,
    TAIL_ALL_ZERO,
    TAIL_CONSTANT,
    UlmBlock,
    UlmSequence,
    aleph,
    basic_seq_to_ulm,
    basic_sequence_of_group,
    cardinal_add,
    cardinal_repeat_omega,
    cardinal_sum,
    check_basic_sequence_admissible,
    check_ulm_criterion,
    check_ulm_position_indexing,
    descriptor_leq,
    finite,
    ord_add,
    ord_cmp,
    ulm_sequence_of_group,
    ulm_to_basic_seq,
    verify_descriptor_rule,
)
from .reference import (
    REFERENCE_ADMISSIBLE_COUNT,
    REFERENCE_FI_NODE_COUNT,
    REFERENCE_LATTICE_STATS,
    REFERENCE_LISTED_FI_COUNT,
    REFERENCE_MATRIX_ERRATA,
    REFERENCE_PATH_TALLY,
    REFERENCE_PATH_TOTAL,
    REFERENCE_REALIZABLE_COUNT,
    REFERENCE_TABLE,
    ReferenceRow,
    reference_collision_generators,
    reference_group,
    ulm_accept_example,
    ulm_reject_example,
)
from .reports import ClaimReport, VERDICTS, load_allowlist, unexpected_refutations
from .claims import TRANSITIVITY_MAX_ORDER, ClaimContext, all_claim_ids, run_claims

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
