"""Regular subgroup sets and perfect codes in coset graphs of finite groups."""

from .config import DEFAULT_LIMITS, Limits, limits_from_env
from .coset_graph import (
    ConnectionSet,
    CosetGraph,
    QuotientMatrix,
    build,
    is_perfect_code,
    profile_subset,
    quotient_matrix,
    validate_connection_set,
)
from .cosets import (
    CosetSpace,
    DoubleCosetDecomp,
    conj_index,
    decompose_into_double_cosets,
    double_coset,
    left_coset_count,
    left_cosets,
    left_transversal,
)
from .group_core import (
    GroupTable,
    QuotientGroup,
    Subgroup,
    all_subgroups,
    conjugate_subgroup,
    from_generators,
    from_table,
    generate_subgroup,
    intersect,
    involution_exists_in_coset,
    is_normal,
    normalizer,
    quotient,
    set_product,
    sylow_subgroup,
    trivial_subgroup,
)
from .harness import (
    SurveyReport,
    group_from_arg,
    parse_group_spec,
    subgroup_from_arg,
    survey,
    verify_certificate_file,
    write_certificate,
)
from .presets import (
    alternating,
    c4_semi_c4,
    c22_semi_c4,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    groups_up_to_16,
    klein4,
    modular16,
    pauli16,
    preset,
    quaternion8,
    semidihedral16,
    sl23,
    standard_corpus,
    symmetric,
)
from .regular_sets import (
    ConditionReport,
    NormalizerReduction,
    PairSpec,
    RegSetCertificate,
    WitnessReport,
    arc_transitive_perfect_code,
    cayley_normal_criterion,
    cayley_odd_s_check,
    check_normal_chain,
    construct_normal_chain,
    decide_regular_set,
    necessary_conjugate_intersection,
    necessary_divisibility,
    normal_perfect_code_criterion,
    normalizer_reduction,
    perfect_code_normalizer_criterion,
    perfect_code_odd_order_criterion,
    perfect_code_pair,
    perfect_code_quotient_criterion,
    perfect_code_sylow_criterion,
    verify_witness,
)

__version__ = "0.1.0"
