"""Schubert-basis combinatorics for the odd-orthogonal and symplectic
flag manifolds: signed permutations, the 0-Bruhat and Lagrangian orders
with their labeled covers, chain statistics, cycle factorization with the
two Pieri multiplicities, and products against the special classes.
"""

from .chains import (
    ascent_set,
    chain_count,
    composition_positions,
    count_chains,
    count_f_g,
    descent_set,
    enumerate_chains,
    peak_set,
    stat_counts,
)
from .factor import (
    Factorization,
    classify,
    delta,
    format_cycles,
    irreducible_factors,
    skew_shape,
    spm_cycles,
)
from .monoid import (
    op_apply,
    parse_word,
    format_word,
    reduced_decompositions,
    relations_suite,
    word_apply,
)
from .orders import (
    Interval,
    build_interval,
    covers0_up,
    grassmann_rank,
    greedy_chain,
    greedy_generator_word,
    intervals_isomorphic,
    k_bruhat_interval,
    lagrangian_covers_up,
    lagrangian_leq,
    lagrangian_rank,
    leq0,
    transport_check,
    witness_u,
)
from .perm import (
    act,
    compose,
    embed,
    epsilon_P,
    format_one_line,
    gamma,
    identity,
    inverse,
    iota,
    iter_group,
    iter_plain,
    length,
    omega0,
    parse,
    parse_cycles,
    parse_one_line,
    partition_of,
    rho,
    shape_canonical,
    sign_changes,
    slash_p,
    spm_inversions,
    support,
    trim,
    v_of,
)
from .schubert import (
    chevalley,
    multiply_q_monomial,
    pieri,
    structure_constant,
    symmetry_suite,
    vector_to_json,
)
from .schur_pq import lr_coefficient, q_expansion, qpoly_to_json
from .verify import run as run_verification

__version__ = "0.1.0"
