"""Exact matrix representations of Hecke operators on period functions for
the projective modular group, with decidable congruence and membership
procedures and a complex-numeric verifier for the analytic identities.

The symbolic layer (matrices, sums, hecke, congruence, graph) is exact:
arbitrary-precision integers and rational coefficients throughout.  The
numeric layer (numerics) evaluates the weight-2s slash action, periodic and
period functions in double precision with stated tolerances.
"""

from .matrices import (
    GENERATORS,
    GradingError,
    IDENTITY,
    ProjMatrix,
    S,
    T,
    TP,
    U,
    scalar_matrix,
)
from .sums import FormalSum
from .hecke import (
    hecke_infty,
    hecke_manin,
    hecke_plus,
    in_lower_region,
    in_upper_region,
    lower_region,
    shift_to_lower,
    shift_to_upper,
    upper_region,
)
from .congruence import (
    ONE_MINUS_T_TP,
    ONE_PLUS_S,
    S_MINUS_1,
    T_MINUS_1,
    U_ORBIT,
    compatibility_check,
    congruent_mod_t1,
    divide_one_minus_t_tp,
    divide_t_minus_one,
    product_defect,
    product_formula_check,
    split_plus_minus,
    t_coset_canonical,
    transpose_identity_check,
)
from .graph import (
    Cycle,
    Fragment,
    MonoidGraph,
    build_graph,
    find_cycles,
    scan_label_rules,
    support_subgraph,
    to_dot,
)
from .numerics import (
    CUTPLANE,
    OFFREAL,
    CoeffSeq,
    DerivedPeriod,
    DomainError,
    PeriodicFunction,
    ReciprocalPeriod,
    SlashImage,
    SpectralParam,
    apply_hecke_like,
    arg_identity_check,
    grid_points,
    hecke_coeffs,
    periodic_action_residual,
    principal_power,
    slash_eval,
    three_term_residual,
)

__version__ = "0.1.0"
