"""tiltwalk: exact half-line walk counts with a periodic congruence
constraint, their generating functions and sharp growth laws, and the
matching tensor-power decomposition engine for quantum-sl2 tilting modules.
"""

__version__ = "0.1.0"

from .walks import (
    CountTable,
    GrowthSequence,
    WalkSequences,
    ballot_formula,
    classical_residue_sums,
    classical_row_sums,
    classical_table,
    modular_table,
    residue_sum,
    row_sum,
    sequences,
    wall_count,
)
from .series import (
    ChebPoly,
    LaurentPoly,
    RationalSeries,
    cheb_at_inv_2x,
    cheb_u,
    gf_a_half_line,
    gf_b,
    mixed_factor_limit,
    mixed_factor_series,
    r_poly,
    sqrt_series,
)
from .asymptotics import (
    Approximant,
    ErrorReport,
    ScaledReal,
    a_approx,
    a_approximant,
    b_approx,
    b_approximant,
    b_prefactor,
    c_approx,
    c_prefactor,
    error_envelope,
    normalized_count,
    ratio_to_approx,
    spectral_an,
    w_approx,
    w_approximant,
    w_ratio_limit,
)
from .tilting import (
    BoundsReport,
    DeltaMultiset,
    TiltingDecomposition,
    bounds_check,
    cg_square_free_product,
    count_summands,
    count_weyl,
    delta_factors,
    dim_tilting,
    projective_closure_check,
    tensor_power,
    tilting_decompose,
    wall_summands,
)
from .roots import (
    RootSystemStats,
    ThetaEnvelope,
    projective_delta_bound,
    rank2_improved_bound,
    stats,
    steinberg_dim,
    theta_envelope,
)

__all__ = [
    "CountTable", "GrowthSequence", "WalkSequences", "ballot_formula",
    "classical_residue_sums", "classical_row_sums", "classical_table",
    "modular_table", "residue_sum", "row_sum", "sequences", "wall_count",
    "ChebPoly", "LaurentPoly", "RationalSeries", "cheb_at_inv_2x", "cheb_u",
    "gf_a_half_line", "gf_b", "mixed_factor_limit", "mixed_factor_series",
    "r_poly", "sqrt_series",
    "Approximant", "ErrorReport", "ScaledReal", "a_approx", "a_approximant",
    "b_approx", "b_approximant", "b_prefactor", "c_approx", "c_prefactor",
    "error_envelope", "normalized_count", "ratio_to_approx", "spectral_an",
    "w_approx", "w_approximant", "w_ratio_limit",
    "BoundsReport", "DeltaMultiset", "TiltingDecomposition", "bounds_check",
    "cg_square_free_product", "count_summands", "count_weyl", "delta_factors",
    "dim_tilting", "projective_closure_check", "tensor_power",
    "tilting_decompose", "wall_summands",
    "RootSystemStats", "ThetaEnvelope", "projective_delta_bound",
    "rank2_improved_bound", "stats", "steinberg_dim", "theta_envelope",
]
