"""Generalized Dedekind sums, reciprocity checks, and lattice zeta values.

The package computes finite sums of products of 1-periodic functions
sampled along rational arithmetic progressions, verifies the reciprocity
laws those sums satisfy (classical, shifted, integral-form, Fourier-side),
builds unimodular subdivisions of planar lattice cones, and evaluates the
truncated conical zeta values that appear on the analytic side.

Hot loops run in a compiled extension when available; set
``DEDEZETA_BACKEND=python`` to force the pure fallback. Both backends are
bit-identical, see :mod:`dedezeta.kernels`.
"""

from .exact import (
    Poly,
    Rational,
    SymbolicValue,
    bernoulli_number,
    bernoulli_poly,
    eval_periodic_bernoulli,
    format_rational,
    frac_part,
    parse_rational,
)
from .periodic import (
    JumpData,
    PeriodicFn,
    bernoulli_fn,
    cos_fn,
    descriptor_token,
    eval_periodic,
    exp_fn,
    fourier_coeff,
    jump,
    jump_product,
    jump_ratio_single,
    parse_descriptor,
    poly_fn,
    power_fn,
    power_to_bernoulli,
    shifted_fn,
    sin_fn,
)
from .dedekind import (
    NuVector,
    ReciprocityReport,
    cos_closed_form,
    dedekind_sum,
    exp_closed_form,
    franel_integral,
    integral_recip_rhs,
    power_basis_recip_check,
    r1_closed_form,
    rademacher_rhs,
    reciprocity_lhs,
    shifted_rhs,
    sin_closed_form,
)
from .lattice import (
    ConeFan,
    HJSequence,
    LatticeConstraint,
    canonical_sign_vectors,
    enumerate_orthogonal,
    epsilon_shift,
    hj_generators,
    hj_sequence,
    r2_cone_generators,
    verify_unimodular,
)
from .zeta import (
    TruncationPlan,
    bernoulli_recip_general,
    bernoulli_recip_r2,
    bound_check,
    combined_y_identity,
    conical_zeta_trunc,
    coord_zero_zeta_closed,
    default_plan,
    multiple_zeta_trunc,
    q_sum,
    q_weighted_total,
    ray_zeta_exact,
    riemann_zeta_even_exact,
    riemann_zeta_numeric,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConeFan",
    "HJSequence",
    "JumpData",
    "LatticeConstraint",
    "NuVector",
    "PeriodicFn",
    "Poly",
    "Rational",
    "ReciprocityReport",
    "SymbolicValue",
    "TruncationPlan",
    "bernoulli_fn",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_recip_general",
    "bernoulli_recip_r2",
    "bound_check",
    "canonical_sign_vectors",
    "combined_y_identity",
    "conical_zeta_trunc",
    "coord_zero_zeta_closed",
    "cos_closed_form",
    "cos_fn",
    "dedekind_sum",
    "default_plan",
    "descriptor_token",
    "enumerate_orthogonal",
    "epsilon_shift",
    "eval_periodic",
    "eval_periodic_bernoulli",
    "exp_closed_form",
    "exp_fn",
    "format_rational",
    "fourier_coeff",
    "frac_part",
    "franel_integral",
    "hj_generators",
    "hj_sequence",
    "integral_recip_rhs",
    "jump",
    "jump_product",
    "jump_ratio_single",
    "multiple_zeta_trunc",
    "parse_descriptor",
    "parse_rational",
    "poly_fn",
    "power_basis_recip_check",
    "power_fn",
    "power_to_bernoulli",
    "q_sum",
    "q_weighted_total",
    "r1_closed_form",
    "ray_zeta_exact",
    "r2_cone_generators",
    "rademacher_rhs",
    "reciprocity_lhs",
    "riemann_zeta_even_exact",
    "riemann_zeta_numeric",
    "shifted_fn",
    "shifted_rhs",
    "sin_fn",
    "sin_closed_form",
    "verify_unimodular",
]
