"""Exact rational/integer linear algebra: the substrate for every automorphism here."""

from .matrix import (
    IntMatrix,
    RatMatrix,
    Vec,
    dot,
    is_zero_vec,
    subspace_basis,
    subspace_contains,
    subspace_equations,
    subspace_intersect,
    subspace_sum,
    unit_vec,
    vec,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
    zero_vec,
)
from .poly import (
    Poly,
    count_real_roots,
    cyclotomic,
    cyclotomic_order,
    euler_phi,
    factor_rational,
    inverse_phi,
    poly_gcd,
    poly_lcm,
    squarefree_decomposition,
    squarefree_part,
)
from .lattice import (
    coset_representatives,
    hermite_normal_form,
    integer_row_kernel,
    integral_points_of_subspace,
    invariant_factors,
    lattice_basis,
    lattice_contains,
    lattice_index,
    lattice_intersect,
    lattice_rank,
    lattice_sum,
    smith_normal_form,
)
from .jordan import (
    charpoly,
    is_nilpotent_matrix,
    is_semisimple,
    is_unipotent,
    jordan_chevalley_additive,
    jordan_chevalley_multiplicative,
    minimal_poly,
    nilpotent_exp,
    nilpotent_log,
)
from .spectrum import (
    SpectrumCertificate,
    finite_order,
    purely_imaginary_spectrum,
    spectrum_certificate,
)

__all__ = [
    "IntMatrix",
    "RatMatrix",
    "Vec",
    "Poly",
    "SpectrumCertificate",
    "charpoly",
    "count_real_roots",
    "coset_representatives",
    "cyclotomic",
    "cyclotomic_order",
    "dot",
    "euler_phi",
    "factor_rational",
    "finite_order",
    "hermite_normal_form",
    "integral_points_of_subspace",
    "integer_row_kernel",
    "invariant_factors",
    "inverse_phi",
    "is_nilpotent_matrix",
    "is_semisimple",
    "is_unipotent",
    "is_zero_vec",
    "jordan_chevalley_additive",
    "jordan_chevalley_multiplicative",
    "lattice_basis",
    "lattice_contains",
    "lattice_index",
    "lattice_intersect",
    "lattice_rank",
    "lattice_sum",
    "minimal_poly",
    "nilpotent_exp",
    "nilpotent_log",
    "poly_gcd",
    "poly_lcm",
    "purely_imaginary_spectrum",
    "smith_normal_form",
    "spectrum_certificate",
    "squarefree_decomposition",
    "squarefree_part",
    "subspace_basis",
    "subspace_contains",
    "subspace_equations",
    "subspace_intersect",
    "subspace_sum",
    "unit_vec",
    "vec",
    "vec_add",
    "vec_neg",
    "vec_scale",
    "vec_sub",
    "zero_vec",
]
