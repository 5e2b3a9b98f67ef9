"""Exact enumerative and equivariant invariants of colored permutation
groups, their gamma-positive polynomials, triangulations and symmetric
function generating series."""

from .polyring import (
    DomainError,
    GammaExpansion,
    IntPolynomial,
    PalindromicPair,
    center,
    e_r_operator,
    gamma_expansion,
    geometric_expand,
    is_alternatingly_increasing,
    is_gamma_positive,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    palindromic_decomposition,
)
from .colored_perms import (
    ColoredPermutation,
    SignedPermutation,
    a_plus_alt,
    a_plus_minus,
    asc_set,
    binomial_eulerian,
    binomial_eulerian_pm,
    d_plus_minus,
    derangement_poly,
    des_B_set,
    des_set,
    enumerate_group,
    enumerate_signed,
    eulerian_poly,
    exc,
    exc_A,
    fexc,
    gamma_B,
    gamma_tilde,
    is_derangement,
    xi_counts,
)
from .simplicial import (
    SimplicialComplex,
    TriangulatedSimplex,
    VertexAction,
    act,
    barycentric_subdivision,
    delta_of,
    edgewise_subdivision,
    f_vector,
    fixed_subcomplex,
    gamma_complex,
    h_polynomial,
    is_flag,
    local_h,
    restriction,
    simplex,
)
from .symfunc import (
    Partition,
    SymF,
    SymGamma,
    TPoly,
    ZSeries,
    ex_star,
    gen,
    is_schur_gamma_positive,
    is_schur_positive,
    named_series,
    power_sum_identity_check,
    schur_coefficients,
    series,
    stapledon_phi,
    stembridge_h,
    sym_gamma,
    sym_palindromic_split,
)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"
