"""Generic initial ideals, almost revlex ideals and strong Lefschetz certificates
over the rationals, in reverse lexicographic order."""

from .borel import almost_revlex_ideal, is_almost_revlex, is_borel_fixed
from .errors import (
    DimensionError,
    DomainError,
    InfeasibleHVectorError,
    NotArtinianError,
    RevginError,
    ShapeError,
    SingularMatrixError,
    UnstableGinError,
)
from .gin import GinCertificate, compute_gin, random_gl
from .groebner import (
    GroebnerBasis,
    IdealGens,
    MonomialIdeal,
    QuotientAlgebra,
    buchberger,
    complete_intersection,
    hilbert_function,
    initial_ideal,
    normal_form,
    quotient_algebra,
    quotient_of,
)
from .hvector import (
    ci_hilbert,
    check_c1,
    check_c2,
    check_c3,
    difference,
    is_symmetric,
    is_unimodal,
    k_difference,
    slope_profile,
)
from .lefschetz import (
    BasicInvariants,
    CertifiedNoSlp,
    SlpVerdict,
    determinant_vanishes_identically,
    find_slp_witness,
    has_k_slp,
    has_slp_with,
    jordan_type,
    multiplication_matrix,
    slp_from_basic_invariants,
    tensor_with_dual_number,
)
from .poly import LinearForm, Polynomial, apply_linear_change, monomials_of_degree, multiply, revlex_cmp

__version__ = "0.1.0"
