"""Binary cyclotomic polynomials Phi_pq and the factorization of X^ab - 1."""

from .cyclotomic import (
    METHODS,
    FactorizationResult,
    VerificationReport,
    factor_x_ab_minus_1,
    lemma_expand,
    phi,
    phi_closed_form,
    phi_lam_leung,
    phi_lenstra,
    phi_oracle,
    prime_pairs,
    sweep,
    verify_pair,
)
from .errors import (
    ArithmeticOverflowError,
    CapacityError,
    CyclopqError,
    InexactDivisionError,
    InvariantViolation,
    ValidationError,
)
from .modular import CoprimePair, PrimePair, ReductionParams, gcd, is_prime, mod_pow, reduction_params
from .polynomial import ONE, ZERO, SparsePoly, from_terms

__version__ = "0.1.0"
