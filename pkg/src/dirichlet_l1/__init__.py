"""Numerical verification of upper bounds for L(1, chi) over Dirichlet characters."""
from .arith import (
    EULER_GAMMA,
    ArithmeticOverflow,
    Factorization,
    coprime_harmonic,
    euler_phi,
    factorize,
    mertens_product,
    mobius,
    prime_log_sum,
    primorial,
    radical,
    tau,
)
from .bounds import (
    BoundReport,
    WorkBudgetExceeded,
    corollary_bound,
    lemma2_main_term,
    lemma2_radical_gap,
    lemma2_residual,
    primorial_study,
    theorem_rhs_explicit,
    verify_modulus,
)
from .chargroup import (
    CharacterGroup,
    DirichletCharacter,
    build_group,
    chi_eval,
    enumerate_characters,
    partial_sum,
    pv_ratio,
    sup_tail_sum,
)
from .lfun import (
    CrossValidationError,
    LValueEstimate,
    l1_cross_validated,
    l1_digamma,
    l1_truncated,
    max_l1_over_characters,
)
from .specfun import DigammaValue, digamma, digamma_row

__version__ = "0.1.0"
