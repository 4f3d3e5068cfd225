"""Mollified moments of Dirichlet L-functions."""

from ._core import (
    AccuracyError,
    BudgetError,
    ConditioningError,
    DegenerateError,
    MollifierSpec,
    MollifyError,
    PreconditionError,
    UsageError,
    central_value,
    central_value_sq,
    characters,
    compute_moments,
    di_bound,
    even_primitive_pair_sum,
    gauss_sum,
    identity_residual,
    is_proportion,
    kappa,
    kernel,
    kloosterman_bench,
    kloosterman_sum,
    lambda_functional,
    mv_proportion,
    optimize,
    phi_plus,
    phi_star,
    proportion,
    ramanujan_sum,
    reciprocity_check,
    reproduce,
    root_number,
    s1_constant,
    s2_constant,
    scan_theta2,
    weil_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
