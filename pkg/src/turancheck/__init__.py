"""Verification toolkit for log-concavity and Turan-type inequalities of
series in reciprocal gamma functions."""

from .exact import (
    GammaQuotientSum,
    HypothesisViolation,
    SignPattern,
    chu_vandermonde,
    conjecture_sum,
    lambda_positivity_exact,
    weighted_sum_check,
    gamma_sum_closed,
    gamma_sum_terms,
    m_k_values,
    phi_positivity_exact,
    telescoping_sum,
)
from .gamma_core import (
    digamma,
    gamma_ratio,
    ln_gamma,
    pochhammer,
    pochhammer_rational,
    recip_gamma,
)
from .report import CheckResult, SuiteReport, emit_report, parse_report
from .series import (
    CoefficientSequence,
    ConvergenceError,
    SeriesValue,
    TuranianSpec,
    eval_f,
    eval_g,
    eval_lambda,
    eval_phi,
    generalized_turanian,
    lambda_coefficients,
    phi_coefficients,
    turan_bound_constants,
)
from .specials import (
    HypergeometricParams,
    SymmetricChainReport,
    bessel_bounds_check,
    bessel_i,
    bessel_turanian,
    contiguous_residuals,
    exp_remainder,
    exp_remainder_turan_bounds,
    hyperterm_logconcavity,
    kummer,
    kummer_logderiv_bounds,
    kummer_param_derivative,
    kummer_regularized,
    pfq,
    symmetric_chain_check,
)

__version__ = "0.1.0"
