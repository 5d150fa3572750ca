"""Applications: modified Bessel, Kummer, generalized hypergeometric series.

Everything here is a thin specialization of the reciprocal-gamma series:
I_nu is the f-series with unit coefficients, the exponential remainder and
the Kummer parameter derivative are g-series, and the hypergeometric term
sequences feed the exact log-concavity checks.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .gamma_core import pochhammer_rational, recip_gamma
from .report import FAIL, PASS, CheckResult
from .series import (
    REL_TOL,
    CoefficientSequence,
    ConvergenceError,
    SeriesValue,
    _sum_series,
    eval_f,
    eval_g,
    product_difference,
    turan_bound_constants,
)

Rational = Union[Fraction, int]

_BESSEL_U_MAX = 600.0


def bessel_i(nu: float, u: float) -> float:
    """Modified Bessel function I_nu(u) by direct series, nu > -2, u >= 0.

    The reciprocal-gamma weight absorbs the n = 0 pole for nu in (-2, -1],
    so no recurrence is needed there.  Negative integer orders use the
    symmetry I_{-n} = I_n implicitly through the vanishing leading terms.
    """
    if u < 0:
        raise ValueError("requires u >= 0")
    if nu <= -2 and nu != int(nu):
        # integer orders below -2 still work via I_{-n} = I_n (vanishing leading terms)
        raise ValueError("requires nu > -2 or integer nu")
    if u > _BESSEL_U_MAX:
        raise OverflowError(f"u = {u} beyond configured range {_BESSEL_U_MAX}")
    if u == 0.0:
        if nu == 0:
            return 1.0
        if nu > 0 or nu == int(nu):
            return 0.0
        return math.inf
    half = u / 2.0
    body = eval_f(CoefficientSequence.ones(), nu + 1.0, half * half)
    return half**nu * body.value


def bessel_turanian(nu: float, epsilon: float, u: float) -> float:
    """I_nu(u)^2 - I_{nu+eps}(u) I_{nu-eps}(u)."""
    if nu < -1 or nu - epsilon < -2:
        raise ValueError("requires nu >= -1 and nu - epsilon >= -2")
    if epsilon == 0:
        return 0.0
    c = bessel_i(nu, u)
    return product_difference(c, c, bessel_i(nu + epsilon, u), bessel_i(nu - epsilon, u))


def bessel_bounds_check(nu: float, epsilon: float, u: float) -> CheckResult:
    """Sandwich (u/2)^{2 nu} A_eps(nu+1) <= Delta_eps(nu, u) <= B_eps(nu+1) I_nu(u)^2."""
    params = {"nu": nu, "epsilon": epsilon, "u": u}
    delta = bessel_turanian(nu, epsilon, u)
    A, B = turan_bound_constants(nu + 1.0, epsilon)
    if u == 0.0:
        lower = 0.0 if nu > 0 else (A if nu == 0 else math.inf)
    else:
        lower = (u / 2.0) ** (2.0 * nu) * A
    i_nu = bessel_i(nu, u)
    upper = B * i_nu * i_nu if math.isfinite(B) else math.inf
    margin_low = delta - lower
    margin_high = upper - delta
    scale = max(abs(delta), abs(lower), 1.0e-300)
    ok = margin_low >= -REL_TOL * scale and (
        math.isinf(upper) or margin_high >= -REL_TOL * max(abs(delta), abs(upper))
    )
    margin = min(margin_low, margin_high)
    return CheckResult("bessel.sandwich", params, PASS if ok else FAIL, margin=margin)


@dataclass(frozen=True)
class HypergeometricParams:
    """Upper and lower parameter lists of a pFq series."""

    upper: Tuple[float, ...]
    lower: Tuple[float, ...]

    def __init__(self, upper: Sequence[float], lower: Sequence[float]):
        object.__setattr__(self, "upper", tuple(upper))
        object.__setattr__(self, "lower", tuple(lower))
        if len(self.upper) > len(self.lower) + 1:
            raise ValueError("requires p <= q + 1 for convergence")
        for b in self.lower:
            if b <= 0 and b == int(b):
                raise ValueError(f"lower parameter {b} is a non-positive integer")


def pfq(params: HypergeometricParams, x: float) -> float:
    """Generalized hypergeometric sum; |x| < 1 required when p = q + 1."""
    p, q = len(params.upper), len(params.lower)
    if p == q + 1 and abs(x) >= 1:
        raise ArithmeticError("series diverges for |x| >= 1 when p = q + 1")

    def terms():
        t, n = 1.0, 0
        while True:
            yield t
            num = 1.0
            for a in params.upper:
                num *= a + n
            den = 1.0
            for b in params.lower:
                den *= b + n
            t *= num / den * x / (n + 1)
            n += 1

    return _sum_series(terms()).value


def kummer(a: float, b: float, x: float) -> float:
    """1F1(a; b; x)."""
    if b <= 0 and b == int(b):
        raise ValueError(f"b = {b} is a pole of 1F1")
    return pfq(HypergeometricParams([a], [b]), x)


def kummer_regularized(a: float, b: float, x: float) -> float:
    """1F1(a; b; x)/Gamma(b), entire in b."""

    def terms():
        poch, pw, fact, n = 1.0, 1.0, 1.0, 0
        while True:
            yield poch * pw / fact * recip_gamma(b + n)
            poch *= a + n
            n += 1
            pw *= x
            fact *= n

    return _sum_series(terms()).value


def kummer_derivative(a: float, b: float, x: float) -> float:
    """d/dx 1F1(a; b; x) = (a/b) 1F1(a+1; b+1; x)."""
    return a / b * kummer(a + 1, b + 1, x)


def pochhammer_over_factorial(eta: Rational) -> CoefficientSequence:
    """g_k = (eta)_k / k!, log-concave iff eta >= 1."""
    eta = Fraction(eta)

    def fn(k: int) -> Fraction:
        return pochhammer_rational(eta, k) / math.factorial(k)

    return CoefficientSequence.from_rational_function(fn, name=f"poch({eta})/k!")


def exp_remainder(eta: float, nu: float, x: float) -> float:
    """R_{eta, nu}(x) = x^{nu+1} sum_k (eta)_k x^k / (Gamma(nu+2+k) k!)."""
    if x < 0:
        raise ValueError("requires x >= 0")
    if eta < 1:
        warnings.warn("eta < 1: the remainder coefficients are not log-concave")
    if x == 0.0:
        return 0.0
    seq = pochhammer_over_factorial(Fraction(eta).limit_denominator(10**12))
    return x ** (nu + 1.0) * eval_g(seq, nu + 2.0, x).value


def exp_remainder_turan_bounds(eta: float, nu: float, x: float) -> CheckResult:
    """x^{2nu+2}/((nu+2)Gamma(nu+2)^2) <= R^2 - R_+ R_- <= R^2/(nu+2)."""
    params = {"eta": eta, "nu": nu, "x": x}
    r = exp_remainder(eta, nu, x)
    delta = product_difference(
        r, r, exp_remainder(eta, nu + 1, x), exp_remainder(eta, nu - 1, x)
    )
    A, _ = turan_bound_constants(nu + 2.0, 1.0)
    lower = x ** (2.0 * nu + 2.0) * A if x > 0 else 0.0
    upper = r * r / (nu + 2.0) if nu + 2.0 > 0 else math.inf
    scale = max(abs(delta), abs(lower), abs(r * r), 1.0e-300)
    ok = delta - lower >= -REL_TOL * scale and (
        math.isinf(upper) or upper - delta >= -REL_TOL * scale
    )
    margin = min(delta - lower, upper - delta)
    return CheckResult(
        "exp_remainder.sandwich", params, PASS if ok else FAIL, margin=margin
    )


def kummer_logderiv_bounds(a: float, b: float, x: float) -> Tuple[float, float]:
    """Bounds enclosing F'(a;b;x)/F(a;b;x) from the Turanian in 1/Gamma(b).

    Two quadratic constraints pin the ratio.  For b > a >= 1 their larger
    roots come out as (lower, upper) = (r1, r2); for 1 <= b < a the pair
    interchanges to (r2, r1).  At b = a both coincide (removable
    degeneracy) and the common value is returned twice.

    For 0 < b < 1 the second quadratic has positive constant term, so its
    admissible region is the union of two rays rather than an interval and
    the active ray switches as x grows; that constraint then yields no
    two-sided bound.  In that regime only the first quadratic is used:
    the ratio lies strictly between its two roots, giving the rigorous
    (if looser) pair (max(r1_minus, 0), r1).
    """
    if a < 1:
        raise ValueError("requires a >= 1")
    if b <= 0:
        raise ValueError("requires b > 0")
    if x <= 0:
        raise ValueError("requires x > 0")
    t = x + 1.0 - b
    disc1 = math.sqrt(t * t + 4.0 * x * (a - 1.0))
    r1 = (t + disc1) / (2.0 * x)
    if b < 1.0:
        r1_minus = (t - disc1) / (2.0 * x)
        return max(r1_minus, 0.0), r1
    r2 = (t + math.sqrt(t * t + 4.0 * x * a * (b - 1.0) / b)) / (2.0 * x)
    if b > a:
        return r1, r2
    if b < a:
        return r2, r1
    return r1, r2


def contiguous_residuals(a: float, b: float, x: float) -> Tuple[float, float, float]:
    """Raw residuals of the three contiguous relations; all should be ~0."""
    F = kummer(a, b, x)
    Fp = kummer_derivative(a, b, x)
    r1 = a * F - a * kummer(a + 1, b, x) + x * Fp
    r2 = a * b * kummer(a + 1, b, x) - b * (a + x) * F + (b - a) * x * kummer(a, b + 1, x)
    r3 = b * (b - 1.0) * (kummer(a, b - 1.0, x) - F) - a * x * kummer(a + 1, b + 1, x)
    return r1, r2, r3


def elementary_symmetric(values: Sequence[Rational]) -> List[Fraction]:
    """e_0 .. e_q of the given values, exact."""
    e = [Fraction(1)]
    for v in values:
        v = Fraction(v)
        e = e + [Fraction(0)]
        for k in range(len(e) - 1, 0, -1):
            e[k] = e[k] + v * e[k - 1]
    return e


@dataclass
class SymmetricChainReport:
    ratios: List[Fraction]
    satisfied: bool
    violated_index: Optional[int] = None


def symmetric_chain_check(
    a_list: Sequence[Rational], b_list: Sequence[Rational], r: int
) -> SymmetricChainReport:
    """Chain e_q(b)/e_{q-r}(a) <= ... <= e_{r+1}(b)/e_1(a) <= e_r(b)."""
    q = len(b_list)
    if not 0 <= r <= q:
        raise ValueError("requires 0 <= r <= q")
    if len(a_list) != q - r:
        raise ValueError(f"expected {q - r} upper parameters, got {len(a_list)}")
    if any(Fraction(v) <= 0 for v in list(a_list) + list(b_list)):
        raise ValueError("parameters must be positive")
    eb = elementary_symmetric(b_list)
    ea = elementary_symmetric(a_list)
    ratios = [eb[q - j] / ea[q - r - j] for j in range(q - r + 1)]
    violated = None
    for j in range(len(ratios) - 1):
        if ratios[j] > ratios[j + 1]:
            violated = j
            break
    return SymmetricChainReport(ratios=ratios, satisfied=violated is None, violated_index=violated)


def hyperterm_sequence(
    a_list: Sequence[Rational], b_list: Sequence[Rational], n_max: int
) -> List[Fraction]:
    """f_n = prod (a_i)_n / prod (b_j)_n, exact, for n = 0..n_max."""
    out = []
    for n in range(n_max + 1):
        num = Fraction(1)
        for a in a_list:
            num *= pochhammer_rational(a, n)
        den = Fraction(1)
        for b in b_list:
            den *= pochhammer_rational(b, n)
        out.append(num / den)
    return out


def hyperterm_logconcavity(
    a_list: Sequence[Rational], b_list: Sequence[Rational], n_max: int
) -> bool:
    """Exact check of f_{n-1} f_{n+1} <= f_n^2 up to n_max."""
    f = hyperterm_sequence(a_list, b_list, n_max + 1)
    return all(f[n] * f[n] >= f[n - 1] * f[n + 1] for n in range(1, n_max + 1))


def harmonic_shift_weights(a: Rational, n_max: int) -> List[Fraction]:
    """w_k = psi(a+k) - psi(a) = sum_{j<k} 1/(a+j), exact for rational a."""
    a = Fraction(a)
    out = [Fraction(0)]
    for k in range(n_max):
        out.append(out[-1] + Fraction(1, 1) / (a + k))
    return out


def param_derivative_sequence(a: Rational, n_max: int = 4096) -> CoefficientSequence:
    """h_k = (psi(a+k) - psi(a)) (a)_k / k!, with h_0 = 0 as a leading zero."""
    a = Fraction(a)

    def fn(k: int) -> Fraction:
        if k > n_max:
            raise ValueError("weight table exhausted")
        w = Fraction(0)
        for j in range(k):
            w += Fraction(1, 1) / (a + j)
        return w * pochhammer_rational(a, k) / math.factorial(k)

    return CoefficientSequence.from_rational_function(fn, name=f"dkummer({a})")


def kummer_param_derivative(a: float, b: float, x: float) -> float:
    """d/da [1F1(a; b; x)/Gamma(b)] by its psi-weighted series."""
    if x < 0:
        raise ValueError("requires x >= 0")
    if a < 1:
        warnings.warn("a < 1: the weight sequence need not be log-concave")

    def terms():
        w, poch, pw, fact, n = 0.0, 1.0, 1.0, 1.0, 0
        while True:
            yield w * poch * pw / fact * recip_gamma(b + n)
            w += 1.0 / (a + n)
            poch *= a + n
            n += 1
            pw *= x
            fact *= n

    return _sum_series(terms()).value
