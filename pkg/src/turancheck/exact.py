"""Exact verification of the finite gamma-quotient identities and sign claims.

Every quantity handled here is a combination

    p / (Gamma(mu+a) Gamma(mu+b))  +  q / (Gamma(mu) Gamma(mu+a+b))

with exact rational p, q (class `GammaQuotientSum`).  For mu > 0 and
a, b >= 0 both gamma products are positive, so identities reduce to exact
rational comparisons and signs reduce to the sign of p + q*r with
r = Gamma(mu+a)Gamma(mu+b) / (Gamma(mu)Gamma(mu+a+b)).  When a or b is an
integer, r itself is an exact rational (a Pochhammer quotient) and the sign
is decided in pure rational arithmetic.  Otherwise r is certified by
adaptive-precision interval arithmetic, which still yields a rigorous sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import mpmath

from .gamma_core import gamma_exact, pochhammer_rational
from .report import FAIL, PASS, CheckResult

Rational = Union[Fraction, int]

__all__ = [
    "GammaQuotientSum",
    "SignPattern",
    "HypothesisViolation",
    "PrecisionExhausted",
    "chu_vandermonde",
    "gamma_sum_terms",
    "gamma_sum_closed",
    "telescoping_sum",
    "m_k_values",
    "weighted_sum_check",
    "phi_positivity_exact",
    "lambda_positivity_exact",
    "conjecture_sum",
]


class HypothesisViolation(ValueError):
    """A check was invoked outside the hypotheses it assumes."""


class PrecisionExhausted(ArithmeticError):
    """Interval arithmetic could not separate a value from zero."""


def _frac(x: Rational) -> Fraction:
    return Fraction(x)


def _iv_rational(x: Fraction):
    return mpmath.iv.mpf(x.numerator) / mpmath.iv.mpf(x.denominator)


@lru_cache(maxsize=16384)
def _gamma_ratio_interval(mu: Fraction, a: Fraction, b: Fraction, prec: int):
    """Interval enclosure of Gamma(mu+a)Gamma(mu+b)/(Gamma(mu)Gamma(mu+a+b))."""
    old = mpmath.iv.prec
    mpmath.iv.prec = prec
    try:
        g = mpmath.iv.gamma
        return (g(_iv_rational(mu + a)) * g(_iv_rational(mu + b))) / (
            g(_iv_rational(mu)) * g(_iv_rational(mu + a + b))
        )
    finally:
        mpmath.iv.prec = old


@dataclass(frozen=True)
class GammaQuotientSum:
    """p/(G(mu+a)G(mu+b)) + q/(G(mu)G(mu+a+b)) with exact rational p, q."""

    mu: Fraction
    a: Fraction
    b: Fraction
    p: Fraction
    q: Fraction

    @classmethod
    def zero(cls, mu: Rational, a: Rational, b: Rational) -> "GammaQuotientSum":
        return cls(_frac(mu), _frac(a), _frac(b), Fraction(0), Fraction(0))

    def _check_basis(self, other: "GammaQuotientSum"):
        if (self.mu, self.a, self.b) != (other.mu, other.a, other.b):
            raise ValueError("gamma bases differ")

    def __add__(self, other: "GammaQuotientSum") -> "GammaQuotientSum":
        self._check_basis(other)
        return GammaQuotientSum(self.mu, self.a, self.b, self.p + other.p, self.q + other.q)

    def scale(self, c: Rational) -> "GammaQuotientSum":
        c = _frac(c)
        return GammaQuotientSum(self.mu, self.a, self.b, self.p * c, self.q * c)

    def gamma_ratio_rational(self) -> Optional[Fraction]:
        """r = G(mu+a)G(mu+b)/(G(mu)G(mu+a+b)) as a Fraction, if it is one.

        Rational whenever a or b is a non-negative integer, since the shift
        then cancels into Pochhammer symbols.
        """
        for shift, fixed in ((self.a, self.b), (self.b, self.a)):
            if shift.denominator == 1 and shift >= 0:
                n = shift.numerator
                num = pochhammer_rational(self.mu, n)
                den = pochhammer_rational(self.mu + fixed, n)
                if den == 0:
                    return None
                return num / den
        return None

    def sign(self, max_prec: int = 3000) -> int:
        """Certified sign of the value; requires mu > 0 and a, b >= 0."""
        if self.mu <= 0 or self.a < 0 or self.b < 0:
            raise HypothesisViolation(
                "exact sign path requires mu > 0 and a, b >= 0"
            )
        if self.p == 0 and self.q == 0:
            return 0
        if self.q == 0:
            return 1 if self.p > 0 else -1
        if self.p == 0:
            return 1 if self.q > 0 else -1
        if (self.p > 0) == (self.q > 0):
            return 1 if self.p > 0 else -1
        r = self.gamma_ratio_rational()
        if r is not None:
            s = self.p + self.q * r
            return 0 if s == 0 else (1 if s > 0 else -1)
        return self._interval_sign(max_prec)

    def _interval_sign(self, max_prec: int) -> int:
        prec = 80
        while prec <= max_prec:
            r = _gamma_ratio_interval(self.mu, self.a, self.b, prec)
            old = mpmath.iv.prec
            mpmath.iv.prec = prec
            try:
                s = _iv_rational(self.p) + _iv_rational(self.q) * r
            finally:
                mpmath.iv.prec = old
            if s.a > 0:
                return 1
            if s.b < 0:
                return -1
            prec *= 2
        raise PrecisionExhausted(
            f"could not separate {self} from zero at {max_prec} bits"
        )

    def equals(self, other: "GammaQuotientSum") -> bool:
        """Exact equality of values (not merely of components)."""
        self._check_basis(other)
        if self.p == other.p and self.q == other.q:
            return True
        r = self.gamma_ratio_rational()
        if r is not None:
            return self.p + self.q * r == other.p + other.q * r
        return False

    def as_fraction(self) -> Optional[Fraction]:
        """Plain rational value when all four gamma arguments are positive integers."""
        args = (self.mu + self.a, self.mu + self.b, self.mu, self.mu + self.a + self.b)
        if any(t.denominator != 1 or t <= 0 for t in args):
            if self.p == 0 and self.q == 0:
                return Fraction(0)
            return None
        ga, gb, g0, gab = (gamma_exact(t) for t in args)
        return self.p / (ga * gb) + self.q / (g0 * gab)

    def __float__(self) -> float:
        lg = math.lgamma
        x = math.exp(-lg(self.mu + self.a) - lg(self.mu + self.b))
        y = math.exp(-lg(self.mu) - lg(self.mu + self.a + self.b))
        return float(self.p) * x + float(self.q) * y


@dataclass
class SignPattern:
    """Signs of a sequence of exact values, zeros treated as neutral."""

    values: List[GammaQuotientSum]
    signs: List[int]

    @property
    def change_count(self) -> int:
        nonzero = [s for s in self.signs if s != 0]
        return sum(1 for x, y in zip(nonzero, nonzero[1:]) if x != y)

    @property
    def last_positive(self) -> bool:
        return bool(self.signs) and self.signs[-1] > 0

    @property
    def legal(self) -> bool:
        """At most one sign change, from minus to plus, ending positive."""
        nonzero = [s for s in self.signs if s != 0]
        return (
            self.last_positive
            and self.change_count <= 1
            and nonzero == sorted(nonzero)
        )


def chu_vandermonde(m: int, a: Rational, c: Rational) -> Tuple[Fraction, Fraction]:
    """Term sum and closed form of sum_k (-m)_k (a)_k / ((c)_k k!)."""
    a, c = _frac(a), _frac(c)
    if c.denominator == 1 and -m + 1 <= c <= 0:
        raise ZeroDivisionError(f"(c)_k vanishes for c = {c}, m = {m}")
    lhs = Fraction(0)
    for k in range(m + 1):
        lhs += (
            pochhammer_rational(-m, k)
            * pochhammer_rational(a, k)
            / (pochhammer_rational(c, k) * math.factorial(k))
        )
    rhs = pochhammer_rational(c - a, m) / pochhammer_rational(c, m)
    return lhs, rhs


def _term_pair(
    m: int, k: int, mu: Fraction, a: Fraction, b: Fraction
) -> GammaQuotientSum:
    """The k-th unfolded summand 1/(G(k+mu+a)G(m-k+mu+b)) - 1/(G(m-k+mu)G(k+mu+a+b))."""
    p = 1 / (pochhammer_rational(mu + a, k) * pochhammer_rational(mu + b, m - k))
    q = -1 / (pochhammer_rational(mu, m - k) * pochhammer_rational(mu + a + b, k))
    return GammaQuotientSum(mu, a, b, p, q)


def gamma_sum_terms(m: int, mu: Rational, a: Rational, b: Rational) -> GammaQuotientSum:
    """Exact value of sum_k 1/(k!(m-k)!) [1/(G(k+mu+a)G(m-k+mu+b)) - 1/(G(m-k+mu)G(k+mu+a+b))]."""
    mu, a, b = _frac(mu), _frac(a), _frac(b)
    total = GammaQuotientSum.zero(mu, a, b)
    for k in range(m + 1):
        w = Fraction(1, math.factorial(k) * math.factorial(m - k))
        total = total + _term_pair(m, k, mu, a, b).scale(w)
    return total


def gamma_sum_closed(m: int, mu: Rational, a: Rational, b: Rational) -> GammaQuotientSum:
    """Closed form: Pochhammer prefactor times the m-shifted quotient difference."""
    mu, a, b = _frac(mu), _frac(a), _frac(b)
    pre = pochhammer_rational(2 * mu + a + b + m - 1, m) / math.factorial(m)
    p = pre / (pochhammer_rational(mu + a, m) * pochhammer_rational(mu + b, m))
    q = -pre / (pochhammer_rational(mu, m) * pochhammer_rational(mu + a + b, m))
    return GammaQuotientSum(mu, a, b, p, q)


def telescoping_sum(
    m: int, mu: Rational, beta: Rational
) -> Tuple[GammaQuotientSum, GammaQuotientSum]:
    """Telescoping sum S_m(mu, beta): (term sum, closed form), both exact."""
    mu, beta = _frac(mu), _frac(beta)
    total = GammaQuotientSum.zero(mu, Fraction(1), beta)
    for k in range(m + 1):
        p = 1 / (pochhammer_rational(mu + 1, k) * pochhammer_rational(mu + beta, m - k))
        q = -1 / (pochhammer_rational(mu, k) * pochhammer_rational(mu + beta + 1, m - k))
        total = total + GammaQuotientSum(mu, Fraction(1), beta, p, q)
    num = pochhammer_rational(mu + beta, m + 1) - pochhammer_rational(mu, m + 1)
    den = pochhammer_rational(mu, m + 1) * pochhammer_rational(mu + beta + 1, m)
    closed = GammaQuotientSum(mu, Fraction(1), beta, Fraction(0), num / den)
    return total, closed


def m_k_single(
    m: int, k: int, mu: Fraction, a: Fraction, b: Fraction
) -> GammaQuotientSum:
    """Folded coefficient M_k(a, b, mu) for 0 <= k <= m/2."""
    if 2 * k > m:
        raise ValueError("M_k is defined for k <= m/2")
    if 2 * k == m:
        p = 1 / (pochhammer_rational(mu + a, k) * pochhammer_rational(mu + b, k))
        q = -1 / (pochhammer_rational(mu, k) * pochhammer_rational(mu + a + b, k))
        return GammaQuotientSum(mu, a, b, p, q)
    u = 1 / (pochhammer_rational(mu + a, k) * pochhammer_rational(mu + b, m - k))
    v = 1 / (pochhammer_rational(mu + b, k) * pochhammer_rational(mu + a, m - k))
    r = -1 / (pochhammer_rational(mu, m - k) * pochhammer_rational(mu + a + b, k))
    s = -1 / (pochhammer_rational(mu, k) * pochhammer_rational(mu + a + b, m - k))
    return GammaQuotientSum(mu, a, b, u + v, r + s)


def m_k_values(m: int, mu: Rational, a: Rational, b: Rational) -> SignPattern:
    """M_0 .. M_[m/2] with certified signs."""
    mu, a, b = _frac(mu), _frac(a), _frac(b)
    values = [m_k_single(m, k, mu, a, b) for k in range(m // 2 + 1)]
    return SignPattern(values=values, signs=[v.sign() for v in values])


def _sequence_hypotheses(f: Sequence[Fraction]):
    if not f or all(x == 0 for x in f):
        raise HypothesisViolation("sequence is trivial")
    if any(x < 0 for x in f):
        raise HypothesisViolation("sequence has negative entries")
    support = [i for i, x in enumerate(f) if x > 0]
    if support != list(range(support[0], support[-1] + 1)):
        raise HypothesisViolation("sequence has internal zeros")
    for k in range(1, len(f) - 1):
        if f[k] ** 2 < f[k - 1] * f[k + 1]:
            raise HypothesisViolation(f"sequence not log-concave at k={k}")


def weighted_sum_check(f: Sequence[Rational], A: Sequence[Rational]) -> bool:
    """sum_{k<=n/2} f_k f_{n-k} A_k >= 0 under the weighted-sum hypotheses.

    Raises HypothesisViolation if f is not doubly positive or A is not a
    legal (at most one minus-to-plus change, positive last entry,
    non-negative total) weight sequence.
    """
    f = [_frac(x) for x in f]
    A = [_frac(x) for x in A]
    n = len(f) - 1
    if len(A) != n // 2 + 1:
        raise HypothesisViolation(f"A must have length {n // 2 + 1} for n = {n}")
    _sequence_hypotheses(f)
    if A[-1] <= 0:
        raise HypothesisViolation("A must end with a positive entry")
    if sum(A) < 0:
        raise HypothesisViolation("sum of A must be non-negative")
    nonzero = [1 if x > 0 else -1 for x in A if x != 0]
    if nonzero != sorted(nonzero):
        raise HypothesisViolation("A has an illegal sign pattern")
    total = sum(f[k] * f[n - k] * A[k] for k in range(n // 2 + 1))
    return total >= 0


def _coefficient_sum(
    m: int,
    weights: Sequence[Fraction],
    mu: Fraction,
    a: Fraction,
    b: Fraction,
    factorial_weights: bool,
) -> GammaQuotientSum:
    """sum over the folded range of w_k w_{m-k} [/(k!(m-k)!)] M_k(a, b, mu)."""
    total = GammaQuotientSum.zero(mu, a, b)
    for k in range(m // 2 + 1):
        w = weights[k] * weights[m - k]
        if factorial_weights:
            w /= math.factorial(k) * math.factorial(m - k)
        if w != 0:
            total = total + m_k_single(m, k, mu, a, b).scale(w)
    return total


def phi_positivity_exact(
    seq: Sequence[Rational],
    mu: Rational,
    a: Rational,
    b: Rational,
    m_max: int,
    require_hypotheses: bool = True,
) -> CheckResult:
    """phi_m > 0 for all m <= m_max, with certified exact signs.

    With require_hypotheses=False the sequence conditions are not enforced
    and a non-positive coefficient is a reported finding, not an error.
    """
    mu, a, b = _frac(mu), _frac(a), _frac(b)
    if a <= 0 or b <= 0:
        raise HypothesisViolation("requires a, b > 0")
    if mu <= 0:
        raise HypothesisViolation("exact path requires mu > 0")
    f = [_frac(x) for x in seq]
    if len(f) <= m_max:
        raise ValueError("sequence too short for requested order")
    if require_hypotheses:
        _sequence_hypotheses(f[: m_max + 1])
    params = {"mu": mu, "a": a, "b": b, "m_max": m_max}
    for m in range(m_max + 1):
        value = _coefficient_sum(m, f, mu, a, b, factorial_weights=True)
        if value.sign() <= 0:
            return CheckResult(
                "phi.coefficients_positive", params, FAIL,
                margin=value.as_fraction(),
                counterexample={"m": m, "p": value.p, "q": value.q, **params},
            )
    return CheckResult("phi.coefficients_positive", params, PASS, margin=None)


def lambda_positivity_exact(
    seq: Sequence[Rational],
    mu: Rational,
    beta: Rational,
    m_max: int,
    require_hypotheses: bool = True,
) -> CheckResult:
    """lambda_m > 0 for all m <= m_max; fully rational since the unit shift collapses."""
    mu, beta = _frac(mu), _frac(beta)
    if beta <= 0:
        raise HypothesisViolation("requires beta > 0")
    if mu <= 0:
        raise HypothesisViolation("exact path requires mu > 0")
    g = [_frac(x) for x in seq]
    if len(g) <= m_max:
        raise ValueError("sequence too short for requested order")
    if require_hypotheses:
        _sequence_hypotheses(g[: m_max + 1])
    params = {"mu": mu, "beta": beta, "m_max": m_max}
    for m in range(m_max + 1):
        value = _coefficient_sum(m, g, mu, Fraction(1), beta, factorial_weights=False)
        if value.sign() <= 0:
            return CheckResult(
                "lambda.coefficients_positive", params, FAIL,
                margin=value.as_fraction(),
                counterexample={"m": m, "p": value.p, "q": value.q, **params},
            )
    return CheckResult("lambda.coefficients_positive", params, PASS, margin=None)


def conjecture_sum(
    m: int, mu: Rational, alpha: Rational, beta: Rational
) -> GammaQuotientSum:
    """Unweighted finite sum whose positivity is the open log-concavity claim."""
    mu, alpha, beta = _frac(mu), _frac(alpha), _frac(beta)
    if alpha <= 0 or beta <= 0:
        raise HypothesisViolation("requires alpha, beta > 0")
    if mu + alpha < 0 or mu + beta < 0 or mu < -1:
        raise HypothesisViolation("requires mu >= -1, mu+alpha >= 0, mu+beta >= 0")
    total = GammaQuotientSum.zero(mu, alpha, beta)
    for k in range(m + 1):
        total = total + _term_pair(m, k, mu, alpha, beta)
    return total
