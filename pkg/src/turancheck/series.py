"""Series in reciprocal gamma weights and their Turanian combinations.

Two families are evaluated:

    f(mu, x) = sum_n f_n x^n / (n! Gamma(mu + n))
    g(mu, x) = sum_n g_n x^n / Gamma(mu + n)

together with the coefficient arrays and product differences
(phi, lambda, generalized Turanians) built from them.  All sums are
truncated with a certified geometric tail bound; Turanians are computed
as product differences of independently truncated sums, with an exact
re-evaluation of the difference when cancellation would otherwise
swallow the sign.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Union

from .gamma_core import recip_gamma

Rational = Union[Fraction, int]

REL_TOL = 1e-9
_SERIES_CAP = 10_000
_STOP_FACTOR = 1e-16
_CANCEL_GUARD = 1e3 * sys.float_info.epsilon


class ConvergenceError(ArithmeticError):
    """Series terms failed to decay within the configured order cap."""


@dataclass(frozen=True)
class SeriesValue:
    value: float
    truncation_order: int
    tail_bound: float

    def __float__(self) -> float:
        return self.value


def rel_close(x: float, y: float, tol: float = REL_TOL) -> bool:
    return abs(x - y) <= tol * max(abs(x), abs(y), 1e-300)


class CoefficientSequence:
    """Non-negative coefficient sequence with an optional exact rational view."""

    def __init__(
        self,
        term: Callable[[int], float],
        rational_term: Optional[Callable[[int], Fraction]] = None,
        name: str = "seq",
    ):
        self.term = term
        self.rational_term = rational_term
        self.name = name

    def __call__(self, k: int) -> float:
        return self.term(k)

    def __repr__(self):
        return f"CoefficientSequence({self.name})"

    @classmethod
    def ones(cls) -> "CoefficientSequence":
        return cls(lambda k: 1.0, lambda k: Fraction(1), name="ones")

    @classmethod
    def from_list(cls, values: Sequence[Rational], name: str = "list") -> "CoefficientSequence":
        exact = [Fraction(v) for v in values]

        def term(k: int) -> float:
            return float(exact[k]) if k < len(exact) else 0.0

        def rational(k: int) -> Fraction:
            return exact[k] if k < len(exact) else Fraction(0)

        return cls(term, rational, name=name)

    @classmethod
    def from_rational_function(
        cls, fn: Callable[[int], Fraction], name: str = "fn"
    ) -> "CoefficientSequence":
        return cls(lambda k: float(fn(k)), fn, name=name)

    def rational_prefix(self, n: int) -> List[Fraction]:
        if self.rational_term is None:
            raise ValueError(f"{self!r} has no exact rational view")
        return [self.rational_term(k) for k in range(n)]

    def prefix(self, n: int) -> List[float]:
        return [self.term(k) for k in range(n)]

    def leading_zero_count(self, n: int = 40) -> int:
        count = 0
        for k in range(n):
            if self.term(k) != 0.0:
                break
            count += 1
        return count

    def flags(self, n: int = 40) -> dict:
        """Structural flags checked on the first n terms."""
        t = self.prefix(n)
        support = [k for k, v in enumerate(t) if v > 0]
        no_internal_zeros = bool(support) and support == list(
            range(support[0], support[-1] + 1)
        )
        log_concave = all(
            t[k] * t[k] >= t[k - 1] * t[k + 1] for k in range(1, n - 1)
        )
        w = [v * math.factorial(k) for k, v in enumerate(t)]
        factorial_weighted_log_concave = all(
            w[k] * w[k] >= w[k - 1] * w[k + 1] for k in range(1, n - 1)
        )
        return {
            "log_concave": log_concave,
            "no_internal_zeros": no_internal_zeros,
            "factorial_weighted_log_concave": factorial_weighted_log_concave,
        }


@dataclass(frozen=True)
class TuranianSpec:
    """One inequality instance: (mu, a, b) for the f-form or (mu, beta) for the g-form."""

    mu: float
    a: Optional[float] = None
    b: Optional[float] = None
    beta: Optional[float] = None

    @property
    def form(self) -> str:
        return "g" if self.beta is not None else "f"

    def __post_init__(self):
        if self.mu < -1:
            raise ValueError("requires mu >= -1")
        if self.beta is not None:
            if self.a is not None or self.b is not None:
                raise ValueError("give either (a, b) or beta, not both")
            if self.beta <= 0 or self.mu + self.beta < 0:
                raise ValueError("g-form requires beta > 0 and mu + beta >= 0")
        else:
            if self.a is None or self.b is None:
                raise ValueError("f-form requires both a and b")
            if self.a <= 0 or self.b <= 0:
                raise ValueError("f-form requires a, b > 0")
            if self.mu + self.a < 0 or self.mu + self.b < 0:
                raise ValueError("requires mu + a >= 0 and mu + b >= 0")


def _sum_series(terms: Iterator[float]) -> SeriesValue:
    total = 0.0
    prev = 0.0
    started = False
    zero_run = 0
    for n, t in enumerate(terms):
        if n >= _SERIES_CAP:
            break
        total += t
        if t == 0.0:
            if started:
                zero_run += 1
                # after the series has started, zeros only occur at x = 0
                if zero_run >= 2:
                    return SeriesValue(total, n, 0.0)
            elif n >= 64:
                return SeriesValue(total, n, 0.0)
            continue
        if started:
            ratio = abs(t) / abs(prev) if prev != 0.0 else 1.0
            if ratio < 0.5 and abs(t) < _STOP_FACTOR * max(abs(total), 1e-300):
                tail = abs(t) * ratio / (1.0 - ratio)
                return SeriesValue(total, n, tail)
        started = True
        zero_run = 0
        prev = t
    raise ConvergenceError("series did not converge within the order cap")


def eval_f(seq: CoefficientSequence, mu: float, x: float) -> SeriesValue:
    """sum_n seq(n) x^n / (n! Gamma(mu + n)) with a certified tail bound."""
    if x < 0:
        raise ValueError("requires x >= 0")

    def terms():
        pw, fact, n = 1.0, 1.0, 0
        while True:
            yield seq(n) * pw / fact * recip_gamma(mu + n)
            n += 1
            pw *= x
            fact *= n

    return _sum_series(terms())


def eval_g(seq: CoefficientSequence, mu: float, x: float) -> SeriesValue:
    """sum_n seq(n) x^n / Gamma(mu + n) with a certified tail bound."""
    if x < 0:
        raise ValueError("requires x >= 0")

    def terms():
        pw, n = 1.0, 0
        while True:
            yield seq(n) * pw * recip_gamma(mu + n)
            n += 1
            pw *= x

    return _sum_series(terms())


def phi_coefficients(
    seq: CoefficientSequence, mu: float, a: float, b: float, m_max: int
) -> List[float]:
    """Cauchy-product coefficients of f(a+mu)f(b+mu) - f(a+b+mu)f(mu)."""
    if a <= 0 or b <= 0:
        raise ValueError("requires a, b > 0")
    out = []
    for m in range(m_max + 1):
        acc = 0.0
        for k in range(m + 1):
            w = seq(k) * seq(m - k) / (math.factorial(k) * math.factorial(m - k))
            acc += w * (
                recip_gamma(k + mu + a) * recip_gamma(m - k + mu + b)
                - recip_gamma(m - k + mu) * recip_gamma(k + mu + a + b)
            )
        out.append(acc)
    return out


def lambda_coefficients(
    seq: CoefficientSequence, mu: float, beta: float, m_max: int
) -> List[float]:
    """Cauchy-product coefficients of g(mu+1)g(mu+beta) - g(mu)g(mu+beta+1)."""
    if beta <= 0:
        raise ValueError("requires beta > 0")
    out = []
    for m in range(m_max + 1):
        acc = 0.0
        for k in range(m + 1):
            w = seq(k) * seq(m - k)
            acc += w * (
                recip_gamma(k + mu + 1) * recip_gamma(m - k + mu + beta)
                - recip_gamma(k + mu) * recip_gamma(m - k + mu + beta + 1)
            )
        out.append(acc)
    return out


def product_difference(p1: float, p2: float, p3: float, p4: float) -> float:
    """p1*p2 - p3*p4, re-evaluated exactly when cancellation threatens the sign."""
    d = p1 * p2 - p3 * p4
    scale = max(abs(p1 * p2), abs(p3 * p4))
    if d != 0.0 and abs(d) < _CANCEL_GUARD * scale:
        d = float(
            Fraction(p1) * Fraction(p2) - Fraction(p3) * Fraction(p4)
        )
    return d


def eval_phi(seq: CoefficientSequence, spec: TuranianSpec, x: float) -> float:
    """f(a+mu)f(b+mu) - f(a+b+mu)f(mu) at x."""
    if spec.form != "f":
        raise ValueError("eval_phi requires an f-form spec")
    mu, a, b = spec.mu, spec.a, spec.b
    return product_difference(
        eval_f(seq, a + mu, x).value,
        eval_f(seq, b + mu, x).value,
        eval_f(seq, a + b + mu, x).value,
        eval_f(seq, mu, x).value,
    )


def eval_lambda(seq: CoefficientSequence, spec: TuranianSpec, x: float) -> float:
    """g(mu+1)g(mu+beta) - g(mu)g(mu+beta+1) at x."""
    if spec.form != "g":
        raise ValueError("eval_lambda requires a g-form spec")
    mu, beta = spec.mu, spec.beta
    return product_difference(
        eval_g(seq, mu + 1, x).value,
        eval_g(seq, mu + beta, x).value,
        eval_g(seq, mu, x).value,
        eval_g(seq, mu + beta + 1, x).value,
    )


def generalized_turanian(
    seq: CoefficientSequence,
    mu: float,
    epsilon: float,
    x: float,
    form: str = "f",
) -> float:
    """F(mu, x)^2 - F(mu+eps, x) F(mu-eps, x) for F in {f, g}."""
    if x < 0:
        raise ValueError("requires x >= 0")
    if mu - epsilon < -1 or mu < 0:
        raise ValueError("requires mu - epsilon >= -1 and mu >= 0")
    if form == "g" and epsilon != 1:
        raise ValueError("g-form Turanian is only established for epsilon = 1")
    if epsilon == 0:
        return 0.0
    ev = eval_f if form == "f" else eval_g
    center = ev(seq, mu, x).value
    return product_difference(
        center, center, ev(seq, mu + epsilon, x).value, ev(seq, mu - epsilon, x).value
    )


def gamma_signed(x: float) -> float:
    """Gamma(x) with sign, +-inf at non-positive integers."""
    rg = recip_gamma(x)
    if rg == 0.0:
        return math.inf
    return 1.0 / rg


def turan_bound_constants(mu: float, epsilon: float) -> tuple:
    """(A, B) of the generalized-Turanian sandwich A f_0^2 <= Delta <= B F(mu, x)^2.

    A is evaluated through reciprocal gammas and is always finite; B is
    +inf for mu <= 0 where the Gamma(mu)^2 factor blows up.
    """
    if mu - epsilon < -1:
        raise ValueError("requires mu - epsilon >= -1")
    A = recip_gamma(mu) ** 2 - recip_gamma(mu - epsilon) * recip_gamma(mu + epsilon)
    if mu <= 0:
        B = math.inf
    else:
        B = 1.0 - gamma_signed(mu) ** 2 * recip_gamma(mu - epsilon) * recip_gamma(
            mu + epsilon
        )
    return A, B
