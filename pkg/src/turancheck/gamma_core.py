"""Scalar gamma-function kernel.

Floating-point log-gamma, reciprocal gamma (entire), digamma and rising
factorials, plus exact rational rising factorials on `fractions.Fraction`.
The reciprocal gamma is the natural weight of all series in this package:
it is zero at non-positive integers and negative on (-1, 0), which encodes
the Gamma(0) = +inf / Gamma(-1) = -inf conventions without signed infinities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[Fraction, int]

__all__ = [
    "GammaArgument",
    "ln_gamma",
    "recip_gamma",
    "digamma",
    "pochhammer",
    "pochhammer_rational",
    "gamma_ratio",
]


@dataclass(frozen=True)
class GammaArgument:
    """A real gamma argument together with its pole status."""

    value: float

    @property
    def pole_flag(self) -> bool:
        return self.value <= 0 and self.value == int(self.value)


def ln_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if x <= 0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def recip_gamma(x: float) -> float:
    """1/Gamma(x), entire in x.

    Exactly zero at non-positive integers.  For x <= 0.5 the recurrence
    1/Gamma(x) = x * (x+1) * ... * (x+n-1) / Gamma(x+n) is applied, which
    makes the zeros exact and gets the sign right on (-1, 0).
    """
    if x > 0.5:
        return math.exp(-math.lgamma(x))
    prod = 1.0
    while x <= 0.5:
        if x == 0.0:
            return 0.0
        prod *= x
        x += 1.0
    return prod * math.exp(-math.lgamma(x))


# Asymptotic tail coefficients of psi: -B_{2n}/(2n), n = 1..7.
_DIGAMMA_TAIL = (
    Fraction(-1, 12),
    Fraction(1, 120),
    Fraction(-1, 252),
    Fraction(1, 240),
    Fraction(-1, 132),
    Fraction(691, 32760),
    Fraction(-1, 12),
)
_DIGAMMA_TAIL_F = tuple(float(c) for c in _DIGAMMA_TAIL)


def digamma(x: float) -> float:
    """psi(x) for x > 0, via upward recurrence and the asymptotic series."""
    if x <= 0:
        raise ValueError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for c in _DIGAMMA_TAIL_F:
        tail += c * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x + tail


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    prod = 1.0
    for j in range(n):
        prod *= x + j
    return prod


def pochhammer_rational(x: Rational, n: int) -> Fraction:
    """Exact rising factorial over the rationals."""
    if n < 0:
        raise ValueError("pochhammer_rational requires n >= 0")
    x = Fraction(x)
    prod = Fraction(1)
    for j in range(n):
        prod *= x + j
    return prod


def gamma_ratio(x: float, alpha: float) -> float:
    """Gamma(x + alpha)/Gamma(x) for x > 0, alpha >= 0, overflow-free."""
    if x <= 0:
        raise ValueError(f"gamma_ratio requires x > 0, got {x}")
    if alpha < 0:
        raise ValueError(f"gamma_ratio requires alpha >= 0, got {alpha}")
    return math.exp(math.lgamma(x + alpha) - math.lgamma(x))


def gamma_exact(x: Rational) -> Fraction:
    """Gamma(x) as an exact rational; only defined for positive integers."""
    x = Fraction(x)
    if x.denominator != 1 or x <= 0:
        raise ValueError(f"Gamma({x}) is not rational")
    return Fraction(math.factorial(x.numerator - 1))
