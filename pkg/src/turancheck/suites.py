"""Check suites: named bundles of verifications runnable over parameter grids.

Each suite expands its configuration into a deterministic list of tasks
(`(op, kwargs)` pairs with picklable arguments), so grid points can be
fanned out across worker processes; aggregation is order-independent and
reports are sorted canonically afterwards.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Union

from . import exact, specials
from .gamma_core import pochhammer_rational, recip_gamma
from .report import (
    FAIL,
    HYPOTHESIS_VIOLATION,
    PASS,
    SKIPPED,
    CheckResult,
)
from .series import (
    REL_TOL,
    CoefficientSequence,
    TuranianSpec,
    eval_f,
    eval_g,
    phi_coefficients,
    product_difference,
)

DEFAULT_SEED = 987654321


class ConfigError(ValueError):
    pass


def parse_scalar(v) -> Union[Fraction, float, int]:
    """Grid scalars: "p/q" strings are exact rationals, numbers are floats."""
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError as e:
            raise ConfigError(f"bad rational {v!r}") from e
    if isinstance(v, bool):
        raise ConfigError("booleans are not grid scalars")
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return v
    raise ConfigError(f"bad scalar {v!r}")


def _axis_values(spec) -> list:
    if isinstance(spec, list):
        return [parse_scalar(v) for v in spec]
    lo, hi, step = (parse_scalar(spec[k]) for k in ("min", "max", "step"))
    kinds = {isinstance(v, Fraction) for v in (lo, hi, step)}
    if len(kinds) > 1:
        raise ConfigError("mixing rational and floating endpoints in one axis")
    if step <= 0 or lo > hi:
        raise ConfigError("axis requires min <= max and step > 0")
    out = []
    v = lo
    while v <= hi + (0 if isinstance(lo, Fraction) else 1e-12):
        out.append(v)
        v = v + step
    return out


@dataclass
class GridSpec:
    """Rectangular parameter grid with a total point cap."""

    axes: Dict[str, list]
    cap: int = 500_000

    @classmethod
    def from_config(cls, cfg: dict, cap: int = 500_000) -> "GridSpec":
        return cls({name: _axis_values(spec) for name, spec in cfg.items()}, cap)

    def __len__(self) -> int:
        n = 1
        for vals in self.axes.values():
            n *= len(vals)
        return n

    def points(self) -> Iterator[dict]:
        if len(self) > self.cap:
            raise ConfigError(f"grid has {len(self)} points, cap is {self.cap}")
        names = list(self.axes)
        for combo in product(*(self.axes[n] for n in names)):
            yield dict(zip(names, combo))


# --- sequence specs ---------------------------------------------------------

def resolve_sequence(spec: str) -> CoefficientSequence:
    """Named coefficient sequences used by floating-point checks."""
    if spec == "ones":
        return CoefficientSequence.ones()
    if spec == "inv_factorial":
        return CoefficientSequence.from_rational_function(
            lambda k: Fraction(1, math.factorial(k)), name="1/k!"
        )
    if spec.startswith("poch:"):
        return specials.pochhammer_over_factorial(Fraction(spec[5:]))
    if spec.startswith("geometric:"):
        r = Fraction(spec[10:])
        return CoefficientSequence.from_rational_function(
            lambda k: r**k, name=f"geom({r})"
        )
    if spec.startswith("list:"):
        return CoefficientSequence.from_list(
            [Fraction(v) for v in spec[5:].split(",")], name=spec
        )
    raise ConfigError(f"unknown sequence spec {spec!r}")


def random_rational(rng: random.Random, hi: Fraction, max_den: int = 4) -> Fraction:
    """Uniform-ish rational in (0, hi] with a small denominator."""
    den = rng.randint(1, max_den)
    num = rng.randint(1, int(hi * den))
    return Fraction(num, den)


def random_log_concave_sequence(
    rng: random.Random, length: int, max_num: int = 8
) -> List[Fraction]:
    """Positive rational sequence with non-increasing term ratios (hence PF2)."""
    first = Fraction(rng.randint(1, max_num), rng.randint(1, 3))
    ratios = sorted(
        (Fraction(rng.randint(1, max_num), rng.randint(1, max_num)) for _ in range(length - 1)),
        reverse=True,
    )
    terms = [first]
    for r in ratios:
        terms.append(terms[-1] * r)
    return terms


# --- individual check operations -------------------------------------------

def op_chu_vandermonde(m: int, a: Fraction, c: Fraction) -> CheckResult:
    params = {"m": m, "a": a, "c": c}
    lhs, rhs = exact.chu_vandermonde(m, a, c)
    status = PASS if lhs == rhs else FAIL
    return CheckResult("identities.chu_vandermonde", params, status, margin=lhs - rhs)


def op_gamma_sum_identity(m: int, mu: Fraction, a: Fraction, b: Fraction) -> CheckResult:
    params = {"m": m, "mu": mu, "a": a, "b": b}
    total = exact.gamma_sum_terms(m, mu, a, b)
    closed = exact.gamma_sum_closed(m, mu, a, b)
    status = PASS if total.equals(closed) else FAIL
    return CheckResult("identities.gamma_sum_identity", params, status, margin=Fraction(0) if status == PASS else None)


def op_telescoping_identity(m: int, mu: Fraction, beta: Fraction) -> CheckResult:
    params = {"m": m, "mu": mu, "beta": beta}
    total, closed = exact.telescoping_sum(m, mu, beta)
    if not total.equals(closed):
        return CheckResult("identities.telescoping_identity", params, FAIL)
    sign = total.sign()
    ok = (sign > 0) if beta > 0 else (sign == 0)
    return CheckResult(
        "identities.telescoping_identity", params, PASS if ok else FAIL,
        margin=total.as_fraction(),
    )


def op_mk_pattern(m: int, mu: Fraction, a: Fraction, b: Fraction) -> CheckResult:
    params = {"m": m, "mu": mu, "a": a, "b": b}
    pattern = exact.m_k_values(m, mu, a, b)
    status = PASS if pattern.legal else FAIL
    return CheckResult(
        "identities.mk_sign_pattern", params, status,
        margin=pattern.change_count,
        counterexample=None if pattern.legal else {"signs": str(pattern.signs), **params},
    )


def op_mk_sum_consistency(m: int, mu: Fraction, a: Fraction, b: Fraction) -> CheckResult:
    params = {"m": m, "mu": mu, "a": a, "b": b}
    folded = exact.GammaQuotientSum.zero(mu, a, b)
    for k in range(m // 2 + 1):
        w = Fraction(1, math.factorial(k) * math.factorial(m - k))
        folded = folded + exact.m_k_single(m, k, Fraction(mu), Fraction(a), Fraction(b)).scale(w)
    unfolded = exact.gamma_sum_terms(m, mu, a, b)
    status = PASS if folded.equals(unfolded) else FAIL
    return CheckResult("identities.mk_sum_consistency", params, status)


def op_phi_positivity(seq: Sequence[Fraction], mu, a, b, m_max: int) -> CheckResult:
    return exact.phi_positivity_exact(seq, mu, a, b, m_max)


def op_lambda_positivity(seq: Sequence[Fraction], mu, beta, m_max: int) -> CheckResult:
    return exact.lambda_positivity_exact(seq, mu, beta, m_max)


def op_bessel_sandwich(nu: float, epsilon: float, u: float) -> CheckResult:
    return specials.bessel_bounds_check(nu, epsilon, u)


def op_bessel_coeff_positivity(nu: Fraction, epsilon: Fraction, m_max: int) -> CheckResult:
    """Positivity of the Maclaurin coefficients of the Bessel Turanian in (u/2)^2."""
    params = {"nu": nu, "epsilon": epsilon, "m_max": m_max}
    mu = Fraction(nu) + 1 - Fraction(epsilon)
    if mu < -1:
        return CheckResult("bessel.coefficients_positive", params, HYPOTHESIS_VIOLATION)
    if mu > 0:
        ones = [Fraction(1)] * (m_max + 1)
        inner = exact.phi_positivity_exact(ones, mu, epsilon, epsilon, m_max)
        return CheckResult(
            "bessel.coefficients_positive", params, inner.status,
            margin=inner.margin, counterexample=inner.counterexample,
        )
    # -1 <= mu <= 0: compensated floating check with margin reporting.
    # At the edge nu = -1 the order parameter mu + epsilon hits zero and
    # some coefficients with m <= 1 vanish identically (the reciprocal
    # gamma factors are exact zeros), so only non-negativity is claimed
    # there; strict positivity resumes from m = 2 on.
    coeffs = phi_coefficients(
        CoefficientSequence.ones(), float(mu), float(epsilon), float(epsilon), m_max
    )
    at_edge = Fraction(nu) == -1
    worst = min(coeffs)
    bad = None
    for m, c in enumerate(coeffs):
        if c < 0.0 or (c == 0.0 and not (at_edge and m < 2)):
            bad = m
            break
    status = PASS if bad is None else FAIL
    return CheckResult(
        "bessel.coefficients_positive", params, status, margin=worst,
        counterexample=None if status == PASS else {"m": bad, **params},
    )


def op_kummer_bounds(a: float, b: float, x: float) -> CheckResult:
    params = {"a": a, "b": b, "x": x}
    lower, upper = specials.kummer_logderiv_bounds(a, b, x)
    ratio = specials.kummer_derivative(a, b, x) / specials.kummer(a, b, x)
    margin = min(ratio - lower, upper - ratio)
    status = PASS if lower < ratio < upper else FAIL
    return CheckResult("kummer.logderiv_bounds", params, status, margin=margin)


def op_contiguous_residuals(a: float, b: float, x: float) -> CheckResult:
    params = {"a": a, "b": b, "x": x}
    residuals = specials.contiguous_residuals(a, b, x)
    scale = max(abs(specials.kummer(a, b, x)) * max(a, b, x, 1.0), 1.0)
    rel = max(abs(r) for r in residuals) / scale
    status = PASS if rel <= 1e-9 else FAIL
    return CheckResult("kummer.contiguous_relations", params, status, margin=rel)


def op_chain_logconcavity(a_list, b_list, r: int, n_max: int) -> CheckResult:
    params = {
        "a": ",".join(str(Fraction(v)) for v in a_list),
        "b": ",".join(str(Fraction(v)) for v in b_list),
        "r": r,
    }
    report = specials.symmetric_chain_check(a_list, b_list, r)
    if not report.satisfied:
        return CheckResult(
            "pfq.chain_implies_logconcave", params, SKIPPED,
            margin=report.violated_index,
        )
    ok = specials.hyperterm_logconcavity(a_list, b_list, n_max)
    return CheckResult("pfq.chain_implies_logconcave", params, PASS if ok else FAIL)


def op_exp_remainder_sandwich(eta: float, nu: float, x: float) -> CheckResult:
    return specials.exp_remainder_turan_bounds(eta, nu, x)


def op_param_derivative_logconcave(a: Fraction, k_max: int) -> CheckResult:
    params = {"a": a, "k_max": k_max}
    w = specials.harmonic_shift_weights(a, k_max + 1)
    h = [w[k] * pochhammer_rational(a, k) / math.factorial(k) for k in range(k_max + 2)]
    for k in range(1, k_max + 1):
        if h[k] * h[k] < h[k - 1] * h[k + 1]:
            return CheckResult(
                "param_derivative.h_logconcave", params, FAIL,
                counterexample={"k": k, "a": a},
            )
    return CheckResult("param_derivative.h_logconcave", params, PASS)


def op_param_derivative_sandwich(a: Fraction, nu: float, x: float) -> CheckResult:
    """Turanian sandwich for the psi-weighted series (leading zero makes the lower bound 0)."""
    params = {"a": a, "nu": nu, "x": x}
    if nu <= 0:
        return CheckResult("param_derivative.sandwich", params, HYPOTHESIS_VIOLATION)
    seq = specials.param_derivative_sequence(a)
    center = eval_g(seq, nu, x).value
    delta = product_difference(
        center, center, eval_g(seq, nu + 1, x).value, eval_g(seq, nu - 1, x).value
    )
    upper = center * center / nu
    scale = max(abs(delta), abs(upper), 1e-300)
    ok = delta >= -REL_TOL * scale and upper - delta >= -REL_TOL * scale
    return CheckResult(
        "param_derivative.sandwich", params, PASS if ok else FAIL,
        margin=min(delta, upper - delta),
    )


def op_f_twosided(seq_spec: str, mu: float, a: float, b: float, x: float) -> CheckResult:
    """Gamma-ratio < f(mu)f(a+b+mu)/(f(a+mu)f(b+mu)) < 1 for x > 0, mu > 0."""
    params = {"seq": seq_spec, "mu": mu, "a": a, "b": b, "x": x}
    seq = resolve_sequence(seq_spec)
    num = eval_f(seq, mu, x).value * eval_f(seq, a + b + mu, x).value
    den = eval_f(seq, a + mu, x).value * eval_f(seq, b + mu, x).value
    ratio = num / den
    lg = math.lgamma
    lower = math.exp(lg(a + mu) + lg(b + mu) - lg(mu) - lg(a + b + mu))
    ok = lower < ratio < 1.0
    return CheckResult(
        "corollaries.f_twosided", params, PASS if ok else FAIL,
        margin=min(ratio - lower, 1.0 - ratio),
    )


def op_g_twosided(seq_spec: str, mu: float, beta: float, x: float) -> CheckResult:
    """mu/(beta+mu) < g(mu)g(1+beta+mu)/(g(1+mu)g(beta+mu)) < 1."""
    params = {"seq": seq_spec, "mu": mu, "beta": beta, "x": x}
    seq = resolve_sequence(seq_spec)
    ratio = (
        eval_g(seq, mu, x).value * eval_g(seq, 1 + beta + mu, x).value
    ) / (eval_g(seq, 1 + mu, x).value * eval_g(seq, beta + mu, x).value)
    lower = mu / (beta + mu)
    ok = lower < ratio < 1.0 if x > 0 else lower < ratio <= 1.0
    return CheckResult(
        "corollaries.g_twosided", params, PASS if ok else FAIL,
        margin=min(ratio - lower, 1.0 - ratio),
    )


def op_disc_wright(seq_spec: str, mu: float, s: float, x: float) -> CheckResult:
    """g(mu+1)g(mu+s) - g(mu)g(mu+s+1) >= 0 for s > 0."""
    params = {"seq": seq_spec, "mu": mu, "s": s, "x": x}
    seq = resolve_sequence(seq_spec)
    d = product_difference(
        eval_g(seq, mu + 1, x).value,
        eval_g(seq, mu + s, x).value,
        eval_g(seq, mu, x).value,
        eval_g(seq, mu + s + 1, x).value,
    )
    scale = max(abs(eval_g(seq, mu + 1, x).value * eval_g(seq, mu + s, x).value), 1e-300)
    status = PASS if d >= -REL_TOL * scale else FAIL
    return CheckResult("corollaries.discrete_wright", params, status, margin=d)


def op_conjecture_point(m: int, mu: Fraction, alpha: Fraction, beta: Fraction) -> CheckResult:
    params = {"m": m, "mu": mu, "alpha": alpha, "beta": beta}
    if mu < -1 or mu + alpha < 0 or mu + beta < 0 or alpha <= 0 or beta <= 0:
        return CheckResult("conjecture.finite_sum_positive", params, HYPOTHESIS_VIOLATION)
    if mu <= 0:
        return CheckResult(
            "conjecture.finite_sum_positive", params, SKIPPED,
            margin="exact path requires mu > 0",
        )
    value = exact.conjecture_sum(m, mu, alpha, beta)
    sign = value.sign()
    status = PASS if sign > 0 else FAIL
    return CheckResult(
        "conjecture.finite_sum_positive", params, status,
        margin=float(value),
        counterexample=None if sign > 0 else {"p": value.p, "q": value.q, **params},
    )


_OPS = {
    "chu_vandermonde": op_chu_vandermonde,
    "gamma_sum_identity": op_gamma_sum_identity,
    "telescoping_identity": op_telescoping_identity,
    "mk_pattern": op_mk_pattern,
    "mk_sum_consistency": op_mk_sum_consistency,
    "phi_positivity": op_phi_positivity,
    "lambda_positivity": op_lambda_positivity,
    "bessel_sandwich": op_bessel_sandwich,
    "bessel_coeff_positivity": op_bessel_coeff_positivity,
    "kummer_bounds": op_kummer_bounds,
    "contiguous_residuals": op_contiguous_residuals,
    "chain_logconcavity": op_chain_logconcavity,
    "exp_remainder_sandwich": op_exp_remainder_sandwich,
    "param_derivative_logconcave": op_param_derivative_logconcave,
    "param_derivative_sandwich": op_param_derivative_sandwich,
    "f_twosided": op_f_twosided,
    "g_twosided": op_g_twosided,
    "disc_wright": op_disc_wright,
    "conjecture_point": op_conjecture_point,
}


def run_task(task: dict) -> CheckResult:
    return _OPS[task["op"]](**task["kwargs"])


def _t(op: str, **kwargs) -> dict:
    return {"op": op, "kwargs": kwargs}


# --- suite builders ---------------------------------------------------------

def build_identities(cfg: dict) -> List[dict]:
    rng = random.Random(cfg.get("seed", DEFAULT_SEED))
    samples = cfg.get("samples", 500)
    m_max = cfg.get("m_max", 12)
    hi = Fraction(5)
    tasks = []
    for _ in range(samples):
        m = rng.randint(0, m_max)
        mu = random_rational(rng, hi)
        a = random_rational(rng, hi)
        b = random_rational(rng, hi)
        tasks.append(_t("gamma_sum_identity", m=m, mu=mu, a=a, b=b))
        tasks.append(_t("telescoping_identity", m=m, mu=mu, beta=b))
        tasks.append(_t("mk_pattern", m=m, mu=mu, a=a, b=b))
        tasks.append(_t("mk_sum_consistency", m=m, mu=mu, a=a, b=b))
        tasks.append(_t("chu_vandermonde", m=m, a=a, c=mu + b))
    return tasks


def build_phi(cfg: dict) -> List[dict]:
    rng = random.Random(cfg.get("seed", DEFAULT_SEED))
    samples = cfg.get("samples", 40)
    m_max = cfg.get("m_max", 30)
    tasks = []
    for _ in range(samples):
        seq = random_log_concave_sequence(rng, m_max + 1)
        mu = random_rational(rng, Fraction(4))
        a = random_rational(rng, Fraction(3))
        b = random_rational(rng, Fraction(3))
        tasks.append(_t("phi_positivity", seq=seq, mu=mu, a=a, b=b, m_max=m_max))
    return tasks


def build_lambda(cfg: dict) -> List[dict]:
    rng = random.Random(cfg.get("seed", DEFAULT_SEED))
    samples = cfg.get("samples", 40)
    m_max = cfg.get("m_max", 30)
    tasks = []
    for _ in range(samples):
        seq = random_log_concave_sequence(rng, m_max + 1)
        mu = random_rational(rng, Fraction(4))
        beta = random_rational(rng, Fraction(3))
        tasks.append(_t("lambda_positivity", seq=seq, mu=mu, beta=beta, m_max=m_max))
    for eta in (Fraction(1), Fraction(3, 2), Fraction(2)):
        seq = [
            pochhammer_rational(eta, k) / math.factorial(k) for k in range(m_max + 1)
        ]
        tasks.append(
            _t("lambda_positivity", seq=seq, mu=Fraction(1), beta=Fraction(1, 2), m_max=m_max)
        )
    return tasks


def build_bessel(cfg: dict) -> List[dict]:
    grid = GridSpec.from_config(
        cfg.get(
            "grid",
            {"nu": {"min": "-1", "max": "5", "step": "1/2"},
             "u": {"min": "1/2", "max": "20", "step": "1/2"}},
        )
    )
    tasks = [
        _t("bessel_sandwich", nu=float(p["nu"]), epsilon=1.0, u=float(p["u"]))
        for p in grid.points()
    ]
    coeff_grid = GridSpec.from_config(
        cfg.get(
            "coeff_grid",
            {"nu": {"min": "-1", "max": "2", "step": "1/2"},
             "epsilon": {"min": "1/2", "max": "3/2", "step": "1/2"}},
        )
    )
    for p in coeff_grid.points():
        if Fraction(p["nu"]) - Fraction(p["epsilon"]) >= -2:
            tasks.append(
                _t("bessel_coeff_positivity", nu=Fraction(p["nu"]),
                   epsilon=Fraction(p["epsilon"]), m_max=cfg.get("m_max", 30))
            )
    return tasks


def build_kummer(cfg: dict) -> List[dict]:
    rng = random.Random(cfg.get("seed", DEFAULT_SEED))
    samples = cfg.get("samples", 200)
    tasks = []
    for _ in range(samples):
        a = 1.0 + rng.random() * 4.0
        b = rng.random() * 6.0 + 0.05
        if abs(b - a) < 1e-6:
            b += 0.5
        x = rng.random() * 10.0 + 1e-3
        tasks.append(_t("kummer_bounds", a=a, b=b, x=x))
    for _ in range(cfg.get("residual_samples", 100)):
        a = rng.random() * 4.0 + 0.2
        b = rng.random() * 4.0 + 1.1
        x = rng.random() * 5.0 + 0.1
        tasks.append(_t("contiguous_residuals", a=a, b=b, x=x))
    return tasks


def build_hypergeometric(cfg: dict) -> List[dict]:
    rng = random.Random(cfg.get("seed", DEFAULT_SEED))
    n_max = cfg.get("n_max", 50)
    tasks = []
    for _ in range(cfg.get("samples", 60)):
        q = rng.randint(1, 3)
        r = rng.randint(0, q)
        a_list = [str(random_rational(rng, Fraction(4))) for _ in range(q - r)]
        b_list = [str(random_rational(rng, Fraction(4))) for _ in range(q)]
        tasks.append(_t("chain_logconcavity", a_list=a_list, b_list=b_list, r=r, n_max=n_max))
    return tasks


def build_exp_remainder(cfg: dict) -> List[dict]:
    grid = GridSpec.from_config(
        cfg.get(
            "grid",
            {"eta": ["1", "3/2", "2"],
             "nu": {"min": "-3/2", "max": "3", "step": "1/2"},
             "x": {"min": "1/2", "max": "5", "step": "1/2"}},
        )
    )
    return [
        _t("exp_remainder_sandwich", eta=float(p["eta"]), nu=float(p["nu"]), x=float(p["x"]))
        for p in grid.points()
    ]


def build_param_derivative(cfg: dict) -> List[dict]:
    tasks = []
    for a in cfg.get("a_values", ["1", "3/2", "2", "5"]):
        tasks.append(_t("param_derivative_logconcave", a=Fraction(a), k_max=cfg.get("k_max", 40)))
    grid = GridSpec.from_config(
        cfg.get(
            "grid",
            {"nu": {"min": "1/2", "max": "4", "step": "1/2"},
             "x": {"min": "1/2", "max": "4", "step": "1/2"}},
        )
    )
    for p in grid.points():
        tasks.append(
            _t("param_derivative_sandwich", a=Fraction(3, 2), nu=float(p["nu"]), x=float(p["x"]))
        )
    return tasks


def build_corollaries(cfg: dict) -> List[dict]:
    grid = GridSpec.from_config(
        cfg.get(
            "grid",
            {"mu": [0.5, 1.0, 2.5], "a": [0.5, 1.5], "b": [0.75, 2.0],
             "x": [0.25, 1.0, 4.0]},
        )
    )
    tasks = []
    for p in grid.points():
        tasks.append(_t("f_twosided", seq_spec="ones", mu=p["mu"], a=p["a"], b=p["b"], x=p["x"]))
    axes = grid.axes
    for mu in axes["mu"]:
        for x in axes["x"]:
            for s in axes["b"]:
                tasks.append(_t("g_twosided", seq_spec="inv_factorial", mu=mu, beta=s, x=x))
                tasks.append(_t("disc_wright", seq_spec="poch:3/2", mu=mu, s=s, x=x))
    return tasks


def build_conjecture(cfg: dict) -> List[dict]:
    m_max = cfg.get("m_max", 10)
    grid = GridSpec.from_config(
        cfg.get(
            "grid",
            {"mu": {"min": "1/4", "max": "4", "step": "1/4"},
             "alpha": {"min": "1/4", "max": "4", "step": "1/4"},
             "beta": {"min": "1/4", "max": "4", "step": "1/4"}},
        ),
        cap=cfg.get("cap", 500_000),
    )
    tasks = []
    for p in grid.points():
        for m in range(m_max + 1):
            tasks.append(
                _t("conjecture_point", m=m, mu=Fraction(p["mu"]),
                   alpha=Fraction(p["alpha"]), beta=Fraction(p["beta"]))
            )
    return tasks


SUITES = {
    "identities": build_identities,
    "phi": build_phi,
    "lambda": build_lambda,
    "bessel": build_bessel,
    "kummer": build_kummer,
    "hypergeometric": build_hypergeometric,
    "exp_remainder": build_exp_remainder,
    "param_derivative": build_param_derivative,
    "corollaries": build_corollaries,
}
