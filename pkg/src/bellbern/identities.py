"""Checkers for each identity exposed through ``verify``.

Randomized checkers draw rational arguments from ``random.Random(seed)`` so a
failure can be replayed from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bell_poly import SYMBOLIC_CAP, bell_eval_recurrence, bell_symbolic, poly_eval
from .bernoulli import (
    BernoulliCache,
    check_identity_3_5,
    check_recurrence_3_7,
    generalized_bernoulli_numbers,
    generalized_bernoulli_oracle,
    log_series_coefficient,
)
from .numeric import DomainError, factorial
from .power_series import (
    TruncatedSeries,
    egf,
    ts_coefficient,
    ts_exp,
    ts_expm1_over_x,
    ts_int_pow,
    ts_log,
    ts_reflect,
    ts_x_over_expm1,
)
from .report import Counterexample, VerificationReport

GB_ALPHAS = tuple(Fraction(a) for a in ("-2", "-1", "-1/2", "1/2", "1", "2", "3", "7/3"))


def random_rational(rng: random.Random, bound: int = 9, max_den: int = 7) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def _random_args(rng: random.Random, n: int) -> list[Fraction]:
    return [random_rational(rng) for _ in range(n)]


def _bell_both(r: int, xs: list[Fraction]) -> Fraction:
    """Evaluate Y_r by the recurrence, cross-checked against the partition sum when in range."""
    value = bell_eval_recurrence(r, xs)
    if r <= SYMBOLIC_CAP:
        symbolic = poly_eval(bell_symbolic(r), xs)
        if symbolic != value:
            raise AssertionError(f"Y_{r} routes disagree at {xs}: {symbolic} vs {value}")
    return value


def check_scaling_law(max_r: int, seed: int = 0, cases: int = 100, a: Fraction | None = None) -> VerificationReport:
    """Y_r(a x_1, a^2 x_2, ..., a^r x_r) == a^r Y_r(x) on random cases.

    With ``a`` fixed to -1 this is the alternating sign law.
    """
    identity = "2.2" if a is None else "2.3"
    rng = random.Random(seed)
    for case in range(cases):
        r = rng.randint(0, max_r)
        aa = random_rational(rng) if a is None else Fraction(a)
        xs = _random_args(rng, r)
        lhs = _bell_both(r, [aa ** (j + 1) * x for j, x in enumerate(xs)])
        rhs = aa**r * _bell_both(r, xs)
        if lhs != rhs:
            cx = Counterexample(r, lhs, rhs, f"case {case}, a={aa}, x={[str(x) for x in xs]}")
            return VerificationReport(identity, 0, max_r, False, case + 1, cx, {"seed": seed})
    return VerificationReport(identity, 0, max_r, True, cases, details={"seed": seed})


def check_sign_law(max_r: int, seed: int = 0, cases: int = 100) -> VerificationReport:
    return check_scaling_law(max_r, seed, cases, a=Fraction(-1))


def bell_egf(xs: list[Fraction], order: int) -> TruncatedSeries:
    """exp(sum_j x_j t^j / j!) through ts_exp."""
    return ts_exp(egf([0, *xs], order))


def check_generating_function(order: int = 6, seed: int = 0, cases: int = 20) -> VerificationReport:
    """[t^n] exp(sum x_j t^j/j!) == Y_n(x_1..x_n)/n! for n <= order."""
    rng = random.Random(seed)
    for case in range(cases):
        xs = _random_args(rng, order)
        series = bell_egf(xs, order)
        for n in range(order + 1):
            lhs = ts_coefficient(series, n)
            rhs = _bell_both(n, xs) / factorial(n)
            if lhs != rhs:
                cx = Counterexample(n, lhs, rhs, f"case {case}, x={[str(x) for x in xs]}")
                return VerificationReport("2.5", 0, order, False, case + 1, cx, {"seed": seed})
    return VerificationReport("2.5", 0, order, True, cases, details={"seed": seed})


def check_power_law(order: int = 5, seed: int = 0, cases: int = 100) -> VerificationReport:
    """(sum Y_n(x) t^n/n!)^a == sum Y_n(a x) t^n/n! for integer a in {2, 3}."""
    rng = random.Random(seed)
    for case in range(cases):
        a = rng.choice((2, 3))
        xs = _random_args(rng, order)
        base = egf([_bell_both(n, xs) for n in range(order + 1)], order)
        lhs = ts_int_pow(base, a)
        rhs = egf([_bell_both(n, [a * x for x in xs]) for n in range(order + 1)], order)
        if lhs != rhs:
            n = next(i for i in range(order + 1) if lhs.coeffs[i] != rhs.coeffs[i])
            cx = Counterexample(n, lhs.coeffs[n], rhs.coeffs[n], f"case {case}, a={a}, x={[str(x) for x in xs]}")
            return VerificationReport("2.6", 0, order, False, case + 1, cx, {"seed": seed})
    return VerificationReport("2.6", 0, order, True, cases, details={"seed": seed})


def check_log_series(max_n: int, cache: BernoulliCache | None = None) -> VerificationReport:
    """[x^n] log(x/(e^x - 1)) == (-1)^(n+1) B_n/(n n!) for 1 <= n <= max_n.

    Also checks the unreflected form [x^n] log((1 - e^-x)/x) == B_n/(n n!),
    which maps to the first under x -> -x.
    """
    if max_n < 1:
        raise DomainError("max_n must be >= 1")
    log_f = ts_log(ts_x_over_expm1(max_n))
    log_g = ts_log(ts_reflect(ts_expm1_over_x(max_n)))
    for n in range(1, max_n + 1):
        expected = log_series_coefficient(n, cache)
        if log_f.coeffs[n] != expected:
            cx = Counterexample(n, log_f.coeffs[n], expected, "log(x/(e^x-1))")
            return VerificationReport("3.1", 1, max_n, False, n, cx)
        # the two orientations differ by (-1)^(n+1)
        unreflected = expected if n % 2 else -expected
        if log_g.coeffs[n] != unreflected:
            cx = Counterexample(n, log_g.coeffs[n], unreflected, "log((1-e^-x)/x)")
            return VerificationReport("3.1", 1, max_n, False, n, cx)
    return VerificationReport("3.1", 1, max_n, True, 2 * max_n)


def check_generalized(max_n: int, alphas=GB_ALPHAS, cache: BernoulliCache | None = None) -> VerificationReport:
    """Bell-path B_n^(alpha) against the (x/(e^x-1))^alpha series oracle."""
    checked = 0
    for alpha in alphas:
        bell_path = generalized_bernoulli_numbers(max_n, alpha, cache)
        for n in range(max_n + 1):
            oracle = generalized_bernoulli_oracle(n, alpha, n)
            checked += 1
            if bell_path[n] != oracle:
                cx = Counterexample(n, bell_path[n], oracle, f"alpha={alpha}")
                return VerificationReport("4.1", 0, max_n, False, checked, cx)
    return VerificationReport(
        "4.1", 0, max_n, True, checked, details={"alphas": [str(a) for a in alphas]}
    )


@dataclass(frozen=True)
class Identity:
    key: str
    description: str
    min_index: int
    max_index: int
    run: Callable[[int, int, BernoulliCache | None], VerificationReport]


IDENTITIES: dict[str, Identity] = {
    i.key: i
    for i in (
        Identity("2.2", "scaling law Y_r(a x_j a^j) = a^r Y_r", 0, SYMBOLIC_CAP,
                 lambda m, seed, cache: check_scaling_law(m, seed)),
        Identity("2.3", "sign law Y_r((-1)^j x_j) = (-1)^r Y_r", 0, SYMBOLIC_CAP,
                 lambda m, seed, cache: check_sign_law(m, seed)),
        Identity("2.5", "exponential generating function of Y_n", 0, SYMBOLIC_CAP,
                 lambda m, seed, cache: check_generating_function(m, seed)),
        Identity("2.6", "power law for the Bell generating function", 0, SYMBOLIC_CAP,
                 lambda m, seed, cache: check_power_law(m, seed)),
        Identity("3.1", "log(x/(e^x-1)) series coefficients", 1, 400,
                 lambda m, seed, cache: check_log_series(m, cache)),
        Identity("3.5", "B_n = Y_n(B_1/1, -B_2/2, ...)", 1, 400,
                 lambda m, seed, cache: check_identity_3_5(m, cache)),
        Identity("3.7", "quadratic Bernoulli recurrence, both forms", 2, 400,
                 lambda m, seed, cache: check_recurrence_3_7(m, cache)),
        Identity("4.1", "B_n^(alpha) Bell path vs series oracle", 0, 100,
                 lambda m, seed, cache: check_generalized(m, cache=cache)),
    )
}


def run_identity(key: str, max_index: int, seed: int = 0, cache: BernoulliCache | None = None) -> VerificationReport:
    try:
        ident = IDENTITIES[key]
    except KeyError:
        raise DomainError(f"unknown identity {key!r}; choose from {', '.join(IDENTITIES)}") from None
    if not ident.min_index <= max_index <= ident.max_index:
        raise DomainError(
            f"--max for identity {key} must be in [{ident.min_index}, {ident.max_index}], got {max_index}"
        )
    return ident.run(max_index, seed, cache)
