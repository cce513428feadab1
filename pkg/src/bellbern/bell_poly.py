"""Complete exponential Bell polynomials Y_r.

Two independent routes are provided: the symbolic partition sum
(:func:`bell_symbolic`, then :func:`poly_eval`) and the binomial recurrence
``Y_{r+1} = sum_k C(r, k) Y_{r-k} x_{k+1}`` (:func:`bell_eval_recurrence`,
:func:`bell_sequence`). Only the recurrence scales to large ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .numeric import CapacityError, DomainError, RationalLike, binomial, factorial
from .partitions import enumerate_partitions, partition_weight
from .power_series import TruncatedSeries

SYMBOLIC_CAP = 30

ExponentVector = tuple[int, ...]


def trim(e: Sequence[int]) -> ExponentVector:
    """Canonical exponent vector: trailing zeros removed."""
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


@dataclass(frozen=True)
class BellPolynomial:
    """Y_r as a sparse map from trimmed exponent vectors to integer coefficients.

    ``terms`` is kept in descending lex order of the exponent vector, which is
    also the partition enumeration order.
    """

    r: int
    terms: tuple[tuple[ExponentVector, int], ...]

    def as_dict(self) -> dict[ExponentVector, int]:
        return dict(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __call__(self, *xs: RationalLike) -> Fraction:
        return poly_eval(self, xs)


def bell_symbolic(r: int, cap: int = SYMBOLIC_CAP) -> BellPolynomial:
    """Expand Y_r as a sum over partitions of ``r``."""
    if r < 0:
        raise DomainError(f"negative index {r}")
    if r > cap:
        raise CapacityError(f"symbolic Y_{r} exceeds the cap of {cap} (use the recurrence to evaluate)")
    return _bell_symbolic(r)


@lru_cache(maxsize=None)
def _bell_symbolic(r: int) -> BellPolynomial:
    terms = []
    for p in enumerate_partitions(r):
        terms.append((trim(p.k), partition_weight(p)))
    return BellPolynomial(r, tuple(terms))


def _check_args(r: int, xs: Sequence[RationalLike]) -> list[Fraction]:
    if r < 0:
        raise DomainError(f"negative index {r}")
    if len(xs) < r:
        raise DomainError(f"Y_{r} needs {r} arguments, got {len(xs)}")
    return [Fraction(x) for x in xs[:r]]


def poly_eval(p: BellPolynomial, xs: Sequence[RationalLike]) -> Fraction:
    """Substitute x_j := xs[j-1] into ``p``."""
    xs = _check_args(p.r, xs)
    total = Fraction(0)
    for e, c in p.terms:
        term = Fraction(c)
        for x, ej in zip(xs, e):
            if ej:
                term *= x**ej
        total += term
    return total


def bell_sequence(n: int, xs: Sequence[RationalLike]) -> list[Fraction]:
    """[Y_0, ..., Y_n] at ``xs`` in one O(n^2) pass of the recurrence."""
    xs = _check_args(n, xs)
    ys = [Fraction(1)]
    for r in range(n):
        ys.append(sum((binomial(r, k) * ys[r - k] * xs[k] for k in range(r + 1)), Fraction(0)))
    return ys


def bell_eval_recurrence(r: int, xs: Sequence[RationalLike]) -> Fraction:
    return bell_sequence(r, xs)[r]


def exp_via_bell(f: TruncatedSeries) -> TruncatedSeries:
    """exp(f) with coefficient n = Y_n(f'(0), ..., f^(n)(0)) / n!; needs f(0) = 0."""
    if f.coeffs[0] != 0:
        raise DomainError("rational exactness requires f(0)=0")
    derivs = [c * factorial(j) for j, c in enumerate(f.coeffs)][1:]
    ys = bell_sequence(f.order, derivs)
    return TruncatedSeries(tuple(y / factorial(n) for n, y in enumerate(ys)))
