"""Truncated formal power series with exact rational coefficients.

Every series carries its truncation order ``N`` and exactly ``N + 1``
coefficients. Binary operations require equal orders and raise on mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .numeric import DomainError, RationalLike, factorial


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DomainError("a series needs at least a constant term")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike], order: int | None = None) -> TruncatedSeries:
        """Build a series, padding with zeros (or truncating) to ``order`` if given."""
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise DomainError(f"negative order {order}")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> TruncatedSeries:
        return cls.from_coeffs([c], order)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return ts_coefficient(self, n)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return ts_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return ts_add(self, ts_scale(other, -1))

    def __neg__(self) -> TruncatedSeries:
        return ts_scale(self, -1)

    def __mul__(self, other: TruncatedSeries | RationalLike) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return ts_mul(self, other)
        return ts_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncatedSeries:
        return ts_int_pow(self, e)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def _check_orders(f: TruncatedSeries, g: TruncatedSeries) -> None:
    if f.order != g.order:
        raise DomainError(f"order mismatch: {f.order} vs {g.order}")


def ts_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    _check_orders(f, g)
    return TruncatedSeries(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def ts_scale(f: TruncatedSeries, c: RationalLike) -> TruncatedSeries:
    c = Fraction(c)
    return TruncatedSeries(tuple(c * a for a in f.coeffs))


def ts_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(f, g)
    a, b = f.coeffs, g.coeffs
    return TruncatedSeries(
        tuple(sum((a[k] * b[n - k] for k in range(n + 1)), Fraction(0)) for n in range(len(a)))
    )


def ts_int_pow(f: TruncatedSeries, e: int) -> TruncatedSeries:
    """f**e for integer e >= 0 by repeated squaring; negative e goes through ts_invert."""
    if e < 0:
        return ts_int_pow(ts_invert(f), -e)
    result = TruncatedSeries.constant(1, f.order)
    base = f
    while e:
        if e & 1:
            result = ts_mul(result, base)
        e >>= 1
        if e:
            base = ts_mul(base, base)
    return result


def ts_invert(f: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; needs a nonzero constant term."""
    a = f.coeffs
    if a[0] == 0:
        raise DomainError("cannot invert a series with zero constant term")
    inv0 = 1 / a[0]
    out = [inv0]
    for n in range(1, len(a)):
        s = sum((a[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
        out.append(-s * inv0)
    return TruncatedSeries(tuple(out))


def ts_exp(f: TruncatedSeries) -> TruncatedSeries:
    """exp(f) for f(0) = 0, from (e^f)' = f' e^f: n g_n = sum_k k f_k g_{n-k}."""
    a = f.coeffs
    if a[0] != 0:
        raise DomainError("exp needs a zero constant term to stay rational")
    g = [Fraction(1)]
    for n in range(1, len(a)):
        s = sum((k * a[k] * g[n - k] for k in range(1, n + 1)), Fraction(0))
        g.append(s / n)
    return TruncatedSeries(tuple(g))


def ts_log(f: TruncatedSeries) -> TruncatedSeries:
    """log(f) for f(0) = 1, from f' = f (log f)'."""
    a = f.coeffs
    if a[0] != 1:
        raise DomainError("log needs constant term 1 to stay rational")
    g = [Fraction(0)]
    for n in range(1, len(a)):
        s = sum((k * g[k] * a[n - k] for k in range(1, n)), Fraction(0))
        g.append(a[n] - s / n)
    return TruncatedSeries(tuple(g))


def ts_pow_rational(f: TruncatedSeries, alpha: RationalLike) -> TruncatedSeries:
    """f**alpha as exp(alpha * log f); f(0) must be 1."""
    if f.coeffs[0] != 1:
        raise DomainError("rational power needs constant term 1")
    return ts_exp(ts_scale(ts_log(f), alpha))


def ts_reflect(f: TruncatedSeries) -> TruncatedSeries:
    """Substitute x -> -x (negate odd coefficients)."""
    return TruncatedSeries(tuple(-c if n % 2 else c for n, c in enumerate(f.coeffs)))


def ts_expm1_over_x(order: int) -> TruncatedSeries:
    """(e^x - 1)/x = sum x^n / (n+1)!."""
    return TruncatedSeries.from_coeffs((Fraction(1, factorial(n + 1)) for n in range(order + 1)), order)


def ts_x_over_expm1(order: int) -> TruncatedSeries:
    """x/(e^x - 1); coefficient n is B_n / n!."""
    if order < 0:
        raise DomainError(f"negative order {order}")
    return ts_invert(ts_expm1_over_x(order))


def ts_coefficient(f: TruncatedSeries, n: int) -> Fraction:
    if not 0 <= n <= f.order:
        raise DomainError(f"coefficient {n} outside series of order {f.order}")
    return f.coeffs[n]


def egf(values: Sequence[RationalLike], order: int | None = None) -> TruncatedSeries:
    """Series sum values[n] t^n / n!."""
    return TruncatedSeries.from_coeffs(
        (Fraction(v) / factorial(n) for n, v in enumerate(values)), order
    )


def egf_values(f: TruncatedSeries) -> list[Fraction]:
    """Inverse of :func:`egf`: n! times coefficient n."""
    return [c * factorial(n) for n, c in enumerate(f.coeffs)]
