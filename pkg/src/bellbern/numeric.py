"""Exact integer and rational helpers shared by the rest of the package.

Rationals are :class:`fractions.Fraction` values, which are always stored
reduced with a positive denominator, so equality is structural.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CapacityError(DomainError):
    """A request exceeds a configured size cap."""


def rat(p: int, q: int = 1) -> Fraction:
    """Return p/q in canonical reduced form."""
    if q == 0:
        raise DomainError(f"zero denominator in {p}/{q}")
    return Fraction(p, q)


def rat_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DomainError("division by zero")
        return a / b
    raise DomainError(f"unknown operation {op!r}")


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for nonnegative n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial({n}, {k}) needs nonnegative arguments")
    return math.comb(n, k)


def sign(n: int) -> int:
    """(-1)**n without the pow."""
    return -1 if n % 2 else 1


def format_rational(x: RationalLike) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer. Decimal and float syntax is rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise DomainError(f"not a rational: {text!r}")
    num, den = m.groups()
    return rat(int(num), int(den) if den is not None else 1)
