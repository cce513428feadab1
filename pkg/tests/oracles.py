"""Independent reference computations for the test suite.

None of these share code paths with the package under test.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def factorial_product(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def binomial_pascal(n: int, k: int) -> int:
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0, *row], [*row, 0])]
    return row[k] if 0 <= k <= n else 0


def brute_force_multiplicities(r: int) -> list[tuple[int, ...]]:
    """Every nonnegative (k_1..k_r) with sum j*k_j = r, by exhaustive search over boxes."""
    if r == 0:
        return [()]
    ranges = [range(r // j + 1) for j in range(1, r + 1)]
    return [
        k for k in itertools.product(*ranges)
        if sum(j * kj for j, kj in enumerate(k, 1)) == r
    ]


def partition_count_dp(r: int) -> int:
    """p(r) by the coin-change DP over part sizes."""
    ways = [1] + [0] * r
    for part in range(1, r + 1):
        for total in range(part, r + 1):
            ways[total] += ways[total - part]
    return ways[r]


def bell_numbers_stirling(n: int) -> list[int]:
    """Bell numbers B_0..B_n as row sums of the Stirling-second-kind triangle."""
    S = [[1]]
    for m in range(1, n + 1):
        prev = S[-1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + k * (prev[k] if k < len(prev) else 0)
        S.append(row)
    return [sum(row) for row in S]


def bernoulli_akiyama_tanigawa(n: int) -> list[Fraction]:
    """B_0..B_n via the Akiyama-Tanigawa triangle, shifted to B_1 = -1/2."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def cauchy(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    return [sum((a[k] * b[m - k] for k in range(m + 1)), Fraction(0)) for m in range(n)]


def sympy_bell_terms(r: int) -> dict[tuple[int, ...], int]:
    """Y_r from expanding exp(sum x_j t^j/j!) in sympy and reading off t^r."""
    import sympy

    t = sympy.Symbol("t")
    xs = sympy.symbols(f"x1:{r + 2}")
    inner = sum(xs[j - 1] * t**j / sympy.factorial(j) for j in range(1, r + 1))
    ser = sympy.series(sympy.exp(inner), t, 0, r + 1).removeO()
    coeff = sympy.expand(ser.coeff(t, r) * sympy.factorial(r))
    if r == 0:
        return {(): int(coeff)}
    poly = sympy.Poly(coeff, *xs[:r])
    out = {}
    for monom, c in poly.terms():
        e = list(monom)
        while e and e[-1] == 0:
            e.pop()
        out[tuple(e)] = int(c)
    return out
