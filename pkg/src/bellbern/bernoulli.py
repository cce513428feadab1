"""Bernoulli numbers, generalized (Norlund) Bernoulli numbers, and checks of
the Bell-polynomial identities that relate them.

B_n follows the x/(e^x - 1) convention, so B_1 = -1/2. The table is filled
from the triangular recurrence sum_{k<=n} C(n+1, k) B_k = 0, which is what
equating coefficients in ((e^x - 1)/x) * (x/(e^x - 1)) = 1 gives. The
quadratic and self-referential identities below are checked against it,
never used to build it.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Mapping

from .bell_poly import bell_eval_recurrence, bell_sequence
from .numeric import DomainError, RationalLike, binomial, factorial, sign
from .power_series import ts_coefficient, ts_pow_rational, ts_x_over_expm1
from .report import Counterexample, VerificationReport


class BernoulliCache:
    """Growable, thread-safe table B_0, B_1, ... of exact rationals.

    The table grows to the largest index ever requested and entries are
    never recomputed. ``overrides`` replaces chosen entries after they are
    computed; it exists to feed deliberately wrong tables to the checkers.
    """

    def __init__(self, overrides: Mapping[int, RationalLike] | None = None) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._exact: list[Fraction] = [Fraction(1)]
        self._overrides = {n: Fraction(v) for n, v in (overrides or {}).items()}
        self._lock = threading.Lock()
        self._apply_override(0)

    def _apply_override(self, n: int) -> None:
        if n in self._overrides:
            self._values[n] = self._overrides[n]

    def _extend(self, n: int) -> None:
        with self._lock:
            exact = self._exact
            for m in range(len(exact), n + 1):
                s = sum((binomial(m + 1, k) * exact[k] for k in range(m)), Fraction(0))
                exact.append(-s / (m + 1))
                self._values.append(exact[m])
                self._apply_override(m)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"negative Bernoulli index {n}")
        if n >= len(self._values):
            self._extend(n)
        return self._values[n]

    def table(self, n: int) -> list[Fraction]:
        """[B_0, ..., B_n]."""
        if n < 0:
            raise DomainError(f"negative Bernoulli index {n}")
        self[n]
        return self._values[: n + 1]

    def __len__(self) -> int:
        return len(self._values)


_default_cache = BernoulliCache()


def default_cache() -> BernoulliCache:
    return _default_cache


def bernoulli(n: int, cache: BernoulliCache | None = None) -> Fraction:
    return (cache or _default_cache)[n]


def bernoulli_numbers(n: int, cache: BernoulliCache | None = None) -> list[Fraction]:
    return (cache or _default_cache).table(n)


def bell_args(n: int, alpha: RationalLike = 1, cache: BernoulliCache | None = None) -> list[Fraction]:
    """Arguments (-1)^(j+1) * alpha * B_j / j for j = 1..n."""
    if n < 0:
        raise DomainError(f"negative index {n}")
    alpha = Fraction(alpha)
    b = bernoulli_numbers(n, cache)
    return [-sign(j) * alpha * b[j] / j for j in range(1, n + 1)]


def generalized_bernoulli(n: int, alpha: RationalLike, cache: BernoulliCache | None = None) -> Fraction:
    """B_n^(alpha) as a complete Bell polynomial in scaled Bernoulli numbers."""
    return bell_eval_recurrence(n, bell_args(n, alpha, cache))


def generalized_bernoulli_numbers(n: int, alpha: RationalLike, cache: BernoulliCache | None = None) -> list[Fraction]:
    return bell_sequence(n, bell_args(n, alpha, cache))


def generalized_bernoulli_oracle(n: int, alpha: RationalLike, order: int | None = None) -> Fraction:
    """B_n^(alpha) read off the series (x/(e^x - 1))**alpha.

    Shares nothing with the Bell path: no Bernoulli table, no Bell polynomials.
    """
    order = n if order is None else order
    if n < 0 or order < n:
        raise DomainError(f"need 0 <= n <= order, got n={n}, order={order}")
    series = ts_pow_rational(ts_x_over_expm1(order), alpha)
    return factorial(n) * ts_coefficient(series, n)


def log_series_coefficient(n: int, cache: BernoulliCache | None = None) -> Fraction:
    """Coefficient of x^n in log(x/(e^x - 1)): (-1)^(n+1) B_n / (n * n!)."""
    if n < 1:
        raise DomainError(f"log series coefficient needs n >= 1, got {n}")
    return -sign(n) * bernoulli(n, cache) / (n * factorial(n))


def check_identity_3_5(max_n: int, cache: BernoulliCache | None = None) -> VerificationReport:
    """B_n == Y_n(B_1/1, -B_2/2, ..., (-1)^(n+1) B_n/n) for 1 <= n <= max_n."""
    if max_n < 1:
        raise DomainError("max_n must be >= 1")
    args = bell_args(max_n, 1, cache)
    # one recurrence pass gives Y_0..Y_max_n; Y_n only reads the first n args
    ys = bell_sequence(max_n, args)
    for n in range(1, max_n + 1):
        lhs = bernoulli(n, cache)
        if lhs != ys[n]:
            return VerificationReport("3.5", 1, max_n, False, n, Counterexample(n, lhs, ys[n]))
    return VerificationReport("3.5", 1, max_n, True, max_n)


def quadratic_recurrence_first(r: int, b: list[Fraction]) -> tuple[Fraction, Fraction]:
    """(B_{r+1}, sum_{k=0}^r (-1)^k C(r,k) B_{r-k} B_{k+1} / (k+1))."""
    rhs = sum(
        (sign(k) * binomial(r, k) * b[r - k] * b[k + 1] / (k + 1) for k in range(r + 1)),
        Fraction(0),
    )
    return b[r + 1], rhs


def quadratic_recurrence_second(r: int, b: list[Fraction]) -> tuple[Fraction, Fraction]:
    """(r B_r, sum_{k=1}^r (-1)^(k+1) C(r,k) B_{r-k} B_k)."""
    rhs = sum((-sign(k) * binomial(r, k) * b[r - k] * b[k] for k in range(1, r + 1)), Fraction(0))
    return r * b[r], rhs


def _sweep(rs: Iterable[int], form, b: list[Fraction], note: str) -> tuple[int, Counterexample | None]:
    checked = 0
    for r in rs:
        lhs, rhs = form(r, b)
        checked += 1
        if lhs != rhs:
            return checked, Counterexample(r, lhs, rhs, note)
    return checked, None


def check_recurrence_3_7(max_r: int, cache: BernoulliCache | None = None) -> VerificationReport:
    """Check both printed forms of the quadratic Bernoulli recurrence for r <= max_r.

    The B_{r+1} form is swept over 0 <= r <= max_r - 1 (so it never reads past
    B_{max_r}); the r B_r form over 2 <= r <= max_r. Both outcomes are
    reported in ``details`` and the report fails if either form fails.
    """
    if max_r < 2:
        raise DomainError("max_r must be >= 2")
    b = bernoulli_numbers(max_r, cache)
    n1, cx1 = _sweep(range(0, max_r), quadratic_recurrence_first, b, "form B_{r+1}")
    n2, cx2 = _sweep(range(2, max_r + 1), quadratic_recurrence_second, b, "form r*B_r")
    details = {
        "form B_{r+1}": "pass" if cx1 is None else f"fail at r={cx1.index}",
        "form r*B_r": "pass" if cx2 is None else f"fail at r={cx2.index}",
    }
    cx = cx2 if cx2 is not None else cx1
    return VerificationReport("3.7", 0, max_r, cx is None, n1 + n2, cx, details)
