"""Integer partitions in multiplicity form.

A partition of ``r`` is stored as ``(k_1, ..., k_r)`` where ``k_j`` counts the
parts equal to ``j``. Enumeration runs in descending lexicographic order of
that vector, so ``1+1+...+1`` comes first and the single part ``r`` comes last.
This is the order in which Bell polynomials are usually printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .numeric import DomainError, factorial


@dataclass(frozen=True)
class PartitionMultiplicity:
    r: int
    k: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 0 or len(self.k) != self.r:
            raise DomainError(f"multiplicity vector of length {len(self.k)} for r={self.r}")
        if any(kj < 0 for kj in self.k):
            raise DomainError(f"negative multiplicity in {self.k}")
        if sum(j * kj for j, kj in enumerate(self.k, 1)) != self.r:
            raise DomainError(f"{self.k} is not a partition of {self.r}")

    @property
    def parts(self) -> tuple[int, ...]:
        """Parts in nonincreasing order."""
        return tuple(j for j in range(self.r, 0, -1) for _ in range(self.k[j - 1]))

    def __str__(self) -> str:
        body = ", ".join(f"k_{j}={kj}" for j, kj in enumerate(self.k, 1) if kj)
        return "{" + body + "}"


def enumerate_partitions(r: int) -> Iterator[PartitionMultiplicity]:
    """Yield every partition of ``r`` once, in descending lex order of ``k``."""
    if r < 0:
        raise DomainError(f"cannot partition negative number {r}")
    k = [0] * r

    def fill(j: int, remaining: int) -> Iterator[PartitionMultiplicity]:
        if remaining == 0:
            yield PartitionMultiplicity(r, tuple(k))
            return
        if j > remaining:
            return
        for kj in range(remaining // j, -1, -1):
            k[j - 1] = kj
            yield from fill(j + 1, remaining - j * kj)
        k[j - 1] = 0

    yield from fill(1, r)


def partition_count(r: int) -> int:
    """p(r) by Euler's pentagonal recurrence."""
    if r < 0:
        return 0
    p = [1] + [0] * r
    for n in range(1, r + 1):
        total, m = 0, 1
        while True:
            g1 = m * (3 * m - 1) // 2
            if g1 > n:
                break
            s = 1 if m % 2 else -1
            total += s * p[n - g1]
            g2 = m * (3 * m + 1) // 2
            if g2 <= n:
                total += s * p[n - g2]
            m += 1
        p[n] = total
    return p[r]


def partition_weight(p: PartitionMultiplicity) -> int:
    """Integer coefficient r! / prod_j (k_j! * (j!)**k_j) of the monomial for ``p``."""
    den = 1
    for j, kj in enumerate(p.k, 1):
        if kj:
            den *= factorial(kj) * factorial(j) ** kj
    num = factorial(p.r)
    q, rem = divmod(num, den)
    assert rem == 0, f"non-integral weight for {p}"
    return q
