"""Divisor and partition functions via the pentagonal recurrences.

Both recurrences subtract generalized pentagonal numbers from the argument,
with signs running +, +, -, -, +, +, ...  The divisor recurrence has one
extra convention: a term that would read sigma(0) contributes n itself.
Independent oracles (trial divisor enumeration, bounded-part dynamic
programming) live here as well so the recurrences never certify themselves.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .pentagonal import gpent
from .series import pentagonal_series, lambert_sigma_series
from .identities import IDENTITY_CATALOG, IdentityReport, report_from_series


@dataclass
class SigmaTable:
    """sigma(1..n_max); values[0] is a placeholder zero."""

    n_max: int
    values: list[int]
    provenance: str  # "recurrence" | "divisor-enumeration"

    def sigma(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table bound {self.n_max}")
        return self.values[n]


@dataclass
class PartitionTable:
    """p(0..n_max)."""

    n_max: int
    values: list[int]
    provenance: str  # "recurrence" | "dynamic-programming"

    def p(self, n: int) -> int:
        if not 0 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table bound {self.n_max}")
        return self.values[n]


def _signed_offsets(n: int) -> Iterator[tuple[int, int]]:
    """(g_k, (-1)^(k+1)) over k = 1, -1, 2, -2, ... while g_k <= n."""
    k = 1
    while True:
        sign = 1 if k % 2 == 1 else -1
        g = gpent(k)
        if g > n:
            return
        yield g, sign
        g = gpent(-k)
        if g <= n:
            yield g, sign
        k += 1


# -- divisor function ---------------------------------------------------------


def sigma_divisors(n: int) -> int:
    """Sum of all divisors of n, by trial enumeration up to sqrt(n)."""
    if n < 1:
        raise ValueError("sigma is defined for n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            q = n // d
            if q != d:
                total += q
        d += 1
    return total


def sigma_terms(n: int, values: list[int]) -> list[tuple[int, int, int]]:
    """Recurrence addends for sigma(n) as (g, sign, value-used).

    ``values`` must hold sigma(1..n-1) already; a g == n term uses n itself.
    """
    out = []
    for g, sign in _signed_offsets(n):
        out.append((g, sign, n if g == n else values[n - g]))
    return out


def sigma_recurrence(n_max: int) -> SigmaTable:
    """Fill sigma(1..n_max) from the pentagonal recurrence alone."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    values = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = 0
        for g, sign, used in sigma_terms(n, values):
            acc += sign * used
        values[n] = acc
    return SigmaTable(n_max=n_max, values=values, provenance="recurrence")


def sigma_enumeration_table(n_max: int) -> SigmaTable:
    values = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        values[n] = sigma_divisors(n)
    return SigmaTable(n_max=n_max, values=values, provenance="divisor-enumeration")


# -- partition function -------------------------------------------------------


def partitions_dp(n: int, max_part: int | None = None) -> int:
    """Partitions of n into parts <= max_part (unbounded when None).

    Classic coin-counting dynamic program; the oracle for the recurrence.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is not None and max_part < 1:
        raise ValueError("max_part must be a positive integer")
    limit = n if max_part is None else min(max_part, n)
    table = [1] + [0] * n
    for part in range(1, limit + 1):
        for j in range(part, n + 1):
            table[j] += table[j - part]
    return table[n]


def partitions_dp_table(n_max: int) -> PartitionTable:
    values = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for j in range(part, n_max + 1):
            values[j] += values[j - part]
    return PartitionTable(n_max=n_max, values=values, provenance="dynamic-programming")


def partition_terms(n: int, values: list[int]) -> list[tuple[int, int, int]]:
    """Recurrence addends for p(n) as (g, sign, p(n-g)); needs p(0..n-1)."""
    return [(g, sign, values[n - g]) for g, sign in _signed_offsets(n)]


def partitions_recurrence(n_max: int) -> PartitionTable:
    """Fill p(0..n_max) from the pentagonal recurrence with seed p(0)=1."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    values = [0] * (n_max + 1)
    values[0] = 1
    for n in range(1, n_max + 1):
        acc = 0
        for g, sign in _signed_offsets(n):
            acc += sign * values[n - g]
        values[n] = acc
    return PartitionTable(n_max=n_max, values=values, provenance="recurrence")


# -- the Lambert / logarithmic-derivative identity ----------------------------


def check_sigma_lambert(order: int) -> IdentityReport:
    """Verify -x*B'(x) = B(x) * sum sigma(n) x^n with B the pentagonal series."""
    b = pentagonal_series(order)
    lhs = -b.theta()
    rhs = b * lambert_sigma_series(order)
    return report_from_series("sigma-lambert", [order], lhs, rhs)


# registered here to keep the identity catalog import-cycle free
IDENTITY_CATALOG["sigma-lambert"] = (check_sigma_lambert, (1000,))


# -- benchmark harness --------------------------------------------------------


@dataclass
class BenchReport:
    task: str
    n: int
    seconds: float
    check: str
    values_per_second: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        out = {"task": self.task, "n": self.n, "seconds": round(self.seconds, 6),
               "check": self.check}
        if self.values_per_second:
            out["values_per_second"] = round(self.values_per_second, 1)
        out.update(self.extra)
        return out


def bench_partitions(n_max: int, sink: Callable[[str], None] | None = None) -> BenchReport:
    """Time the partition recurrence; results identical to the untimed path."""
    t0 = time.perf_counter()
    table = partitions_recurrence(n_max)
    dt = time.perf_counter() - t0
    top = table.values[n_max]
    report = BenchReport(
        task="partitions",
        n=n_max,
        seconds=dt,
        check="ok",
        values_per_second=(n_max + 1) / dt if dt > 0 else float("inf"),
        extra={"digits": len(str(top)),
               "value": str(top) if n_max <= 1000 else None},
    )
    if sink is not None:
        sink(f"partitions n={n_max} seconds={dt:.6f} digits={len(str(top))}")
    return report
