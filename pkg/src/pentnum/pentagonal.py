"""Generalized pentagonal and triangular numbers.

The exponents 0, 1, 2, 5, 7, 12, 15, ... appearing in the expansion of
prod(1 - x^m) are g_k = k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...; the term
with index k carries the sign (-1)^k.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class PentTerm:
    """One term sign * x^exponent of the pentagonal series."""

    k: int
    exponent: int
    sign: int

    def __post_init__(self) -> None:
        if self.exponent != gpent(self.k):
            raise ValueError(f"exponent {self.exponent} != gpent({self.k})")
        if self.sign != (1 if self.k % 2 == 0 else -1):
            raise ValueError(f"sign {self.sign} wrong for k={self.k}")


def pent_term(k: int) -> PentTerm:
    """The series term indexed by k."""
    return PentTerm(k=k, exponent=gpent(k), sign=1 if k % 2 == 0 else -1)


def gpent(k: int) -> int:
    """Generalized pentagonal number k(3k-1)/2; gpent(-k) = k(3k+1)/2."""
    return k * (3 * k - 1) // 2


def triangular(n: int) -> int:
    """Triangular number n(n+1)/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return n * (n + 1) // 2


def iter_pent_terms() -> Iterator[PentTerm]:
    """Yield series terms in exponent-ascending order: k = 0, 1, -1, 2, -2, ...

    Ascending order holds because gpent(k) < gpent(-k) < gpent(k+1) for k >= 1.
    """
    yield pent_term(0)
    k = 1
    while True:
        yield pent_term(k)
        yield pent_term(-k)
        k += 1


def pent_sequence(max_exponent: int) -> list[PentTerm]:
    """All terms with exponent <= max_exponent, sorted by exponent ascending."""
    if max_exponent < 0:
        raise ValueError("max_exponent must be non-negative")
    out: list[PentTerm] = []
    for term in iter_pent_terms():
        if term.exponent > max_exponent:
            break
        if out:
            # exponents are strictly monotone on this enumeration; no ties
            assert term.exponent > out[-1].exponent
        out.append(term)
    return out
