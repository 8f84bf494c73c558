"""Exact truncated formal power series over the integers (or rationals).

A TruncSeries is the image of a power series in Z[[x]]/(x^(N+1)): every
operation is exact in that quotient, there is no floating point anywhere
in this module, and binary operations truncate at the smaller of the two
orders.  BiSeries is the two-variable variant with a bounded (possibly
negative) power window in the second indeterminate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .pentagonal import gpent, iter_pent_terms

Coeff = int | Fraction


class TruncSeries:
    """Power series truncated at a fixed order, dense exact coefficients."""

    __slots__ = ("order", "coeffs", "label")

    def __init__(self, order: int, coeffs: Sequence[Coeff] = (), label: str = "x"):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = list(coeffs)
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the order allows")
        cs.extend([0] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = cs
        self.label = label

    # -- basics ------------------------------------------------------------

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 7 else ""
        return f"TruncSeries(order={self.order}, [{head}{tail}])"

    def __eq__(self, other: object) -> bool:
        """Coefficientwise equality over the common truncation."""
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):  # pragma: no cover - mutable coeff list, not hashable
        raise TypeError("TruncSeries is not hashable")

    def coefficient(self, n: int) -> Coeff:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def nonzero_items(self) -> list[tuple[int, Coeff]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncSeries(n, [a[i] + b[i] for i in range(n + 1)], self.label)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncSeries(n, [a[i] - b[i] for i in range(n + 1)], self.label)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, [-c for c in self.coeffs], self.label)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        # drive the convolution from the sparser operand
        a, b = self, other
        if sum(1 for c in a.coeffs[: n + 1] if c) > sum(1 for c in b.coeffs[: n + 1] if c):
            a, b = b, a
        bc = b.coeffs
        out = [0] * (n + 1)
        for i, ai in enumerate(a.coeffs[: n + 1]):
            if ai:
                for j in range(n - i + 1):
                    bj = bc[j]
                    if bj:
                        out[i + j] += ai * bj
        return TruncSeries(n, out, self.label)

    def scale(self, c: Coeff) -> "TruncSeries":
        return TruncSeries(self.order, [c * v for v in self.coeffs], self.label)

    def shift(self, d: int) -> "TruncSeries":
        """Multiply by x^d, keeping the truncation order."""
        if d < 0:
            raise ValueError("shift must be non-negative")
        out = [0] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if c and i + d <= self.order:
                out[i + d] = c
        return TruncSeries(self.order, out, self.label)

    def times_one_minus_power(self, m: int) -> "TruncSeries":
        """Multiply by (1 - x^m); the workhorse for building products."""
        c = self.coeffs
        out = c[:]
        out[m:] = [hi - lo for hi, lo in zip(c[m:], c)]
        return TruncSeries(self.order, out, self.label)

    def invert(self) -> "TruncSeries":
        """Multiplicative inverse; requires a unit (+-1) constant term."""
        a0 = self.coeffs[0]
        if a0 not in (1, -1):
            raise ValueError("inverse requires constant term +1 or -1")
        n = self.order
        nz = [(i, c) for i, c in enumerate(self.coeffs) if c and i > 0]
        b = [0] * (n + 1)
        b[0] = a0
        for m in range(1, n + 1):
            acc = 0
            for i, c in nz:
                if i > m:
                    break
                acc += c * b[m - i]
            b[m] = -a0 * acc
        return TruncSeries(n, b, self.label)

    def theta(self) -> "TruncSeries":
        """Apply x*d/dx: the coefficient of x^n becomes n*c_n."""
        return TruncSeries(self.order, [i * c for i, c in enumerate(self.coeffs)], self.label)

    def substitute_power(self, d: int) -> "TruncSeries":
        """Substitute x -> x^d; truncation order is preserved."""
        if d < 1:
            raise ValueError("d must be a positive integer")
        out = [0] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                j = i * d
                if j > self.order:
                    break
                out[j] = c
        return TruncSeries(self.order, out, self.label)

    # -- text serialization --------------------------------------------------

    def to_text(self) -> str:
        """Line format: header ``order N`` then ``n c_n`` per nonzero coefficient."""
        lines = [f"order {self.order}"]
        lines.extend(f"{i} {c}" for i, c in self.nonzero_items())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, label: str = "x") -> "TruncSeries":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("order "):
            raise ValueError("missing 'order N' header")
        order = int(lines[0].split()[1])
        coeffs = [0] * (order + 1)
        for ln in lines[1:]:
            n_str, c_str = ln.split()
            coeffs[int(n_str)] = int(c_str)
        return cls(order, coeffs, label)


# -- named series -----------------------------------------------------------


def one(order: int, label: str = "x") -> TruncSeries:
    return TruncSeries(order, [1], label)


def monomial(order: int, exponent: int, c: Coeff = 1, label: str = "x") -> TruncSeries:
    s = TruncSeries(order, (), label)
    if exponent <= order:
        s.coeffs[exponent] = c
    return s


def euler_product(order: int, label: str = "x") -> TruncSeries:
    """prod_{m=1..order} (1 - x^m) truncated at ``order``.

    Factors with m > order cannot touch coefficients of degree <= order,
    so the finite product equals the infinite one in the quotient ring.
    """
    c = [0] * (order + 1)
    c[0] = 1
    for m in range(1, order + 1):
        c[m:] = [hi - lo for hi, lo in zip(c[m:], c)]
    return TruncSeries(order, c, label)


def restricted_euler_product(order: int, ms: Iterable[int], label: str = "x") -> TruncSeries:
    """prod (1 - x^m) over the given exponents m, truncated at ``order``."""
    c = [0] * (order + 1)
    c[0] = 1
    for m in ms:
        if 1 <= m <= order:
            c[m:] = [hi - lo for hi, lo in zip(c[m:], c)]
    return TruncSeries(order, c, label)


def pentagonal_series(order: int, label: str = "x") -> TruncSeries:
    """sum over k of (-1)^k x^(k(3k-1)/2) truncated at ``order``."""
    c = [0] * (order + 1)
    for term in iter_pent_terms():
        if term.exponent > order:
            break
        c[term.exponent] = term.sign
    return TruncSeries(order, c, label)


def lambert_sigma_series(order: int, label: str = "x") -> TruncSeries:
    """sum_{m>=1} m*(x^m + x^(2m) + ...): coefficient of x^n is sigma(n)."""
    c = [0] * (order + 1)
    for m in range(1, order + 1):
        for j in range(m, order + 1, m):
            c[j] += m
    return TruncSeries(order, c, label)


# -- bivariate series ---------------------------------------------------------


class BiSeries:
    """Series truncated at ``order_q`` in q with z-powers confined to a window.

    Coefficients are exact integers stored densely as rows[q][z - z_min].
    Equality compares coefficientwise over the common box.  Multiplication
    truncates into the left operand's box; with a negative z window the
    caller is responsible for choosing a window wide enough that dropped
    terms can never re-enter it (see the triple-product check for the
    valuation argument this rests on).
    """

    __slots__ = ("order_q", "z_min", "z_max", "rows")

    def __init__(self, order_q: int, z_min: int, z_max: int,
                 rows: list[list[int]] | None = None):
        if order_q < 0 or z_min > z_max:
            raise ValueError("empty box")
        self.order_q = order_q
        self.z_min = z_min
        self.z_max = z_max
        width = z_max - z_min + 1
        if rows is None:
            rows = [[0] * width for _ in range(order_q + 1)]
        else:
            if len(rows) != order_q + 1 or any(len(r) != width for r in rows):
                raise ValueError("rows do not match the declared box")
        self.rows = rows

    @classmethod
    def one(cls, order_q: int, z_min: int = 0, z_max: int = 0) -> "BiSeries":
        s = cls(order_q, z_min, z_max)
        s.rows[0][-z_min] = 1
        return s

    def get(self, dq: int, dz: int) -> int:
        if 0 <= dq <= self.order_q and self.z_min <= dz <= self.z_max:
            return self.rows[dq][dz - self.z_min]
        return 0

    def set(self, dq: int, dz: int, c: int) -> None:
        self.rows[dq][dz - self.z_min] = c

    def nonzero_items(self) -> Iterator[tuple[int, int, int]]:
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c:
                    yield i, j + self.z_min, c

    def __add__(self, other: "BiSeries") -> "BiSeries":
        return self._combine(other, 1)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self._combine(other, -1)

    def _combine(self, other: "BiSeries", sign: int) -> "BiSeries":
        oq = min(self.order_q, other.order_q)
        zlo = max(self.z_min, other.z_min)
        zhi = min(self.z_max, other.z_max)
        out = BiSeries(oq, zlo, zhi)
        for i in range(oq + 1):
            out.rows[i] = [self.get(i, z) + sign * other.get(i, z)
                           for z in range(zlo, zhi + 1)]
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return first_box_discrepancy(self, other) is None

    def __hash__(self):  # pragma: no cover
        raise TypeError("BiSeries is not hashable")

    def times_one_plus_term(self, c: int, dq: int, dz: int) -> "BiSeries":
        """Multiply by (1 + c*q^dq*z^dz), truncating into this box."""
        if dq < 0:
            raise ValueError("q-shift must be non-negative")
        width = self.z_max - self.z_min + 1
        out = [row[:] for row in self.rows]
        for i in range(dq, self.order_q + 1):
            src = self.rows[i - dq]
            dst = out[i]
            if dz >= 0:
                seg = src[: width - dz] if dz else src
                if c == 1:
                    dst[dz:] = [d + s for d, s in zip(dst[dz:], seg)]
                elif c == -1:
                    dst[dz:] = [d - s for d, s in zip(dst[dz:], seg)]
                else:
                    dst[dz:] = [d + c * s for d, s in zip(dst[dz:], seg)]
            else:
                seg = src[-dz:]
                if c == 1:
                    dst[: width + dz] = [d + s for d, s in zip(dst, seg)]
                elif c == -1:
                    dst[: width + dz] = [d - s for d, s in zip(dst, seg)]
                else:
                    dst[: width + dz] = [d + c * s for d, s in zip(dst, seg)]
        return BiSeries(self.order_q, self.z_min, self.z_max, out)

    def times_term(self, c: int, dq: int, dz: int) -> "BiSeries":
        """Multiply by c*q^dq*z^dz, truncating into this box."""
        out = BiSeries(self.order_q, self.z_min, self.z_max)
        for i, z, v in self.nonzero_items():
            ni, nz = i + dq, z + dz
            if ni <= self.order_q and self.z_min <= nz <= self.z_max:
                out.rows[ni][nz - self.z_min] += c * v
        return out

    def times_univariate(self, series: TruncSeries) -> "BiSeries":
        """Multiply by a series in q alone, truncating into this box."""
        out = BiSeries(self.order_q, self.z_min, self.z_max)
        for u, cu in series.nonzero_items():
            if u > self.order_q:
                break
            for i in range(self.order_q - u + 1):
                src = self.rows[i]
                dst = out.rows[i + u]
                for j, v in enumerate(src):
                    if v:
                        dst[j] += cu * v
        return out

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        out = BiSeries(self.order_q, self.z_min, self.z_max)
        rows = out.rows
        for i, z, c in other.nonzero_items():
            if i > self.order_q:
                continue
            for si in range(self.order_q - i + 1):
                src = self.rows[si]
                dst = rows[si + i]
                for sj, v in enumerate(src):
                    if v:
                        nz = sj + self.z_min + z
                        if self.z_min <= nz <= self.z_max:
                            dst[nz - self.z_min] += c * v
        return out

    def collapse_z(self) -> TruncSeries:
        """Set z = 1: sum each q-row over the z window."""
        return TruncSeries(self.order_q, [sum(row) for row in self.rows], "q")


def first_box_discrepancy(
    a: BiSeries, b: BiSeries,
    order_q: int | None = None, z_abs_max: int | None = None,
) -> tuple[tuple[int, int], int, int] | None:
    """First differing cell over the common (optionally restricted) box."""
    oq = min(a.order_q, b.order_q)
    zlo = max(a.z_min, b.z_min)
    zhi = min(a.z_max, b.z_max)
    if order_q is not None:
        oq = min(oq, order_q)
    if z_abs_max is not None:
        zlo = max(zlo, -z_abs_max)
        zhi = min(zhi, z_abs_max)
    for i in range(oq + 1):
        for z in range(zlo, zhi + 1):
            ca, cb = a.get(i, z), b.get(i, z)
            if ca != cb:
                return (i, z), ca, cb
    return None


def first_discrepancy(a: TruncSeries, b: TruncSeries) -> tuple[int, Coeff, Coeff] | None:
    """First exponent where the two series disagree, over the common order."""
    n = min(a.order, b.order)
    for i in range(n + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return i, a.coeffs[i], b.coeffs[i]
    return None
