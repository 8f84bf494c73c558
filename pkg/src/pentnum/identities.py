"""Executable verification of the product/series identities.

Every check compares two exactly-computed truncations coefficient by
coefficient and returns an IdentityReport; a failed check carries the first
differing exponent with both coefficients.  Identities stated with
denominators are cross-multiplied first so that everything stays in the
integer ring.  The inductive proof of the main identity is exposed as a
state machine whose every state materializes back to the product.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt

from .pentagonal import PentTerm, gpent, pent_term, triangular
from .series import (
    BiSeries,
    TruncSeries,
    euler_product,
    first_box_discrepancy,
    first_discrepancy,
    monomial,
    one,
    pentagonal_series,
    restricted_euler_product,
)


@dataclass
class IdentityReport:
    identity: str
    box: list[int]
    verified: bool
    discrepancy: tuple[tuple[int, ...], int, int] | None = None

    def to_json_dict(self) -> dict:
        disc = None
        if self.discrepancy is not None:
            exponent, lhs, rhs = self.discrepancy
            disc = {"exponent": list(exponent), "lhs": str(lhs), "rhs": str(rhs)}
        return {"identity": self.identity, "box": list(self.box),
                "verified": self.verified, "discrepancy": disc}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def report_from_series(name: str, box: list[int],
                       lhs: TruncSeries, rhs: TruncSeries) -> IdentityReport:
    d = first_discrepancy(lhs, rhs)
    if d is None:
        return IdentityReport(name, box, True)
    exponent, cl, cr = d
    return IdentityReport(name, box, False, ((exponent,), cl, cr))


def report_from_biseries(name: str, box: list[int], lhs: BiSeries, rhs: BiSeries,
                         order_q: int | None = None,
                         z_abs_max: int | None = None) -> IdentityReport:
    d = first_box_discrepancy(lhs, rhs, order_q=order_q, z_abs_max=z_abs_max)
    if d is None:
        return IdentityReport(name, box, True)
    cell, cl, cr = d
    return IdentityReport(name, box, False, (cell, cl, cr))


# -- the main identity --------------------------------------------------------


def check_pentagonal(order: int) -> IdentityReport:
    """prod(1 - x^m) against the signed pentagonal exponent series."""
    return report_from_series("pentagonal", [order],
                              euler_product(order), pentagonal_series(order))


def check_lemma(order: int) -> IdentityReport:
    """prod(1-x^m) = 1 - x - sum_{j>=2} x^j * prod_{i<j} (1-x^i)."""
    lhs = euler_product(order)
    rhs = [0] * (order + 1)
    rhs[0] = 1
    if order >= 1:
        rhs[1] -= 1
    prefix = one(order)  # prod_{i=1}^{j-1} (1 - x^i), updated as j grows
    for j in range(2, order + 1):
        prefix = prefix.times_one_minus_power(j - 1)
        for i, c in prefix.nonzero_items():
            if i + j > order:
                break
            rhs[i + j] -= c
    return report_from_series("lemma", [order], lhs,
                              TruncSeries(order, rhs))


# -- the inductive proof as a state machine -----------------------------------


@dataclass(frozen=True)
class ProofState:
    """Stage k of the expand-and-recombine induction.

    Invariant: head + scale_sign * x^scale_exponent * R_k equals the full
    product at every truncation order, where
    R_k = sum_{j>=0} prod_{i=0..j} (1 - x^(k+i)) * x^(j*k).
    """

    k: int
    head: tuple[PentTerm, ...]
    scale_sign: int
    scale_exponent: int


def proof_initial() -> ProofState:
    return ProofState(
        k=1,
        head=(pent_term(0), pent_term(1)),
        scale_sign=-1,
        scale_exponent=gpent(1) + 1,
    )


def proof_step(state: ProofState) -> ProofState:
    """Advance one stage: R_k = 1 - x^(2k+1) - x^(3k+2) * R_(k+1).

    The two absorbed terms have exponents gpent(k)+k = gpent(-k) and
    gpent(k)+3k+1 = gpent(k+1), so the head gains exactly those two terms.
    """
    k = state.k
    emitted_a = pent_term(-k)       # exponent gpent(-k), sign (-1)^k
    emitted_b = pent_term(k + 1)    # exponent gpent(k+1), sign (-1)^(k+1)
    assert emitted_a.exponent == state.scale_exponent
    assert emitted_b.exponent == state.scale_exponent + 2 * k + 1
    new_exponent = state.scale_exponent + 3 * k + 2
    assert new_exponent == gpent(k + 1) + (k + 1)
    return ProofState(
        k=k + 1,
        head=state.head + (emitted_a, emitted_b),
        scale_sign=-state.scale_sign,
        scale_exponent=new_exponent,
    )


def proof_materialize(state: ProofState, order: int) -> TruncSeries:
    """Head plus scaled remainder, truncated at ``order``."""
    coeffs = [0] * (order + 1)
    for term in state.head:
        if term.exponent <= order:
            coeffs[term.exponent] = term.sign
    k = state.k
    room = order - state.scale_exponent
    if room >= 0:
        rem = [0] * (room + 1)
        running = one(room)
        j = 0
        while j * k <= room:
            running = running.times_one_minus_power(k + j)
            base = j * k
            for i, c in running.nonzero_items():
                if base + i > room:
                    break
                rem[base + i] += c
            j += 1
        s = state.scale_sign
        off = state.scale_exponent
        for i, c in enumerate(rem):
            if c:
                coeffs[off + i] += s * c
    return TruncSeries(order, coeffs)


# -- expansions with factorial-style denominators ------------------------------


def check_s_expansion(order: int) -> IdentityReport:
    """prod(1-x^m) = 1 + sum_j (-1)^j x^(T_j) / prod_{i<=j}(1-x^i).

    Cross-multiplied by D = prod_{i<=J}(1-x^i) with J the last triangular
    index below the order; terms past J have valuation beyond the box.
    """
    J = 0
    while triangular(J + 1) <= order:
        J += 1
    d = restricted_euler_product(order, range(1, J + 1))
    lhs = euler_product(order) * d
    # suffix products S_j = prod_{i=j+1..J} (1 - x^i), built downward
    suffix = [one(order)] * (J + 1)
    for j in range(J - 1, -1, -1):
        suffix[j] = suffix[j + 1].times_one_minus_power(j + 1)
    rhs = d
    for j in range(1, J + 1):
        sign = -1 if j % 2 else 1
        rhs = rhs + suffix[j].shift(triangular(j)).scale(sign)
    return report_from_series("s-expansion", [order], lhs, rhs)


def _suffix_products_in_m(order_m: int, count: int) -> list[TruncSeries]:
    """suffix[j] = prod_{i=j+1..count} (1 - m^i), truncated at order_m."""
    suffix = [one(order_m)] * (count + 1)
    for j in range(count - 1, -1, -1):
        suffix[j] = suffix[j + 1].times_one_minus_power(j + 1)
    return suffix


def check_qbinomial_plus(order_m: int, order_z: int) -> IdentityReport:
    """prod(1 + m^k z) = 1 + sum_k m^(T_k) z^k / prod_{i<=k}(1-m^i).

    Cross-multiplied by D = prod_{i<=order_z}(1-m^i); only z-degrees up to
    order_z carry denominator factors inside the box.
    """
    lhs = BiSeries.one(order_m, 0, order_z)
    for k in range(1, order_m + 1):
        lhs = lhs.times_one_plus_term(1, k, 1)
    suffix = _suffix_products_in_m(order_m, order_z)
    d = suffix[0]
    lhs = lhs.times_univariate(d)
    rhs = BiSeries(order_m, 0, order_z)
    for u, c in d.nonzero_items():
        rhs.set(u, 0, c)
    for k in range(1, order_z + 1):
        t_k = triangular(k)
        for u, c in suffix[k].nonzero_items():
            if t_k + u <= order_m:
                rhs.set(t_k + u, k, c)
    return report_from_biseries("qbinomial-plus", [order_m, order_z], lhs, rhs)


def check_qbinomial_inv(order_m: int, order_z: int) -> IdentityReport:
    """1/prod(1 - m^k z) = 1 + sum_k m^k z^k / prod_{i<=k}(1-m^i).

    Stated multiplicatively: prod(1 - m^k z) * (cross-multiplied RHS) = D.
    """
    prod = BiSeries.one(order_m, 0, order_z)
    for k in range(1, order_m + 1):
        prod = prod.times_one_plus_term(-1, k, 1)
    suffix = _suffix_products_in_m(order_m, order_z)
    d = suffix[0]
    rhs_cross = BiSeries(order_m, 0, order_z)
    for u, c in d.nonzero_items():
        rhs_cross.set(u, 0, c)
    for k in range(1, order_z + 1):
        for u, c in suffix[k].nonzero_items():
            if k + u <= order_m:
                rhs_cross.set(k + u, k, c)
    lhs = prod * rhs_cross
    target = BiSeries(order_m, 0, order_z)
    for u, c in d.nonzero_items():
        target.set(u, 0, c)
    return report_from_biseries("qbinomial-inv", [order_m, order_z], lhs, target)


# -- doubled exponents and half-odd factors ------------------------------------


def check_goldbach_cb(order: int) -> IdentityReport:
    """With B the expanded product and C = B(x^2): B = C * prod(1 - x^odd).

    Doubling the exponents of B gives the even-index product, and restoring
    the odd-index factors recovers the full product; equivalently the ratio
    of B to C is exactly the odd-exponent product.
    """
    b = pentagonal_series(order)
    c = b.substitute_power(2)
    odd = restricted_euler_product(order, range(1, order + 1, 2))
    return report_from_series("goldbach-cb", [order], b, c * odd)


def check_half_integer(order: int) -> IdentityReport:
    """In y with x = y^2: prod(1-y^2m) * prod(1-y^(2m-1)) equals the
    pentagonal series in y, which pins down the sign-pattern claim."""
    even = restricted_euler_product(order, range(2, order + 1, 2), label="y")
    odd = restricted_euler_product(order, range(1, order + 1, 2), label="y")
    return report_from_series("half-integer", [order], even * odd,
                              pentagonal_series(order, label="y"))


def half_integer_sign_pattern(order: int) -> str:
    """Signs of the nonzero coefficients of the combined product, for display."""
    prod = euler_product(order)
    return "".join("+" if c > 0 else "-" for _, c in prod.nonzero_items())


# -- triple product and its relatives -------------------------------------------


def check_jacobi_triple(order_q: int, z_max: int) -> IdentityReport:
    """prod (1-q^2m)(1+q^(2m-1)z^2)(1+q^(2m-1)z^-2) = sum q^(n^2) z^(2n).

    Internally the z window is widened to +-2*(isqrt(order_q)+1): reaching
    z-power 2a costs at least a^2 in q-degree (distinct odd exponents), so
    any term pushed beyond the wide window is already past the q-box and
    can never re-enter the compared region.  Factor count M > order_q/2
    makes the q-box exact.
    """
    if z_max < 1:
        raise ValueError("z_max must be >= 1")
    z_inner = 2 * max(z_max, isqrt(order_q) + 1)
    lhs = BiSeries.one(order_q, -z_inner, z_inner)
    m_count = order_q // 2 + 1
    for m in range(1, m_count + 1):
        lhs = lhs.times_one_plus_term(-1, 2 * m, 0)
        lhs = lhs.times_one_plus_term(1, 2 * m - 1, 2)
        lhs = lhs.times_one_plus_term(1, 2 * m - 1, -2)
    rhs = BiSeries(order_q, -z_inner, z_inner)
    n = 0
    while n * n <= order_q:
        if 2 * n <= z_inner:
            rhs.set(n * n, 2 * n, 1)
            if n:
                rhs.set(n * n, -2 * n, 1)
        n += 1
    return report_from_biseries("jacobi-triple", [order_q, z_max], lhs, rhs,
                                z_abs_max=2 * z_max)


def check_jtp_specialization(order: int) -> IdentityReport:
    """prod (1-x^3m)(1-x^(3m-1))(1-x^(3m-2)) against sum (-1)^n x^(n(3n+1)/2)."""
    lhs = restricted_euler_product(order, range(3, order + 1, 3))
    lhs = lhs * restricted_euler_product(order, range(2, order + 1, 3))
    lhs = lhs * restricted_euler_product(order, range(1, order + 1, 3))
    return report_from_series("jtp-specialization", [order], lhs,
                              pentagonal_series(order))


def check_cube(order: int) -> IdentityReport:
    """prod(1-x^m)^3 = sum_{n>=0} (-1)^n (2n+1) x^(n(n+1)/2)."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    cube = TruncSeries(order, coeffs)
    for _ in range(3):
        for m in range(1, order + 1):
            cube = cube.times_one_minus_power(m)
    rhs = TruncSeries(order, ())
    n = 0
    while triangular(n) <= order:
        rhs.coeffs[triangular(n)] = (2 * n + 1) * (1 if n % 2 == 0 else -1)
        n += 1
    return report_from_series("cube", [order], cube, rhs)


def check_andrews(order_q: int, order_z: int) -> IdentityReport:
    """Bivariate sharpening of the main identity:

    1 - sum_m (1-zq)...(1-zq^(m-1)) z^(m+1) q^m
      = 1 + sum_n (-1)^n (z^(3n-1) q^(n(3n-1)/2) + z^(3n) q^(n(3n+1)/2)).

    Also collapses z = 1 on a wide-enough window and compares against the
    pentagonal series (summand m reaches z-degree 2m, hence the 2q+2 window).
    """
    lhs = BiSeries.one(order_q, 0, order_z)
    running = BiSeries.one(order_q, 0, order_z)
    for m in range(1, min(order_q, order_z - 1) + 1):
        if m >= 2:
            running = running.times_one_plus_term(-1, m - 1, 1)
        lhs = lhs - running.times_term(1, m, m + 1)
    rhs = BiSeries.one(order_q, 0, order_z)
    n = 1
    while True:
        sign = -1 if n % 2 else 1
        placed = False
        for dq, dz in ((gpent(n), 3 * n - 1), (gpent(-n), 3 * n)):
            if dq <= order_q and dz <= order_z:
                rhs.set(dq, dz, sign)
                placed = True
        if not placed:
            break
        n += 1
    report = report_from_biseries("andrews", [order_q, order_z], lhs, rhs)
    if not report.verified:
        return report

    bq = min(order_q, 12)
    wide = BiSeries.one(bq, 0, 2 * bq + 2)
    running = BiSeries.one(bq, 0, 2 * bq + 2)
    for m in range(1, bq + 1):
        if m >= 2:
            running = running.times_one_plus_term(-1, m - 1, 1)
        wide = wide - running.times_term(1, m, m + 1)
    collapse = report_from_series("andrews", [order_q, order_z],
                                  wide.collapse_z(), pentagonal_series(bq))
    return collapse


# -- catalog for the command line and the full suite ---------------------------

# name -> (callable, default box); two-element boxes take (--degree, --zdegree)
IDENTITY_CATALOG: dict[str, tuple] = {
    "pentagonal": (check_pentagonal, (10000,)),
    "lemma": (check_lemma, (200,)),
    "s-expansion": (check_s_expansion, (500,)),
    "qbinomial-plus": (check_qbinomial_plus, (40, 8)),
    "qbinomial-inv": (check_qbinomial_inv, (40, 8)),
    "goldbach-cb": (check_goldbach_cb, (500,)),
    "half-integer": (check_half_integer, (500,)),
    "jacobi-triple": (check_jacobi_triple, (200, 14)),
    "jtp-specialization": (check_jtp_specialization, (1000,)),
    "cube": (check_cube, (2000,)),
    "andrews": (check_andrews, (60, 60)),
}


def run_identity(name: str, degree: int | None = None,
                 zdegree: int | None = None) -> IdentityReport:
    """Run one catalog identity, with optional box overrides."""
    try:
        fn, default_box = IDENTITY_CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; known: "
                       + ", ".join(sorted(IDENTITY_CATALOG))) from None
    box = list(default_box)
    if degree is not None:
        box[0] = degree
    if zdegree is not None:
        if len(box) < 2:
            raise ValueError(f"identity {name!r} takes no z-degree")
        box[1] = zdegree
    return fn(*box)
