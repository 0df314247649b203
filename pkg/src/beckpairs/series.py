"""Exact truncated formal power series in q, and the generating functions
whose coefficients reproduce the class counts and companion statistics.

Coefficients are arbitrary-precision integers; every operation is closed
at the degree bound and operations on mismatched bounds truncate to the
smaller.  Product loops skip set elements above the bound, since a factor
1 + O(q^a) with a > N cannot affect coefficients up to N.
"""

from __future__ import annotations

from typing import Iterable

from .pairs import EulerPair


class SeriesError(ValueError):
    pass


class TruncatedSeries:
    """Integer coefficients c_0..c_N of a power series, exact through q^N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant term")

    @classmethod
    def zero(cls, degree: int) -> "TruncatedSeries":
        return cls([0] * (degree + 1))

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls([1] + [0] * degree)

    @classmethod
    def monomial(cls, a: int, degree: int, coeff: int = 1) -> "TruncatedSeries":
        c = [0] * (degree + 1)
        if a <= degree:
            c[a] = coeff
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def truncate(self, degree: int) -> "TruncatedSeries":
        if degree >= self.degree:
            return self
        return TruncatedSeries(self.coeffs[: degree + 1])

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.degree, other.degree)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.degree, other.degree)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def scale(self, k: int) -> "TruncatedSeries":
        return TruncatedSeries([k * c for c in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.degree, other.degree)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant term +1 or -1 so the
        result stays integral."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise SeriesError(f"cannot invert a series with constant term {c0}")
        n = self.degree
        out = [0] * (n + 1)
        out[0] = c0
        for i in range(1, n + 1):
            acc = 0
            for j in range(1, i + 1):
                acc += self.coeffs[j] * out[i - j]
            out[i] = -c0 * acc
        return TruncatedSeries(out)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Exact division by a unit series (constant term +-1)."""
        d0 = other.coeffs[0]
        if d0 not in (1, -1):
            raise SeriesError(f"cannot divide by a series with constant term {d0}")
        n = min(self.degree, other.degree)
        out = [0] * (n + 1)
        for i in range(n + 1):
            acc = self.coeffs[i]
            for j in range(1, i + 1):
                acc -= other.coeffs[j] * out[i - j]
            out[i] = acc * d0
        return TruncatedSeries(out)

    def __repr__(self):
        shown = ", ".join(map(str, self.coeffs[:8]))
        more = ", ..." if self.degree >= 8 else ""
        return f"TruncatedSeries([{shown}{more}], degree={self.degree})"

    def to_json(self) -> dict:
        return {"degree": self.degree, "coefficients": list(self.coeffs)}


def first_mismatch(lhs: TruncatedSeries, rhs: TruncatedSeries):
    """(degree, lhs coeff, rhs coeff) of the first disagreement, or None."""
    n = min(lhs.degree, rhs.degree)
    for i in range(n + 1):
        if lhs.coeffs[i] != rhs.coeffs[i]:
            return (i, lhs.coeffs[i], rhs.coeffs[i])
    return None


# -- elementary building blocks ---------------------------------------------


def geometric(a: int, degree: int) -> TruncatedSeries:
    """q^a / (1 - q^a) = q^a + q^{2a} + ..."""
    c = [0] * (degree + 1)
    for j in range(a, degree + 1, a):
        c[j] = 1
    return TruncatedSeries(c)


def finite_geometric(a: int, r: int, degree: int) -> TruncatedSeries:
    """1 + q^a + ... + q^{(r-1)a} = (1 - q^{ra}) / (1 - q^a)."""
    c = [0] * (degree + 1)
    for j in range(0, min((r - 1) * a, degree) + 1, a):
        c[j] = 1
    return TruncatedSeries(c)


def one_minus(a: int, degree: int) -> TruncatedSeries:
    """1 - q^a."""
    c = [0] * (degree + 1)
    c[0] = 1
    if a <= degree:
        c[a] = -1
    return TruncatedSeries(c)


def _tail_geometric(a: int, start: int, degree: int) -> TruncatedSeries:
    """q^{start*a} + q^{(start+1)a} + ... = q^{start*a} / (1 - q^a)."""
    c = [0] * (degree + 1)
    for j in range(start * a, degree + 1, a):
        c[j] = 1
    return TruncatedSeries(c)


def _band(a: int, lo: int, hi: int, degree: int) -> TruncatedSeries:
    """q^{lo*a} + q^{(lo+1)a} + ... + q^{hi*a}."""
    c = [0] * (degree + 1)
    for f in range(lo, hi + 1):
        if f * a > degree:
            break
        c[f * a] = 1
    return TruncatedSeries(c)


# -- generating functions -----------------------------------------------------


def _prod_d(pair: EulerPair, degree: int) -> TruncatedSeries:
    """Product over a in S1 of (1 + q^a + ... + q^{(r-1)a}); coefficient n
    counts the D-class partitions of n."""
    out = TruncatedSeries.one(degree)
    for a in pair.s1.elements_up_to(degree):
        out = out * finite_geometric(a, pair.r, degree)
    return out


def _prod_o(pair: EulerPair, degree: int) -> TruncatedSeries:
    """Product over b in S2 of 1 / (1 - q^b); coefficient n counts the
    O-class partitions of n."""
    out = TruncatedSeries.one(degree)
    for b in pair.s2.elements_up_to(degree):
        out = out / one_minus(b, degree)
    return out


def gf_counts(pair: EulerPair, degree: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """(gf_D, gf_O): the two class-count series, built independently."""
    return _prod_d(pair, degree), _prod_o(pair, degree)


def _sum_geometric_r(pair: EulerPair, degree: int) -> TruncatedSeries:
    """Sum over a in S1 of q^{ra} / (1 - q^{ra})."""
    out = TruncatedSeries.zero(degree)
    r = pair.r
    for a in pair.s1.elements_up_to(degree // r):
        out = out + geometric(r * a, degree)
    return out


def gf_a(pair: EulerPair, degree: int) -> TruncatedSeries:
    """Coefficient n equals |O1(n)|."""
    return _prod_o(pair, degree) * _sum_geometric_r(pair, degree)


def gf_b(pair: EulerPair, degree: int) -> TruncatedSeries:
    """Coefficient n equals b(n): the closed form is the O-side product
    times (r-1) * sum over a in S1 of q^{ra}/(1-q^{ra})."""
    return gf_a(pair, degree).scale(pair.r - 1)


def gf_c(pair: EulerPair, degree: int) -> TruncatedSeries:
    """Coefficient n equals |D1(n)|, by direct construction: choose the
    value a repeated at least r times (tail q^{ra}/(1-q^a)) and cap every
    other value at r-1 copies.  The sum over a of term_a * prod_{d != a}
    is computed as (full product) * term_a / factor_a, one unit division
    per term instead of a re-product."""
    r = pair.r
    prod = _prod_d(pair, degree)
    out = TruncatedSeries.zero(degree)
    for a in pair.s1.elements_up_to(degree // r):
        term = _tail_geometric(a, r, degree)
        out = out + (prod * term) / finite_geometric(a, r, degree)
    return out


def gf_b_prime(pair: EulerPair, degree: int) -> TruncatedSeries:
    """Coefficient n equals b'(n), from the intermediate closed form:
    D-side product times sum over a of (q^{(r+1)a} - q^{2ra})/(1-q^{ra})."""
    r = pair.r
    prod = _prod_d(pair, degree)
    acc = TruncatedSeries.zero(degree)
    for a in pair.s1.elements_up_to(degree // (r + 1)):
        num = TruncatedSeries.monomial((r + 1) * a, degree) - TruncatedSeries.monomial(
            2 * r * a, degree)
        acc = acc + num / one_minus(r * a, degree)
    return prod * acc


def gf_c_prime(pair: EulerPair, degree: int) -> TruncatedSeries:
    """Coefficient n equals |T(n)|, from the product form: sum over a of
    (q^{(r+1)a} + ... + q^{(2r-1)a}) * prod_{d != a}(1 + q^d + ... +
    q^{(r-1)d}), again via full product and per-term unit division."""
    r = pair.r
    prod = _prod_d(pair, degree)
    out = TruncatedSeries.zero(degree)
    for a in pair.s1.elements_up_to(degree // (r + 1)):
        band = _band(a, r + 1, 2 * r - 1, degree)
        out = out + (prod * band) / finite_geometric(a, r, degree)
    return out


def sets_identity_sides(pair: EulerPair, degree: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Two expansions that agree exactly when S2 = S1 \\ r*S1:

    lhs = sum over b in S2 of q^b/(1-q^b)
    rhs = sum over a in S1, k >= 1 not divisible by r, of q^{ka}
    """
    lhs = TruncatedSeries.zero(degree)
    for b in pair.s2.elements_up_to(degree):
        lhs = lhs + geometric(b, degree)
    c = [0] * (degree + 1)
    r = pair.r
    for a in pair.s1.elements_up_to(degree):
        for k in range(1, degree // a + 1):
            if k % r:
                c[k * a] += 1
    return lhs, TruncatedSeries(c)


def check_sets_identity(pair: EulerPair, degree: int) -> bool:
    lhs, rhs = sets_identity_sides(pair, degree)
    return first_mismatch(lhs, rhs) is None
