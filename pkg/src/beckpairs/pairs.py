"""Euler pairs of order r.

A pair consists of r >= 2 and a set S1 of positive integers with
r*S1 contained in S1; the primitive elements are S2 = S1 \\ r*S1.  S2 is
always derived from S1.  The catalog's closed-form congruence
descriptions of S2 are kept only as cross-checks, never as the source of
truth: once S1 and r are fixed, S2 is forced, and deriving it removes the
risk of mistranscribing a closed form.

Every part a of S1 factors uniquely as a = r^k * core with core in S2 and
k >= 0 maximal; parts with k >= 1 are called non-primitive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt
from typing import Callable, NamedTuple


class PairError(ValueError):
    """Invalid pair parameters or an operation on a part outside S1."""


class IntegerSet:
    """A set of positive integers given by a pure membership predicate.

    The membership predicate and the bounded generator always agree:
    ``m in elements_up_to(B)`` iff ``m <= B and contains(m)``.  Predicates
    are pure, so optional memoization only caches repeated answers; the
    cache dict is only ever grown, which is safe under CPython's atomic
    dict operations.
    """

    __slots__ = ("_predicate", "description", "_memo")

    def __init__(self, predicate: Callable[[int], bool], description: str = "",
                 memoize: bool = False):
        self._predicate = predicate
        self.description = description
        self._memo: dict[int, bool] | None = {} if memoize else None

    def contains(self, m: int) -> bool:
        if m <= 0:
            return False
        if self._memo is None:
            return self._predicate(m)
        hit = self._memo.get(m)
        if hit is None:
            hit = self._memo[m] = self._predicate(m)
        return hit

    __contains__ = contains

    def elements_up_to(self, bound: int) -> list[int]:
        return [m for m in range(1, bound + 1) if self.contains(m)]

    @classmethod
    def from_residues(cls, modulus: int, residues, description: str = "") -> "IntegerSet":
        if modulus < 1:
            raise PairError(f"modulus must be >= 1, got {modulus}")
        allowed = frozenset(x % modulus for x in residues)
        return cls(lambda m: m % modulus in allowed,
                   description or f"m mod {modulus} in {sorted(allowed)}")

    @classmethod
    def from_elements(cls, elements, description: str = "") -> "IntegerSet":
        fixed = frozenset(elements)
        return cls(lambda m: m in fixed, description or f"elements {sorted(fixed)}")

    def __repr__(self):
        return f"IntegerSet({self.description or 'predicate'})"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking r*S1 <= S1 on a finite range.

    Validation up to ``bound`` is exact for identity checks at sizes
    n <= bound, since only elements <= n ever occur as parts.
    """

    ok: bool
    r: int
    bound: int
    counterexample: int | None = None

    def message(self) -> str:
        if self.ok:
            return f"closure r*S1 <= S1 holds up to {self.bound}"
        m = self.counterexample
        return (f"closure fails: m={m} is in S1 but {self.r}*{m}="
                f"{self.r * m} is not")


def validate(s1: IntegerSet, r: int, bound: int) -> ValidationReport:
    """Check rm in S1 for every m in S1 with rm <= bound.

    Returns the least violating m on failure.
    """
    if r < 2:
        raise PairError(f"order r must be >= 2, got {r}")
    if bound < r:
        raise PairError(f"validation bound must be >= r, got {bound}")
    for m in s1.elements_up_to(bound // r):
        if not s1.contains(r * m):
            return ValidationReport(False, r, bound, m)
    return ValidationReport(True, r, bound)


class PartDecomposition(NamedTuple):
    """part = core * r**exponent with core primitive."""

    core: int
    exponent: int


class EulerPair:
    """Order r plus S1, with S2 derived as S1 \\ r*S1.

    ``closed_s2`` optionally records a published closed-form description
    of S2 used for cross-checking only.  Membership predicates are pure;
    instances are safe to share across threads.
    """

    __slots__ = ("name", "r", "s1", "s2", "closed_s2", "params", "_valid_bound")

    def __init__(self, r: int, s1: IntegerSet, name: str = "custom",
                 closed_s2: IntegerSet | None = None, params: dict | None = None):
        if r < 2:
            raise PairError(f"order r must be >= 2, got {r}")
        self.name = name
        self.r = r
        self.s1 = s1
        self.s2 = IntegerSet(
            lambda m: s1.contains(m) and not (m % r == 0 and s1.contains(m // r)),
            description=f"S1 \\ {r}*S1",
        )
        self.closed_s2 = closed_s2
        self.params = dict(params or {})
        self._valid_bound = 0

    def validate(self, bound: int) -> ValidationReport:
        return validate(self.s1, self.r, bound)

    def ensure_valid(self, bound: int) -> None:
        """Validate closure up to ``bound`` (cached), raising on failure."""
        bound = max(bound, self.r)
        if bound <= self._valid_bound:
            return
        report = self.validate(bound)
        if not report.ok:
            raise PairError(f"pair {self.name!r}: {report.message()}")
        self._valid_bound = bound

    def decompose(self, part: int) -> PartDecomposition:
        """Write part = r^k * core with k maximal and core in S2."""
        if not self.s1.contains(part):
            raise PairError(f"part {part} is not in S1 of pair {self.name!r}")
        k = 0
        while part % self.r == 0 and self.s1.contains(part // self.r):
            part //= self.r
            k += 1
        return PartDecomposition(part, k)

    def is_primitive(self, part: int) -> bool:
        return self.s2.contains(part)

    def is_nonprimitive(self, part: int) -> bool:
        """True for elements of r*S1 (equivalently, S1 minus S2)."""
        return self.s1.contains(part) and not self.s2.contains(part)

    def s2_discrepancies(self, bound: int) -> list[int]:
        """Elements <= bound where derived S2 and the closed form disagree.

        Empty when no closed form is recorded.
        """
        if self.closed_s2 is None:
            return []
        return [m for m in range(1, bound + 1)
                if self.s2.contains(m) != self.closed_s2.contains(m)]

    def __repr__(self):
        extras = "".join(f", {k}={v}" for k, v in self.params.items() if k != "r")
        return f"EulerPair({self.name!r}, r={self.r}{extras})"


# ---------------------------------------------------------------------------
# catalog


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def _rep_x2_plus_2y2(m: int) -> bool:
    # m = x^2 + 2 y^2 over the integers; x, y >= 0 suffices.
    y = 0
    while 2 * y * y <= m:
        rest = m - 2 * y * y
        s = isqrt(rest)
        if s * s == rest:
            return True
        y += 1
    return False


@lru_cache(maxsize=None)
def _rep_x2_xy_y2(m: int) -> bool:
    # m = x^2 + x*y + y^2.  Any represented m has a representation with
    # x, y >= 0 (the form's symmetries map (x, y) to (x+y, -y) and swap
    # coordinates), so solve y^2 + x*y + (x^2 - m) = 0 for each x >= 0.
    x = 0
    while x * x <= m:
        disc = 4 * m - 3 * x * x
        s = isqrt(disc)
        if s * s == disc and s >= x and (s - x) % 2 == 0:
            return True
        x += 1
    return False


def _qr_set(p: int) -> frozenset[int]:
    """Nonzero quadratic residues mod p."""
    return frozenset(pow(x, 2, p) for x in range(1, p))


def _classical(r: int = 2) -> EulerPair:
    return EulerPair(
        r,
        IntegerSet(lambda m: True, "all positive integers"),
        name="classical",
        closed_s2=IntegerSet(lambda m: m % r != 0, f"m not divisible by {r}"),
        params={"r": r},
    )


def _example_odd_mod6() -> EulerPair:
    return EulerPair(
        3,
        IntegerSet.from_residues(2, [1], "odd"),
        name="example-odd-mod6",
        closed_s2=IntegerSet.from_residues(6, [1, 5]),
        params={"r": 3},
    )


def _family_v(r: int) -> EulerPair:
    m1, m2 = r * (r + 1), r * r * (r + 1)
    s1 = IntegerSet.from_residues(m1, [r, m1 - r])
    bad = frozenset({r * r, m2 - r * r})
    closed = IntegerSet(
        lambda m: s1.contains(m) and m % m2 not in bad,
        f"m = +-{r} mod {m1}, m != +-{r * r} mod {m2}",
    )
    return EulerPair(r, s1, name="family-v", closed_s2=closed, params={"r": r})


def _family_vi(r: int) -> EulerPair:
    m1, m2 = r * (r + 1), r * r * (r + 1)
    s1 = IntegerSet.from_residues(m1, [r, m1 - r, m1 - 1])
    bad = frozenset({r * r, m2 - r * r, m2 - r})
    closed = IntegerSet(
        lambda m: s1.contains(m) and m % m2 not in bad,
        f"m = +-{r},-1 mod {m1}, m != +-{r * r},-{r} mod {m2}",
    )
    return EulerPair(r, s1, name="family-vi", closed_s2=closed, params={"r": r})


def _family_vii(r: int) -> EulerPair:
    if not _is_prime(r + 1):
        raise PairError(f"family-vii requires r + 1 prime; got r={r}, r+1={r + 1} composite")
    q = r + 1
    s1 = IntegerSet(lambda m: m % q != 0, f"m not divisible by {q}")
    modulus = r * r + r
    bad = frozenset(t * r % modulus for t in range(1, r + 1)) | frozenset(
        t * q % modulus for t in range(1, r + 1))
    closed = IntegerSet(lambda m: m % modulus not in bad,
                        f"m mod {modulus} not in {sorted(bad)}")
    return EulerPair(r, s1, name="family-vii", closed_s2=closed, params={"r": r})


def _family_viii(p: int, r: int) -> EulerPair:
    if not _is_prime(p):
        raise PairError(f"family-viii requires p prime; got p={p}")
    qr = _qr_set(p)
    if r % p not in qr:
        raise PairError(
            f"family-viii requires r to be a quadratic residue mod p; "
            f"r={r} is not a residue mod {p}")
    s1 = IntegerSet(lambda m: m % p in qr, f"m a quadratic residue mod {p}")
    # The closed form below is a cross-check only; discrepancies against
    # the derived S2 are surfaced as a report, not assumed away.
    closed = IntegerSet(lambda m: m % p in qr and m % r != 0,
                        f"m QR mod {p} and m not divisible by {r}")
    return EulerPair(r, s1, name="family-viii", closed_s2=closed,
                     params={"p": p, "r": r})


def _schur() -> EulerPair:
    pair = _family_vii(2)
    pair.name = "schur"
    return pair


def _gollnitz() -> EulerPair:
    pair = _family_vi(2)
    pair.name = "gollnitz"
    return pair


def _qf_x2_2y2() -> EulerPair:
    s1 = IntegerSet(_rep_x2_plus_2y2, "m = x^2 + 2y^2")
    closed = IntegerSet(lambda m: m % 2 == 1 and _rep_x2_plus_2y2(m),
                        "odd m = x^2 + 2y^2")
    return EulerPair(2, s1, name="qf-x2+2y2", closed_s2=closed, params={"r": 2})


def _qf_x2_xy_y2() -> EulerPair:
    s1 = IntegerSet(_rep_x2_xy_y2, "m = x^2 + xy + y^2")
    closed = IntegerSet(lambda m: m % 3 != 0 and _rep_x2_xy_y2(m),
                        "m = x^2 + xy + y^2 coprime to 3")
    return EulerPair(3, s1, name="qf-x2+xy+y2", closed_s2=closed, params={"r": 3})


def _custom(modulus: int, residues, r: int) -> EulerPair:
    s1 = IntegerSet.from_residues(modulus, residues)
    return EulerPair(r, s1, name="custom",
                     params={"modulus": modulus, "residues": sorted(set(residues)), "r": r})


_CATALOG: dict[str, tuple[Callable, str, str]] = {
    "classical": (_classical, "r (default 2)", "S1 = all positive integers"),
    "schur": (_schur, "", "r=2; S1 = m not divisible by 3"),
    "gollnitz": (_gollnitz, "", "r=2; S1 = m in {2,4,5} mod 6"),
    "qf-x2+2y2": (_qf_x2_2y2, "", "r=2; S1 = m representable as x^2+2y^2"),
    "qf-x2+xy+y2": (_qf_x2_xy_y2, "", "r=3; S1 = m representable as x^2+xy+y^2"),
    "family-v": (_family_v, "r", "S1 = m congruent to +-r mod r(r+1)"),
    "family-vi": (_family_vi, "r", "S1 = m congruent to +-r,-1 mod r(r+1)"),
    "family-vii": (_family_vii, "r (r+1 prime)", "S1 = m not divisible by r+1"),
    "family-viii": (_family_viii, "p, r (p prime, r QR mod p)",
                    "S1 = quadratic residues mod p"),
    "example-odd-mod6": (_example_odd_mod6, "", "r=3; S1 = odd numbers"),
    "custom": (_custom, "modulus, residues, r", "S1 = residue classes mod modulus"),
}


def catalog_ids() -> list[str]:
    return list(_CATALOG)


def catalog_entries() -> list[tuple[str, str, str]]:
    """(id, parameter signature, S1 summary) for every catalog family."""
    return [(name, sig, desc) for name, (_, sig, desc) in _CATALOG.items()]


def builtin_pair(family: str, r: int | None = None, p: int | None = None,
                 modulus: int | None = None, residues=None) -> EulerPair:
    """Build a catalog pair, rejecting parameters that violate a family's
    hypotheses with a message naming the failed one."""
    if family not in _CATALOG:
        raise PairError(f"unknown pair family {family!r}; known: {', '.join(_CATALOG)}")
    builder = _CATALOG[family][0]
    if family == "classical":
        return builder(2 if r is None else r)
    if family in ("family-v", "family-vi", "family-vii"):
        if r is None:
            raise PairError(f"{family} requires parameter r")
        return builder(r)
    if family == "family-viii":
        if p is None or r is None:
            raise PairError("family-viii requires parameters p and r")
        return builder(p, r)
    if family == "custom":
        if modulus is None or residues is None or r is None:
            raise PairError("custom pairs require modulus, residues and r")
        return builder(modulus, residues, r)
    # fixed-parameter families; reject a contradicting r
    pair = builder()
    if r is not None and r != pair.r:
        raise PairError(f"{family} has fixed order r={pair.r}, got r={r}")
    return pair
