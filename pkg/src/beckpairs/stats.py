"""Restricted partition classes and their companion statistics.

For an Euler pair (S1, S2) of order r and a size n, five classes are
enumerated:

  O    parts in S2, multiplicities unrestricted
  D    parts in S1, every multiplicity <= r-1
  O1   parts in S1, exactly one distinct part value non-primitive
       (any multiplicity on it; primitive parts unrestricted)
  D1   parts in S1, exactly one value with multiplicity >= r,
       all other values <= r-1
  T    the subset of D1 whose distinguished multiplicity f satisfies
       r < f < 2r

The companion statistics compare total part counts and total
distinct-part counts across O and D:

  b  = sum of lengths over O  minus sum of lengths over D
  b' = sum of distinct-part counts over D minus the same over O

and the first/second Beck-type identities assert
(r-1)*|O1| = b = (r-1)*|D1| and |T| = b'.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .pairs import EulerPair, PairError
from .partitions import PartConstraint, Partition, iter_partitions


class ClassId(enum.Enum):
    O = "O"
    D = "D"
    O1 = "O1"
    D1 = "D1"
    T = "T"


def iter_class(pair: EulerPair, n: int, cls: ClassId) -> Iterator[Partition]:
    """Stream the members of one class (enumeration order unspecified;
    use :func:`enumerate_class` for the canonical order).

    Assumes the pair's closure has been validated up to n.
    """
    r, s1, s2 = pair.r, pair.s1, pair.s2
    if cls is ClassId.O:
        yield from iter_partitions(n, PartConstraint(s2.contains))
    elif cls is ClassId.D:
        yield from iter_partitions(n, PartConstraint(s1.contains, r - 1))
    elif cls is ClassId.O1:
        # Choose the unique non-primitive value v and its multiplicity f,
        # then fill the remainder with primitive parts; avoids filtering
        # the much larger space of all S1-partitions.
        for v in s1.elements_up_to(n):
            if s2.contains(v):
                continue
            for f in range(1, n // v + 1):
                chosen = Partition(((v, f),))
                for rest in iter_partitions(n - f * v, PartConstraint(s2.contains)):
                    yield rest.union(chosen)
    elif cls is ClassId.D1:
        yield from _iter_one_heavy(pair, n, range(r, n + 1))
    elif cls is ClassId.T:
        yield from _iter_one_heavy(pair, n, range(r + 1, 2 * r))
    else:  # pragma: no cover
        raise ValueError(f"unknown class {cls!r}")


def _iter_one_heavy(pair: EulerPair, n: int, mult_range: range) -> Iterator[Partition]:
    """Partitions with parts in S1 and exactly one value whose multiplicity
    lies in ``mult_range`` (>= r); every other value stays below r."""
    s1 = pair.s1
    for v in s1.elements_up_to(n // pair.r):
        top = n // v
        for f in mult_range:
            if f > top:
                break
            chosen = Partition(((v, f),))
            others = PartConstraint(
                lambda d, _v=v: d != _v and s1.contains(d), pair.r - 1)
            for rest in iter_partitions(n - f * v, others):
                yield rest.union(chosen)


def enumerate_class(pair: EulerPair, n: int, cls: ClassId) -> list[Partition]:
    """Members of one class in lexicographically decreasing order."""
    pair.ensure_valid(n)
    return sorted(iter_class(pair, n, cls), reverse=True)


@dataclass(frozen=True)
class BeckReport:
    """Class sizes and companion statistics at a single size n.

    b and b' are exact signed integers; the identities force them
    non-negative but nothing here assumes it (a failed assumption is
    precisely the signal the ok flags exist to catch).
    """

    n: int
    count_o: int
    count_d: int
    a: int
    b: int
    c: int
    b_prime: int
    c_prime: int
    ok_beck1: bool
    ok_beck2: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "O_r": self.count_o,
            "D_r": self.count_d,
            "a_r": self.a,
            "b_r": self.b,
            "c_r": self.c,
            "b'_r": self.b_prime,
            "c'_r": self.c_prime,
            "ok_beck1": self.ok_beck1,
            "ok_beck2": self.ok_beck2,
        }


REPORT_COLUMNS = ["n", "O_r", "D_r", "a_r", "b_r", "c_r", "b'_r", "c'_r",
                  "ok_beck1", "ok_beck2"]


def beck_statistics(pair: EulerPair, n: int) -> BeckReport:
    """Compute every statistic at size n by streaming the class
    enumerations (no list is materialized)."""
    if n < 0:
        raise PairError(f"size must be non-negative, got {n}")
    pair.ensure_valid(n)
    r = pair.r

    count_o = len_o = dist_o = 0
    for p in iter_class(pair, n, ClassId.O):
        count_o += 1
        len_o += p.length
        dist_o += p.distinct_count
    count_d = len_d = dist_d = 0
    for p in iter_class(pair, n, ClassId.D):
        count_d += 1
        len_d += p.length
        dist_d += p.distinct_count

    a = sum(1 for _ in iter_class(pair, n, ClassId.O1))
    c = sum(1 for _ in iter_class(pair, n, ClassId.D1))
    c_prime = sum(1 for _ in iter_class(pair, n, ClassId.T))

    b = len_o - len_d
    b_prime = dist_d - dist_o
    ok1 = (r - 1) * a == b and b == (r - 1) * c
    ok2 = c_prime == b_prime
    return BeckReport(n, count_o, count_d, a, b, c, b_prime, c_prime, ok1, ok2)


def sweep(pair: EulerPair, ns) -> list[BeckReport]:
    """BeckReport for each n, ascending."""
    return [beck_statistics(pair, n) for n in sorted(ns)]


def distinct_core_multiplicity(pair: EulerPair, mu: Partition, core: int) -> int:
    """Number of distinct exponents t >= 0 such that r^t * core is a part
    of mu.  ``core`` must be primitive."""
    if not pair.s2.contains(core):
        raise PairError(f"{core} is not a primitive element of pair {pair.name!r}")
    if not mu.parts:
        return 0
    count = 0
    v = core
    top = mu.parts[0][0]
    while v <= top:
        if mu.multiplicity_of(v) and pair.s1.contains(v):
            # count only genuine r^t*core parts (v must decompose to core)
            if pair.decompose(v).core == core:
                count += 1
        v *= pair.r
    return count
