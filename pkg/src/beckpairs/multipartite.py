"""Vector-partition analogues of the classes and statistics.

A multipartite number is an s-tuple of non-negative integers, not all
zero; a multipartition of a target is a lexicographically non-increasing
sequence of such tuples summing componentwise to it.  Relative to an
Euler pair (S1, S2) of order r, a multipart whose positive entries all
lie in S1 is primitive when at least one entry lies in S2.  Zero entries
are permitted inside a multipart (only positive entries are constrained
to S1); a multipart with no positive S2 entry counts as non-primitive.

The classes mirror the scalar ones: VD restricts multipart
multiplicities to at most r-1, VO requires every multipart primitive,
and the merge/split transform trades r equal multiparts for their vector
sum.  For s = 1 everything reduces exactly to the scalar classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .pairs import EulerPair, PairError

Multipart = tuple[int, ...]
Multipartition = tuple[Multipart, ...]


class MultipartError(ValueError):
    pass


def check_multipart(pair: EulerPair, v: Multipart) -> None:
    if not any(v):
        raise MultipartError(f"multipart {v} has no positive entry")
    for e in v:
        if e < 0:
            raise MultipartError(f"multipart {v} has a negative entry")
        if e > 0 and not pair.s1.contains(e):
            raise MultipartError(f"entry {e} of multipart {v} is not in S1")


def is_primitive_multipart(pair: EulerPair, v: Multipart) -> bool:
    """True when some positive entry is primitive (lies in S2)."""
    check_multipart(pair, v)
    return any(e > 0 and pair.s2.contains(e) for e in v)


def multipart_exponent(pair: EulerPair, v: Multipart) -> int:
    """Smallest exponent of r over the decompositions of the positive
    entries; 0 exactly for primitive multiparts."""
    check_multipart(pair, v)
    return min(pair.decompose(e).exponent for e in v if e > 0)


def _allowed_multiparts(pair: EulerPair, target: Multipart) -> list[Multipart]:
    """Every candidate multipart fitting under the target componentwise,
    lexicographically decreasing."""
    cands = []
    for v in product(*(range(t + 1) for t in target)):
        if not any(v):
            continue
        if all(e == 0 or pair.s1.contains(e) for e in v):
            cands.append(v)
    cands.sort(reverse=True)
    return cands


def _iter_multipartitions(target: Multipart, candidates: list[Multipart],
                          max_mult: int | None) -> Iterator[Multipartition]:
    """Multipartitions of ``target`` drawing parts from ``candidates``
    (sorted decreasing), multiplicities capped at ``max_mult``."""
    s = len(target)

    def rec(remaining: tuple[int, ...], start: int):
        if not any(remaining):
            yield ()
            return
        for i in range(start, len(candidates)):
            v = candidates[i]
            top = None
            fits = True
            for j in range(s):
                if v[j] > remaining[j]:
                    fits = False
                    break
                if v[j]:
                    q = remaining[j] // v[j]
                    if top is None or q < top:
                        top = q
            if not fits:
                continue
            if max_mult is not None and top > max_mult:
                top = max_mult
            for m in range(top, 0, -1):
                rest = tuple(remaining[j] - m * v[j] for j in range(s))
                for tail in rec(rest, i + 1):
                    yield (v,) * m + tail

    yield from rec(tuple(target), 0)


def _check_target(target: Multipart) -> None:
    if not target or not any(target):
        raise MultipartError(f"target {target} must have a positive entry")
    if any(t < 0 for t in target):
        raise MultipartError(f"target {target} has a negative entry")


def enumerate_vd(pair: EulerPair, target: Multipart) -> list[Multipartition]:
    """Multipartitions with every multipart repeated at most r-1 times."""
    _check_target(target)
    pair.ensure_valid(max(target))
    cands = _allowed_multiparts(pair, target)
    return list(_iter_multipartitions(target, cands, pair.r - 1))


def enumerate_vo(pair: EulerPair, target: Multipart) -> list[Multipartition]:
    """Multipartitions with every multipart primitive."""
    _check_target(target)
    pair.ensure_valid(max(target))
    cands = [v for v in _allowed_multiparts(pair, target)
             if any(e > 0 and pair.s2.contains(e) for e in v)]
    return list(_iter_multipartitions(target, cands, None))


def vglaisher_merge(pair: EulerPair, eta: Multipartition) -> Multipartition:
    """Repeatedly replace r equal multiparts by their vector sum until no
    multipart repeats r times or more.  A merged multipart arose from r^k
    originals exactly when the smallest exponent of r over its entries is
    k."""
    counts: dict[Multipart, int] = {}
    for v in eta:
        if not is_primitive_multipart(pair, v):
            raise MultipartError(f"multipart {v} is not primitive")
        counts[v] = counts.get(v, 0) + 1
    r = pair.r
    changed = True
    while changed:
        changed = False
        for v in sorted(counts):
            m = counts[v]
            if m >= r:
                counts[v] = m % r
                merged = tuple(r * e for e in v)
                counts[merged] = counts.get(merged, 0) + m // r
                changed = True
    out = []
    for v in sorted(counts, reverse=True):
        out.extend([v] * counts[v])
    return tuple(out)


def vglaisher_split(pair: EulerPair, xi: Multipartition) -> Multipartition:
    """Split every non-primitive multipart (all positive entries in
    r*S1) into r equal multiparts, repeating until all are primitive."""
    counts: dict[Multipart, int] = {}
    seen: dict[Multipart, int] = {}
    for v in xi:
        seen[v] = seen.get(v, 0) + 1
    for v, m in seen.items():
        if m > pair.r - 1:
            raise MultipartError(f"multipart {v} repeats {m} times (max {pair.r - 1})")
        k = multipart_exponent(pair, v)
        reduced = tuple(e // pair.r ** k for e in v)
        counts[reduced] = counts.get(reduced, 0) + m * pair.r ** k
    out = []
    for v in sorted(counts, reverse=True):
        out.extend([v] * counts[v])
    return tuple(out)


@dataclass(frozen=True)
class VBeckReport:
    """Vector-class sizes and companion statistics at one target."""

    target: Multipart
    count_vd: int
    count_vo: int
    vb: int
    vb_prime: int
    count_one_repeated: int
    count_one_nonprimitive: int
    count_t_analogue: int
    ok_i: bool
    ok_ii: bool

    def to_dict(self) -> dict:
        return {
            "target": list(self.target),
            "VD_r": self.count_vd,
            "VO_r": self.count_vo,
            "vb_r": self.vb,
            "vb'_r": self.vb_prime,
            "one_repeated": self.count_one_repeated,
            "one_nonprimitive": self.count_one_nonprimitive,
            "t_analogue": self.count_t_analogue,
            "ok_i": self.ok_i,
            "ok_ii": self.ok_ii,
        }


def _count_one_special(pair: EulerPair, target: Multipart,
                       specials: list[Multipart], mult_lo: int, mult_hi_fn,
                       rest_cands_fn, rest_max_mult) -> int:
    """Count multipartitions with exactly one distinguished multipart
    value: pick it, pick its multiplicity, fill the remainder."""
    s = len(target)
    total = 0
    for v in specials:
        top = None
        for j in range(s):
            if v[j]:
                q = target[j] // v[j]
                top = q if top is None else min(top, q)
        if top is None or top < mult_lo:
            continue
        rest_cands = rest_cands_fn(v)
        for f in range(mult_lo, mult_hi_fn(top) + 1):
            if any(f * v[j] > target[j] for j in range(s)):
                break
            rest = tuple(target[j] - f * v[j] for j in range(s))
            total += sum(1 for _ in _iter_multipartitions(rest, rest_cands,
                                                          rest_max_mult))
    return total


def v_beck_statistics(pair: EulerPair, target: Multipart) -> VBeckReport:
    """Vector statistics: vb compares total multipart counts across VO
    and VD, vb' compares distinct-multipart counts across VD and VO, and
    the ok flags assert vb/(r-1) equals both one-special counts and vb'
    equals the T-analogue count."""
    _check_target(target)
    pair.ensure_valid(max(target))
    r = pair.r
    cands = _allowed_multiparts(pair, target)
    prim = [v for v in cands if any(e > 0 and pair.s2.contains(e) for e in v)]
    nonprim = [v for v in cands if v not in prim]

    count_vd = len_vd = dist_vd = 0
    for xi in _iter_multipartitions(target, cands, r - 1):
        count_vd += 1
        len_vd += len(xi)
        dist_vd += len(set(xi))
    count_vo = len_vo = dist_vo = 0
    for eta in _iter_multipartitions(target, prim, None):
        count_vo += 1
        len_vo += len(eta)
        dist_vo += len(set(eta))

    vb = len_vo - len_vd
    vb_prime = dist_vd - dist_vo

    one_repeated = _count_one_special(
        pair, target, cands, r, lambda top: top,
        lambda v: [c for c in cands if c != v], r - 1)
    t_analogue = _count_one_special(
        pair, target, cands, r + 1, lambda top: min(top, 2 * r - 1),
        lambda v: [c for c in cands if c != v], r - 1)
    one_nonprimitive = _count_one_special(
        pair, target, nonprim, 1, lambda top: top,
        lambda v: prim, None)

    ok_i = vb == (r - 1) * one_repeated and vb == (r - 1) * one_nonprimitive
    ok_ii = vb_prime == t_analogue
    return VBeckReport(tuple(target), count_vd, count_vo, vb, vb_prime,
                       one_repeated, one_nonprimitive, t_analogue, ok_i, ok_ii)


def targets_with_component_sum(s: int, max_sum: int) -> list[Multipart]:
    """Every s-tuple of non-negative integers, not all zero, with
    component sum at most max_sum; ascending by sum, then lexicographic."""
    if s < 1:
        raise MultipartError(f"dimension s must be >= 1, got {s}")
    out = []
    for total in range(1, max_sum + 1):
        batch = [v for v in product(*(range(total + 1) for _ in range(s)))
                 if sum(v) == total]
        batch.sort()
        out.extend(batch)
    return out
