"""Run-length integer partitions and restricted enumeration.

Partitions are stored as (value, multiplicity) pairs because the objects
handled here routinely put a part repeated hundreds of times next to a
five-digit part value; flat part lists would be wasteful.  All arithmetic
is exact (Python integers never overflow silently).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering
from typing import Callable, Iterable, Iterator


class PartitionError(ValueError):
    """Malformed partition data or text."""


@dataclass(frozen=True)
class PartConstraint:
    """Restriction on enumerated parts.

    ``allowed`` must be a pure, deterministic predicate on positive
    integers.  ``max_multiplicity`` caps how often a value may repeat;
    None means unbounded.
    """

    allowed: Callable[[int], bool]
    max_multiplicity: int | None = None


ANY_PART = PartConstraint(lambda v: True)


@total_ordering
class Partition:
    """A partition in canonical form.

    ``parts`` is a tuple of (value, multiplicity) pairs with strictly
    decreasing positive values and multiplicities >= 1; the empty tuple is
    the unique partition of 0.  Instances are immutable values: safe to
    hash, share and compare.  Ordering follows the flattened lexicographic
    order, so ``sorted(ps, reverse=True)`` yields the canonical
    (lexicographically decreasing) enumeration order used everywhere in
    this package.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[tuple[int, int]] = ()):
        merged: dict[int, int] = {}
        for v, m in parts:
            if v <= 0:
                raise PartitionError(f"part value must be positive, got {v}")
            if m < 0:
                raise PartitionError(f"multiplicity must be non-negative, got {m}")
            if m:
                merged[v] = merged.get(v, 0) + m
        self.parts: tuple[tuple[int, int], ...] = tuple(
            sorted(merged.items(), reverse=True)
        )

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Partition":
        """Build from a flat iterable of part values (any order)."""
        return cls((v, 1) for v in values)

    @property
    def size(self) -> int:
        return sum(v * m for v, m in self.parts)

    @property
    def length(self) -> int:
        """Number of parts, counted with multiplicity."""
        return sum(m for _, m in self.parts)

    @property
    def distinct_count(self) -> int:
        """Number of different part values."""
        return len(self.parts)

    def multiplicity_of(self, value: int) -> int:
        for v, m in self.parts:
            if v == value:
                return m
        return 0

    def values(self) -> tuple[int, ...]:
        """Distinct part values, decreasing."""
        return tuple(v for v, _ in self.parts)

    def flat(self) -> Iterator[int]:
        """Part values with repetition, non-increasing."""
        for v, m in self.parts:
            for _ in range(m):
                yield v

    def union(self, other: "Partition") -> "Partition":
        """Multiset sum: all parts of both partitions."""
        return Partition(self.parts + other.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __repr__(self):
        return f"Partition({format_partition(self) or '0'!r})" if self.parts else "Partition()"

    def __str__(self):
        return format_partition(self)


EMPTY = Partition()


def format_partition(p: Partition) -> str:
    """Canonical text form: ``35,17^3,15^84,5^51,1^3`` (no ^1)."""
    return ",".join(f"{v}^{m}" if m > 1 else str(v) for v, m in p.parts)


def partition_to_pairs(p: Partition) -> list[list[int]]:
    """JSON-ready form: list of [value, multiplicity] pairs."""
    return [[v, m] for v, m in p.parts]


def parse_partition(text: str) -> Partition:
    """Parse either text form or a JSON array of [value, multiplicity] pairs.

    Both forms are normalized: values sorted decreasing, equal values merged.
    """
    s = text.strip()
    if not s:
        return Partition()
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise PartitionError(f"bad JSON partition: {exc}") from None
        if not isinstance(data, list):
            raise PartitionError("JSON partition must be an array of [value, multiplicity] pairs")
        pairs = []
        for item in data:
            if not (isinstance(item, list) and len(item) == 2
                    and all(isinstance(x, int) for x in item)):
                raise PartitionError(f"bad JSON partition entry: {item!r}")
            pairs.append((item[0], item[1]))
        return Partition(pairs)
    pairs = []
    for token in s.split(","):
        token = token.strip()
        if not token:
            raise PartitionError(f"empty token in partition text {text!r}")
        value, _, mult = token.partition("^")
        try:
            v = int(value)
            m = int(mult) if mult else 1
        except ValueError:
            raise PartitionError(f"bad partition token {token!r}") from None
        pairs.append((v, m))
    return Partition(pairs)


def iter_partitions(n: int, constraint: PartConstraint = ANY_PART) -> Iterator[Partition]:
    """Generate the partitions of n obeying ``constraint``.

    Every part value satisfies the predicate and no multiplicity exceeds
    the cap.  Output order is lexicographically decreasing on the
    flattened part sequence; for n = 0 the single empty partition is
    produced.
    """
    if n < 0:
        raise PartitionError(f"cannot partition a negative integer ({n})")
    values = [v for v in range(n, 0, -1) if constraint.allowed(v)]
    cap = constraint.max_multiplicity
    if cap is not None and cap < 1:
        return

    def rec(remaining: int, start: int):
        if remaining == 0:
            yield []
            return
        for i in range(start, len(values)):
            v = values[i]
            if v > remaining:
                continue
            top = remaining // v
            if cap is not None and top > cap:
                top = cap
            for m in range(top, 0, -1):
                for rest in rec(remaining - m * v, i + 1):
                    yield [(v, m)] + rest

    for pairs in rec(n, 0):
        yield Partition(pairs)


def enumerate_partitions(n: int, constraint: PartConstraint = ANY_PART) -> list[Partition]:
    """Materialized form of :func:`iter_partitions` (same order)."""
    return list(iter_partitions(n, constraint))
