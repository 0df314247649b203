"""Invertible combinatorial maps between the partition classes.

All maps live over one Euler pair (S1, S2) of order r.  The merge/split
pair is the familiar Glaisher-style bijection between the O and D
classes; decorated and marked partitions refine the D class by singling
out one occurrence of one non-primitive part and attaching an index to
it, and the remaining maps move the decoration data into the O1, D1 and
T classes by splitting or merging along one primitive core.

Occurrence convention: occurrences of equal parts are numbered 1-based
from the left in the canonical non-increasing ordering.  The O1-side
transform scans left-to-right and the D1-side transform right-to-left,
both expressed against this single convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .pairs import EulerPair
from .partitions import Partition
from .stats import ClassId, iter_class


class MappingError(ValueError):
    """Input violates the preconditions of a map."""


# -- r-words -------------------------------------------------------------------


def word_value(digits: tuple[int, ...], r: int) -> int:
    """Base-r value of a digit word; the empty word has value 0."""
    v = 0
    for d in digits:
        v = v * r + d
    return v


def to_digits(t: int, r: int) -> list[int]:
    """Minimal base-r digits of t >= 0, most significant first; 0 -> []."""
    digits = []
    while t:
        t, d = divmod(t, r)
        digits.append(d)
    digits.reverse()
    return digits


def padded_digits(t: int, r: int, length: int) -> tuple[int, ...]:
    """Base-r digits of t left-padded with zeros to exactly ``length``."""
    digits = to_digits(t, r)
    if len(digits) > length:
        raise MappingError(f"{t} needs {len(digits)} base-{r} digits, more than {length}")
    return tuple([0] * (length - len(digits)) + digits)


def format_word(digits: tuple[int, ...]) -> str:
    # Digits are concatenated, so the text form is unambiguous for r <= 10;
    # the JSON form carries the digit list and has no such limit.
    return "".join(str(d) for d in digits)


# -- annotated partitions -------------------------------------------------------


@dataclass(frozen=True)
class MarkedPartition:
    """A D-class partition with one occurrence of one non-primitive part
    r^k * core carrying an integer index t, 1 <= t <= r^k - 1."""

    base: Partition
    value: int
    occurrence: int
    index: int

    def to_json(self) -> dict:
        return {"parts": [[v, m] for v, m in self.base.parts],
                "value": self.value, "occurrence": self.occurrence,
                "index": self.index}


@dataclass(frozen=True)
class DecoratedPartition:
    """A D-class partition with one occurrence of one non-primitive part
    r^k * core decorated by a word of length 0..k-1 over {0..r-1}.
    Decorations on different occurrences of equal parts are different
    objects."""

    base: Partition
    value: int
    occurrence: int
    word: tuple[int, ...]

    def to_json(self) -> dict:
        return {"parts": [[v, m] for v, m in self.base.parts],
                "value": self.value, "occurrence": self.occurrence,
                "word": list(self.word)}


@dataclass(frozen=True)
class Overpartition:
    """A D-class partition with one part value overlined; the overline
    always sits on the last occurrence of that value.  Only a
    non-primitive part r^s * core with a smaller companion r^t * core
    (t < s) present may be overlined."""

    base: Partition
    value: int

    def to_json(self) -> dict:
        return {"parts": [[v, m] for v, m in self.base.parts],
                "value": self.value, "overline": True}


def _require_d_class(pair: EulerPair, p: Partition, what: str) -> None:
    for v, m in p.parts:
        if not pair.s1.contains(v):
            raise MappingError(f"{what}: part {v} is not in S1")
        if m > pair.r - 1:
            raise MappingError(f"{what}: part {v} repeats {m} times (max {pair.r - 1})")


def check_marked(pair: EulerPair, marked: MarkedPartition) -> tuple[int, int]:
    """Validate and return (core, k) of the marked value."""
    _require_d_class(pair, marked.base, "marked partition")
    mult = marked.base.multiplicity_of(marked.value)
    if not mult:
        raise MappingError(f"marked value {marked.value} is not a part")
    if not 1 <= marked.occurrence <= mult:
        raise MappingError(f"occurrence {marked.occurrence} out of range 1..{mult}")
    core, k = pair.decompose(marked.value)
    if k < 1:
        raise MappingError(f"marked value {marked.value} is primitive")
    if not 1 <= marked.index <= pair.r ** k - 1:
        raise MappingError(
            f"index {marked.index} out of range 1..{pair.r ** k - 1}")
    return core, k


def check_decorated(pair: EulerPair, dec: DecoratedPartition) -> tuple[int, int]:
    """Validate and return (core, k) of the decorated value."""
    _require_d_class(pair, dec.base, "decorated partition")
    mult = dec.base.multiplicity_of(dec.value)
    if not mult:
        raise MappingError(f"decorated value {dec.value} is not a part")
    if not 1 <= dec.occurrence <= mult:
        raise MappingError(f"occurrence {dec.occurrence} out of range 1..{mult}")
    core, k = pair.decompose(dec.value)
    if k < 1:
        raise MappingError(f"decorated value {dec.value} is primitive")
    if len(dec.word) > k - 1:
        raise MappingError(
            f"word length {len(dec.word)} exceeds {k - 1} for value {dec.value}")
    if any(not 0 <= d < pair.r for d in dec.word):
        raise MappingError(f"word {dec.word} has digits outside 0..{pair.r - 1}")
    return core, k


def check_overlined(pair: EulerPair, over: Overpartition) -> tuple[int, int]:
    """Validate and return (core, s) of the overlined value."""
    _require_d_class(pair, over.base, "overpartition")
    if not over.base.multiplicity_of(over.value):
        raise MappingError(f"overlined value {over.value} is not a part")
    core, s = pair.decompose(over.value)
    if s < 1:
        raise MappingError(f"overlined value {over.value} is primitive")
    if not any(over.base.multiplicity_of(core * pair.r ** t) for t in range(s)):
        raise MappingError(
            f"no part {core}*r^t with t < {s} accompanies the overline")
    return core, s


# -- Glaisher-style merge / split ------------------------------------------------


def glaisher_merge(pair: EulerPair, p: Partition) -> Partition:
    """Repeatedly merge r equal parts into one r-times-larger part until
    every multiplicity is at most r-1.  Size-preserving; the identity on
    inputs already in the D class."""
    r = pair.r
    counts: dict[int, int] = {}
    for v, m in p.parts:
        if not pair.s1.contains(v):
            raise MappingError(f"part {v} is not in S1")
        counts[v] = m
    changed = True
    while changed:
        changed = False
        for v in sorted(counts):
            m = counts[v]
            if m >= r:
                counts[v] = m % r
                counts[r * v] = counts.get(r * v, 0) + m // r
                changed = True
    return Partition(counts.items())


def glaisher_split(pair: EulerPair, p: Partition) -> Partition:
    """Split every part r^k * core into r^k copies of its primitive core;
    inverse of :func:`glaisher_merge` on the D class."""
    counts: dict[int, int] = {}
    for v, m in p.parts:
        core, k = pair.decompose(v)  # raises if v is outside S1
        counts[core] = counts.get(core, 0) + m * pair.r ** k
    return Partition(counts.items())


# -- marked <-> decorated ---------------------------------------------------------


def marked_to_decorated(pair: EulerPair, marked: MarkedPartition) -> DecoratedPartition:
    """Replace the integer index by its base-r digits with the leading
    digit removed (the word keeps any remaining leading zeros).  An index
    with j digits yields a word of length j-1, so every index in
    1..r^k - 1 maps to a word of length 0..k-1 and each word has exactly
    r-1 preimages."""
    check_marked(pair, marked)
    digits = to_digits(marked.index, pair.r)
    return DecoratedPartition(marked.base, marked.value, marked.occurrence,
                              tuple(digits[1:]))


def decorated_fiber(pair: EulerPair, dec: DecoratedPartition) -> list[MarkedPartition]:
    """The r-1 marked partitions mapping to ``dec``: indices
    j * r^len(word) + value(word) for j = 1..r-1."""
    check_decorated(pair, dec)
    r = pair.r
    base_index = word_value(dec.word, r)
    step = r ** len(dec.word)
    return [MarkedPartition(dec.base, dec.value, dec.occurrence, j * step + base_index)
            for j in range(1, r)]


# -- enumerations ------------------------------------------------------------------


def enumerate_marked(pair: EulerPair, n: int) -> list[MarkedPartition]:
    """All marked partitions of n: every D-class partition, every
    occurrence of every non-primitive part, every admissible index."""
    pair.ensure_valid(n)
    out = []
    for mu in sorted(iter_class(pair, n, ClassId.D), reverse=True):
        for v, mult in mu.parts:
            core, k = pair.decompose(v)
            if k < 1:
                continue
            top = pair.r ** k - 1
            for occ in range(1, mult + 1):
                for t in range(1, top + 1):
                    out.append(MarkedPartition(mu, v, occ, t))
    return out


def enumerate_decorated(pair: EulerPair, n: int) -> list[DecoratedPartition]:
    """All decorated partitions of n: every occurrence of every
    non-primitive part, every word of length 0..k-1."""
    pair.ensure_valid(n)
    r = pair.r
    out = []
    for mu in sorted(iter_class(pair, n, ClassId.D), reverse=True):
        for v, mult in mu.parts:
            core, k = pair.decompose(v)
            if k < 1:
                continue
            for occ in range(1, mult + 1):
                for length in range(k):
                    for t in range(r ** length):
                        out.append(DecoratedPartition(
                            mu, v, occ, padded_digits(t, r, length)))
    return out


def enumerate_overlined(pair: EulerPair, n: int) -> list[Overpartition]:
    """All overpartitions of n: one overline per D-class partition and
    overlinable value (a non-primitive r^s * core with a smaller
    same-core part present)."""
    pair.ensure_valid(n)
    out = []
    for mu in sorted(iter_class(pair, n, ClassId.D), reverse=True):
        for v, _ in mu.parts:
            core, s = pair.decompose(v)
            if s < 1:
                continue
            if any(mu.multiplicity_of(core * pair.r ** t) for t in range(s)):
                out.append(Overpartition(mu, v))
    return out


# -- decorated <-> O1 ---------------------------------------------------------------


def decorated_to_o1r(pair: EulerPair, dec: DecoratedPartition) -> Partition:
    """Move the decoration data into an O1-class partition.

    With the decorated part r^k * core carrying word w (length l, value d):
    the decorated occurrence, the earlier same-value occurrences, and all
    larger same-core parts split down to r^(k-l) * core, except that the
    decorated copy itself becomes d+1 parts of r^(k-l) * core plus
    r^k - (d+1) r^(k-l) primitive cores.  Everything else splits fully
    into primitive parts.  The unique non-primitive value of the result
    is r^(k-l) * core.
    """
    core, k = check_decorated(pair, dec)
    r = pair.r
    l = len(dec.word)
    d = word_value(dec.word, r)

    # exponent -> multiplicity of the same-core parts that split together
    # with the decorated copy (larger exponents sit left of it)
    group: dict[int, int] = {k: dec.occurrence}
    rest: dict[int, int] = {}
    for v, m in dec.base.parts:
        c2, t = pair.decompose(v)
        if c2 == core and t > k:
            group[t] = m
        elif v == dec.value:
            if m - dec.occurrence:
                rest[v] = m - dec.occurrence
        else:
            rest[v] = m

    out: dict[int, int] = {}

    def put(value, mult):
        if mult:
            out[value] = out.get(value, 0) + mult

    exp = k - l
    target = core * r ** exp
    put(target, d + 1)
    put(core, r ** k - (d + 1) * r ** exp)
    group[k] -= 1
    for t, m in group.items():
        put(target, m * r ** (t - exp))
    for v, m in rest.items():
        c2, t = pair.decompose(v)
        put(c2, m * r ** t)
    return Partition(out.items())


def o1r_to_decorated(pair: EulerPair, lam: Partition) -> DecoratedPartition:
    """Inverse of :func:`decorated_to_o1r`.

    Merge lam, then scan the same-core parts r^t * core with t >= k left
    to right (largest first) until their running total reaches f * r^k *
    core, where f is the multiplicity of lam's unique non-primitive value
    r^k * core.  With N = (total before the stop) / (r^k core), the
    stopped occurrence is decorated with the base-r digits of f - N - 1
    padded to length t - k.
    """
    for v, _ in lam.parts:
        if not pair.s1.contains(v):
            raise MappingError(f"part {v} is not in S1")
    nonprim = [(v, m) for v, m in lam.parts if not pair.s2.contains(v)]
    if len(nonprim) != 1:
        raise MappingError(
            f"O1 class requires exactly one non-primitive value, found {len(nonprim)}")
    v0, f = nonprim[0]
    core, k = pair.decompose(v0)
    mu = glaisher_merge(pair, lam)

    target = f * v0
    running = 0
    for v, m in mu.parts:  # descending, so exponents decrease
        c2, t = pair.decompose(v)
        if c2 != core or t < k:
            continue
        for occ in range(1, m + 1):
            running += v
            if running >= target:
                n_before = (running - v) // v0
                d = f - n_before - 1
                word = padded_digits(d, pair.r, t - k)
                return DecoratedPartition(mu, v, occ, word)
    raise MappingError("ran out of same-core parts; input not in the O1 class")


# -- decorated <-> D1 ---------------------------------------------------------------


def decorated_to_d1r(pair: EulerPair, dec: DecoratedPartition) -> Partition:
    """Move the decoration data into a D1-class partition.

    With the decorated part r^k * core carrying word w (length l, value
    d): the decorated occurrence, the later same-value occurrences, and
    all same-core parts with k-l-1 < t < k split down to r^(k-l-1) *
    core, except that the decorated copy itself becomes r(d+1) parts of
    r^(k-l-1) * core plus m = r^k - r(d+1) r^(k-l-1) primitive cores,
    which are then re-merged (m is divisible by r, so the re-merge
    produces parts strictly between the split level and r^k * core).
    Everything else is left untouched.  The unique value repeated at
    least r times in the result is r^(k-l-1) * core.
    """
    core, k = check_decorated(pair, dec)
    r = pair.r
    l = len(dec.word)
    d = word_value(dec.word, r)

    mult_k = dec.base.multiplicity_of(dec.value)
    group: dict[int, int] = {k: mult_k - dec.occurrence + 1}
    rest: dict[int, int] = {}
    for v, m in dec.base.parts:
        c2, t = pair.decompose(v)
        if v == dec.value:
            if dec.occurrence - 1:
                rest[v] = dec.occurrence - 1
        elif c2 == core and k - l - 1 < t < k:
            group[t] = m
        else:
            rest[v] = m

    out: dict[int, int] = {}

    def put(value, mult):
        if mult:
            out[value] = out.get(value, 0) + mult

    exp = k - l - 1
    target = core * r ** exp
    put(target, r * (d + 1))
    loose_cores = r ** k - r * (d + 1) * r ** exp
    # merge the loose cores: base-r digits give the multiplicities level
    # by level, occupying exponents k-l .. k-1 only
    digits = to_digits(loose_cores, r)
    for j, digit in enumerate(reversed(digits)):
        put(core * r ** j, digit)
    group[k] -= 1
    for t, m in group.items():
        put(target, m * r ** (t - exp))
    for v, m in rest.items():
        put(v, m)
    return Partition(out.items())


def d1r_to_decorated(pair: EulerPair, lam: Partition) -> DecoratedPartition:
    """Inverse of :func:`decorated_to_d1r`.

    Merge lam, then scan the same-core parts r^t * core with t >= k right
    to left (smallest first) until the running total reaches f * r^k *
    core, where r^k * core is lam's unique value with multiplicity f >=
    r.  With N as before, f - N is always divisible by r and the stopped
    occurrence is decorated with the digits of (f - N)/r - 1 padded to
    length t - k - 1.
    """
    for v, _ in lam.parts:
        if not pair.s1.contains(v):
            raise MappingError(f"part {v} is not in S1")
    heavy = [(v, m) for v, m in lam.parts if m >= pair.r]
    if len(heavy) != 1:
        raise MappingError(
            f"D1 class requires exactly one value repeated >= r times, found {len(heavy)}")
    v0, f = heavy[0]
    core, k = pair.decompose(v0)
    mu = glaisher_merge(pair, lam)

    chain = []  # (value, exponent, occurrence) in canonical left-to-right order
    for v, m in mu.parts:
        c2, t = pair.decompose(v)
        if c2 == core and t >= k:
            chain.extend((v, t, occ) for occ in range(1, m + 1))

    target = f * v0
    running = 0
    for v, t, occ in reversed(chain):
        running += v
        if running >= target:
            n_before = (running - v) // v0
            leftover = f - n_before
            if leftover % pair.r:
                raise MappingError("split count not divisible by r; input not in D1")
            d = leftover // pair.r - 1
            if t <= k:
                raise MappingError("stopped on the distinguished level; input not in D1")
            word = padded_digits(d, pair.r, t - k - 1)
            return DecoratedPartition(mu, v, occ, word)
    raise MappingError("ran out of same-core parts; input not in the D1 class")


# -- overlined <-> T ------------------------------------------------------------------


def overlined_to_t(pair: EulerPair, over: Overpartition) -> Partition:
    """Split the overlined part r^s * core into r copies of r^k * core
    plus r-1 copies of r^j * core for each j strictly between k and s,
    where k is the largest exponent below s whose same-core part is
    present.  The result has the value r^k * core repeated f times with
    r < f < 2r."""
    core, s = check_overlined(pair, over)
    r = pair.r
    k = max(t for t in range(s) if over.base.multiplicity_of(core * r ** t))
    counts = dict(over.base.parts)
    counts[over.value] -= 1
    counts[core * r ** k] = counts.get(core * r ** k, 0) + r
    for j in range(k + 1, s):
        counts[core * r ** j] = counts.get(core * r ** j, 0) + r - 1
    return Partition(counts.items())


def t_to_overlined(pair: EulerPair, lam: Partition) -> Overpartition:
    """Inverse of :func:`overlined_to_t`: merge lam and overline the
    smallest same-core part with exponent above the distinguished one."""
    for v, _ in lam.parts:
        if not pair.s1.contains(v):
            raise MappingError(f"part {v} is not in S1")
    r = pair.r
    heavy = [(v, m) for v, m in lam.parts if m >= r]
    if len(heavy) != 1 or not (r < heavy[0][1] < 2 * r):
        raise MappingError(
            "T class requires exactly one value repeated f times with r < f < 2r")
    v0, _ = heavy[0]
    core, k = pair.decompose(v0)
    mu = glaisher_merge(pair, lam)
    candidates = []
    for v, _ in mu.parts:
        c2, t = pair.decompose(v)
        if c2 == core and t > k:
            candidates.append(v)
    if not candidates:  # cannot happen for valid input; the merge carries up
        raise MappingError("no same-core part above the distinguished level")
    return Overpartition(mu, min(candidates))


# -- text forms -------------------------------------------------------------------


def _flat_annotated(base: Partition, value: int, occurrence: int, tag: str) -> str:
    tokens = []
    seen = 0
    for v in base.flat():
        if v == value:
            seen += 1
            if seen == occurrence:
                tokens.append(f"{v}{tag}")
                continue
        tokens.append(str(v))
    return ",".join(tokens)


def format_decorated(dec: DecoratedPartition) -> str:
    """Flat text with the word subscript at the decorated occurrence,
    e.g. ``1215,135_{02},135,51,35,15,15,3``."""
    return _flat_annotated(dec.base, dec.value, dec.occurrence,
                           "_{%s}" % format_word(dec.word))


def format_marked(marked: MarkedPartition) -> str:
    """Flat text with the index at the marked occurrence, e.g. ``9_{t=2},1,1``."""
    return _flat_annotated(marked.base, marked.value, marked.occurrence,
                           "_{t=%d}" % marked.index)


def format_overlined(over: Overpartition) -> str:
    """Flat text with a trailing ~ on the overlined (last) occurrence."""
    return _flat_annotated(over.base, over.value,
                           over.base.multiplicity_of(over.value), "~")


def _parse_annotated(text: str):
    """Split an annotated flat form into (values, annotations) where each
    annotation is (position, kind, payload)."""
    values = []
    notes = []
    for token in text.strip().split(","):
        token = token.strip()
        if not token:
            raise MappingError(f"empty token in {text!r}")
        if token.endswith("~"):
            values.append(_parse_int(token[:-1]))
            notes.append((len(values) - 1, "overline", None))
        elif "_{" in token:
            head, _, inner = token.partition("_{")
            if not inner.endswith("}"):
                raise MappingError(f"unterminated annotation in {token!r}")
            inner = inner[:-1]
            values.append(_parse_int(head))
            if inner.startswith("t="):
                notes.append((len(values) - 1, "index", _parse_int(inner[2:])))
            else:
                if not all(ch.isdigit() for ch in inner):
                    raise MappingError(f"bad word {inner!r} in {token!r}")
                notes.append((len(values) - 1, "word",
                              tuple(int(ch) for ch in inner)))
        else:
            values.append(_parse_int(token))
    return values, notes


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise MappingError(f"bad integer {text!r}") from None


def _occurrence_at(values: list[int], pos: int) -> int:
    return sum(1 for v in values[:pos] if v == values[pos]) + 1


def parse_decorated(text: str) -> DecoratedPartition:
    values, notes = _parse_annotated(text)
    words = [n for n in notes if n[1] == "word"]
    if len(words) != 1 or len(notes) != 1:
        raise MappingError("decorated text needs exactly one word annotation")
    pos, _, word = words[0]
    return DecoratedPartition(Partition.from_values(values), values[pos],
                              _occurrence_at(values, pos), word)


def parse_marked(text: str) -> MarkedPartition:
    values, notes = _parse_annotated(text)
    marks = [n for n in notes if n[1] == "index"]
    if len(marks) != 1 or len(notes) != 1:
        raise MappingError("marked text needs exactly one t=... annotation")
    pos, _, index = marks[0]
    return MarkedPartition(Partition.from_values(values), values[pos],
                           _occurrence_at(values, pos), index)


def parse_overlined(text: str) -> Overpartition:
    values, notes = _parse_annotated(text)
    overs = [n for n in notes if n[1] == "overline"]
    if len(overs) != 1 or len(notes) != 1:
        raise MappingError("overpartition text needs exactly one ~ annotation")
    pos = overs[0][0]
    return Overpartition(Partition.from_values(values), values[pos])
