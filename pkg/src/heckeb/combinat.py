"""Partitions, bipartitions, beta-sets and the 2-quotient bijections.

The 2-quotient machinery is realized on the abacus: a partition is encoded
as a strictly decreasing set of beta-numbers of even cardinality, the beads
are split by parity into two runners, and each runner is read back as a
partition.  With the even-cardinality normalization the parity split is
stable under adding the two lowest beads, so the component assignment is
well defined:

    component 0  <-  odd beta-numbers,  bead b  ->  (b-1)/2
    component 1  <-  even beta-numbers, bead b  ->  b/2

For odd staircase index r the two quotient components are swapped.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import CoreMismatch

EMPTY_CHARS = {"", "0", "-", "∅", "Ø"}


@dataclass(frozen=True, order=True)
class Partition:
    """An integer partition, stored as a weakly decreasing tuple of parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = tuple(self.parts)
        assert all(isinstance(x, int) and x > 0 for x in p), p
        assert all(p[i] >= p[i + 1] for i in range(len(p) - 1)), p
        object.__setattr__(self, "parts", p)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def part(self, i: int) -> int:
        """Part in row i (1-based); zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def with_box(self, row: int) -> "Partition":
        """Partition with one extra box in the given (1-based) row."""
        parts = list(self.parts)
        if row == len(parts) + 1:
            parts.append(1)
        else:
            parts[row - 1] += 1
        return Partition(tuple(parts))

    def without_box(self, row: int) -> "Partition":
        parts = list(self.parts)
        parts[row - 1] -= 1
        if parts[row - 1] == 0:
            parts.pop(row - 1)
        return Partition(tuple(parts))

    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(
            sum(1 for p in self.parts if p > j) for j in range(self.parts[0])
        ))

    def cells(self):
        """All (row, column) cells, 1-based."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i)
                   for i in range(1, len(other.parts) + 1))

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True, order=True)
class Bipartition:
    """An ordered pair of partitions."""

    first: Partition = Partition()
    second: Partition = Partition()

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def component(self, c: int) -> Partition:
        return self.first if c == 0 else self.second

    def with_component(self, c: int, p: Partition) -> "Bipartition":
        return Bipartition(p, self.second) if c == 0 else Bipartition(self.first, p)

    def swap(self) -> "Bipartition":
        return Bipartition(self.second, self.first)

    def __str__(self) -> str:
        return format_bipartition(self)


EMPTY_PARTITION = Partition()
EMPTY_BIPARTITION = Bipartition()


@dataclass(frozen=True)
class BetaSet:
    """Beta-numbers of a partition: a strictly decreasing tuple of
    non-negative integers of even cardinality."""

    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(self.entries)
        assert len(e) % 2 == 0 and len(e) > 0, e
        assert all(e[i] > e[i + 1] for i in range(len(e) - 1)), e
        assert e[-1] >= 0, e
        object.__setattr__(self, "entries", e)

    @classmethod
    def from_partition(cls, p: Partition, cardinality: int | None = None) -> "BetaSet":
        n = cardinality if cardinality is not None else len(p.parts) + len(p.parts) % 2
        n = max(n, 2)
        assert n % 2 == 0 and n >= len(p.parts)
        return cls(tuple(p.part(i) + n - i for i in range(1, n + 1)))

    def to_partition(self) -> Partition:
        n = len(self.entries)
        parts = tuple(b - (n - i) for i, b in enumerate(self.entries, start=1))
        return Partition(tuple(x for x in parts if x > 0))

    def shifted(self) -> "BetaSet":
        """The same partition on two more beads."""
        return BetaSet(tuple(b + 2 for b in self.entries) + (1, 0))


def delta_core(r: int) -> Partition:
    """The staircase 2-core (r, r-1, ..., 1); empty for r = 0."""
    assert r >= 0
    return Partition(tuple(range(r, 0, -1)))


def _runner_partition(beads: list[int]) -> Partition:
    # beads: the positions on one runner, already divided by 2.
    beads = sorted(beads, reverse=True)
    n = len(beads)
    parts = tuple(b - (n - i) for i, b in enumerate(beads, start=1))
    return Partition(tuple(x for x in parts if x > 0))


def core_and_quotient(p: Partition) -> tuple[Partition, tuple[Partition, Partition]]:
    """2-core and 2-quotient of a partition, via the abacus."""
    beta = BetaSet.from_partition(p)
    odd = [b for b in beta.entries if b % 2 == 1]
    even = [b for b in beta.entries if b % 2 == 0]
    q0 = _runner_partition([(b - 1) // 2 for b in odd])
    q1 = _runner_partition([b // 2 for b in even])
    core_beads = sorted(
        [2 * i + 1 for i in range(len(odd))] + [2 * i for i in range(len(even))],
        reverse=True)
    core = BetaSet(tuple(core_beads)).to_partition()
    return core, (q0, q1)


def two_core(p: Partition) -> Partition:
    return core_and_quotient(p)[0]


def staircase_index(core: Partition) -> int:
    """r such that core = delta_r; raises if core is not a staircase."""
    r = len(core.parts)
    if core != delta_core(r):
        raise CoreMismatch(f"{core} is not a staircase 2-core")
    return r


def q_r(p: Partition, r: int) -> Bipartition:
    """2-quotient of p as a bipartition, components swapped for odd r.

    Restricted to partitions with 2-core delta_r this is a bijection onto
    bipartitions.
    """
    core, (q0, q1) = core_and_quotient(p)
    if core != delta_core(r):
        raise CoreMismatch(f"2-core of {p} is {core}, expected {delta_core(r)}")
    b = Bipartition(q0, q1)
    return b.swap() if r % 2 == 1 else b


def q_r_inverse(b: Bipartition, r: int) -> Partition:
    """The partition with 2-core delta_r and 2-quotient b (odd-r convention
    as in q_r)."""
    quot = b.swap() if r % 2 == 1 else b
    lam0, lam1 = quot.first, quot.second
    # Bead counts per runner come from the core; grow until both runners
    # have room for their quotient component.
    n = 2 * (len(lam0.parts) + len(lam1.parts) + r + 1)
    core_beta = BetaSet.from_partition(delta_core(r), n)
    c_odd = sum(1 for x in core_beta.entries if x % 2 == 1)
    c_even = n - c_odd
    assert c_odd >= len(lam0.parts) and c_even >= len(lam1.parts)
    odd = [2 * (lam0.part(i) + c_odd - i) + 1 for i in range(1, c_odd + 1)]
    even = [2 * (lam1.part(i) + c_even - i) for i in range(1, c_even + 1)]
    return BetaSet(tuple(sorted(odd + even, reverse=True))).to_partition()


@functools.lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, sorted lexicographically by part tuple."""
    assert n >= 0

    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(sorted(Partition(t) for t in gen(n, n)))


@functools.lru_cache(maxsize=None)
def enumerate_bipartitions(n: int) -> tuple[Bipartition, ...]:
    """All bipartitions of total size n.

    Order: |first| descending, then first lexicographic, then second
    lexicographic (deterministic, used by golden files).
    """
    out = []
    for k in range(n, -1, -1):
        for p in partitions(k):
            for q in partitions(n - k):
                out.append(Bipartition(p, q))
    return tuple(out)


def bipartition_count(n: int) -> int:
    return sum(len(partitions(k)) * len(partitions(n - k)) for k in range(n + 1))


def partitions_with_core(n: int, r: int) -> tuple[Partition, ...]:
    """All partitions of 2-weight n and 2-core delta_r, in the order induced
    by enumerate_bipartitions through q_r_inverse."""
    return tuple(q_r_inverse(b, r) for b in enumerate_bipartitions(n))


# --- text rendering, paper style: "(21;∅)", "(1;11)" -------------------

def format_partition(p: Partition) -> str:
    if not p.parts:
        return "∅"
    if all(x <= 9 for x in p.parts):
        return "".join(str(x) for x in p.parts)
    return ".".join(str(x) for x in p.parts)


def format_bipartition(b: Bipartition) -> str:
    return f"({format_partition(b.first)};{format_partition(b.second)})"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in EMPTY_CHARS:
        return Partition()
    if "." in text:
        parts = tuple(int(x) for x in text.split("."))
    elif "," in text:
        parts = tuple(int(x) for x in text.split(","))
    else:
        parts = tuple(int(ch) for ch in text)
    return Partition(parts)


def parse_bipartition(text: str) -> Bipartition:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    left, _, right = text.partition(";")
    if not _:
        raise ValueError(f"no ';' separator in bipartition {text!r}")
    return Bipartition(parse_partition(left), parse_partition(right))


def all_cells(b: Bipartition):
    """All (row, column, component) nodes of a bipartition, 1-based."""
    for c in (0, 1):
        for (i, j) in b.component(c).cells():
            yield (i, j, c)


def pairs_product(n: int) -> int:
    """|W_n| = 2^n n!, for cross-checks."""
    return 2 ** n * functools.reduce(lambda a, b: a * b, range(1, n + 1), 1)


def compositions_into(n: int, k: int):
    """Weak compositions of n into k parts (helper for enumeration tests)."""
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for tail in compositions_into(n - first, k - 1):
            yield (first,) + tail


def bipartitions_of_shape_count(n: int) -> dict[Bipartition, int]:
    """Number of standard bitableaux per shape (hook-length based), used as
    an independent oracle in tests."""
    out = {}
    for b in enumerate_bipartitions(n):
        out[b] = (_binomial(n, b.first.size)
                  * _hook_count(b.first) * _hook_count(b.second))
    return out


def _binomial(n: int, k: int) -> int:
    return functools.reduce(lambda a, i: a * (n - i) // (i + 1), range(k), 1)


def _hook_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape p (hook length formula)."""
    n = p.size
    if n == 0:
        return 1
    t = p.transpose()
    num = functools.reduce(lambda a, b: a * b, range(1, n + 1), 1)
    den = 1
    for (i, j) in p.cells():
        den *= (p.part(i) - j) + (t.part(j) - i) + 1
    assert num % den == 0
    return num // den
