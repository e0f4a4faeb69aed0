"""Ordinary integer partitions in multiplicity form, and the crank."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

EMPTY_TEXT = "∅"


class Partition:
    """An integer partition stored as part-size -> multiplicity.

    Internally the multiplicities live in a tuple of ``(size, mult)`` rows
    sorted by size, largest first, which makes instances hashable and gives
    a canonical text form.
    """

    __slots__ = ("_rows", "_hash")

    def __init__(self, mult: Mapping[int, int] | None = None):
        rows = []
        for size, m in (mult or {}).items():
            size, m = int(size), int(m)
            if size < 1:
                raise ValueError(f"part sizes must be positive, got {size}")
            if m < 0:
                raise ValueError(f"multiplicity of {size} is negative")
            if m:
                rows.append((size, m))
        rows.sort(reverse=True)
        self._rows: tuple[tuple[int, int], ...] = tuple(rows)
        self._hash = hash(self._rows)

    @classmethod
    def _from_rows(cls, rows: tuple[tuple[int, int], ...]) -> Partition:
        # rows must already be canonical: sizes strictly descending, mults >= 1
        obj = cls.__new__(cls)
        obj._rows = rows
        obj._hash = hash(rows)
        return obj

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        return cls(Counter(parts))

    @property
    def rows(self) -> tuple[tuple[int, int], ...]:
        return self._rows

    @property
    def mult(self) -> dict[int, int]:
        return dict(self._rows)

    def multiplicity(self, size: int) -> int:
        for s, m in self._rows:
            if s == size:
                return m
        return 0

    @property
    def parts(self) -> tuple[int, ...]:
        """Parts in weakly decreasing order."""
        return tuple(s for s, m in self._rows for _ in range(m))

    @property
    def weight(self) -> int:
        return sum(s * m for s, m in self._rows)

    @property
    def num_parts(self) -> int:
        return sum(m for _, m in self._rows)

    @property
    def largest(self) -> int:
        return self._rows[0][0] if self._rows else 0

    def __bool__(self) -> bool:
        return bool(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Partition({self.mult!r})"

    def __str__(self) -> str:
        return format_partition(self)

    def to_json(self) -> dict:
        return {"mult": {str(s): m for s, m in self._rows}}

    @classmethod
    def from_json(cls, obj: Mapping) -> Partition:
        return cls({int(s): m for s, m in obj["mult"].items()})


def weight(p: Partition) -> int:
    return p.weight


def format_partition(p: Partition) -> str:
    """Render as ``a+b+c`` with parts descending; the empty partition is ``∅``."""
    if not p:
        return EMPTY_TEXT
    return "+".join(str(x) for x in p.parts)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", EMPTY_TEXT):
        return Partition()
    parts = []
    for tok in text.split("+"):
        tok = tok.strip()
        if not tok.isdigit() or int(tok) < 1:
            raise ValueError(f"bad part {tok!r} in {text!r}")
        parts.append(int(tok))
    if parts != sorted(parts, reverse=True):
        raise ValueError(f"parts must be weakly decreasing: {text!r}")
    return Partition.from_parts(parts)


def _descending(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def iter_partition_rows(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield canonical multiplicity rows of every partition of ``n``.

    Order is reverse lexicographic on the descending part list, so for
    n = 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    for parts in _descending(n, n):
        rows: list[tuple[int, int]] = []
        for x in parts:
            if rows and rows[-1][0] == x:
                rows[-1] = (x, rows[-1][1] + 1)
            else:
                rows.append((x, 1))
        yield tuple(rows)


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition._from_rows(r) for r in iter_partition_rows(n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, each once, in reverse lexicographic order."""
    if n < 0:
        return []
    return list(_partitions_cached(n))


def crank_of_rows(rows: Iterable[tuple[int, int]]) -> int:
    rows = [(s, m) for s, m in rows if m]
    if not rows:
        return 0
    ones = 0
    for s, m in rows:
        if s == 1:
            ones = m
    if ones == 0:
        return max(s for s, _ in rows)
    larger = sum(m for s, m in rows if s > ones)
    return larger - ones


def crank(p: Partition) -> int:
    """Largest part when there are no ones; otherwise the number of parts
    exceeding the count of ones, minus that count.  ``crank(∅) == 0``."""
    return crank_of_rows(p.rows)


@dataclass(frozen=True)
class CrankTable:
    n: int
    counts: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, m: int) -> int:
        return self.counts.get(m, 0)


def crank_distribution(n: int) -> CrankTable:
    """M(m, n) for all m.  At n = 1 the counts are the weighted
    {-1: 1, 0: -1, 1: 1} rather than the single partition's crank."""
    if n == 1:
        return CrankTable(1, {-1: 1, 0: -1, 1: 1})
    counts = Counter(crank(p) for p in enumerate_partitions(n))
    return CrankTable(n, dict(sorted(counts.items())))


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence; independent of enumeration."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]
