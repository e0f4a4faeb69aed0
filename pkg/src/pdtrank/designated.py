"""Partitions with overline designated summands and their companion triples.

An :class:`OverlinePartition` is a partition in which every occurring part
size ``i`` has one designated copy (position ``g[i]`` among its ``f[i]``
equal copies, counted left to right) and exactly one designated copy, of
size ``k``, is additionally tagged.  ``S1(n)`` is the set of all of them of
weight ``n``; ``S2(n)`` is the set of triples ``(alpha, beta, t)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterator, Mapping

from .partitions import Partition, enumerate_partitions, iter_partition_rows


class OverlinePartition:
    __slots__ = ("_rows", "_k", "_hash")

    def __init__(self, f: Mapping[int, int], g: Mapping[int, int], k: int):
        f = {int(i): int(m) for i, m in f.items() if int(m) != 0}
        g = {int(i): int(p) for i, p in g.items() if int(p) != 0}
        if set(f) != set(g):
            raise ValueError("f and g must have the same support")
        rows = []
        for i in sorted(f, reverse=True):
            if i < 1 or f[i] < 0:
                raise ValueError(f"invalid part size or multiplicity at {i}")
            if not 1 <= g[i] <= f[i]:
                raise ValueError(f"designated position g[{i}]={g[i]} outside 1..{f[i]}")
            rows.append((i, f[i], g[i]))
        if f.get(k, 0) < 1:
            raise ValueError(f"tagged size {k} does not occur")
        self._rows: tuple[tuple[int, int, int], ...] = tuple(rows)
        self._k = int(k)
        self._hash = hash((self._rows, self._k))

    @classmethod
    def _from_rows(cls, rows: tuple[tuple[int, int, int], ...], k: int) -> OverlinePartition:
        # trusted fast path: rows are (size, f, g), sizes strictly descending
        obj = cls.__new__(cls)
        obj._rows = rows
        obj._k = k
        obj._hash = hash((rows, k))
        return obj

    @property
    def rows(self) -> tuple[tuple[int, int, int], ...]:
        return self._rows

    @property
    def f(self) -> dict[int, int]:
        return {i: m for i, m, _ in self._rows}

    @property
    def g(self) -> dict[int, int]:
        return {i: p for i, _, p in self._rows}

    @property
    def k(self) -> int:
        return self._k

    @property
    def n(self) -> int:
        return sum(i * m for i, m, _ in self._rows)

    def fi(self, i: int) -> int:
        for s, m, _ in self._rows:
            if s == i:
                return m
        return 0

    def gi(self, i: int) -> int:
        for s, _, p in self._rows:
            if s == i:
                return p
        return 0

    @property
    def underlying(self) -> Partition:
        return Partition._from_rows(tuple((i, m) for i, m, _ in self._rows))

    def replace(self, *, g: Mapping[int, int] | None = None, k: int | None = None) -> OverlinePartition:
        """Copy with some designated positions and/or the tag changed (validated)."""
        new_g = self.g
        new_g.update(g or {})
        return OverlinePartition(self.f, new_g, self._k if k is None else k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OverlinePartition):
            return NotImplemented
        return self._k == other._k and self._rows == other._rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"OverlinePartition({format_overline(self)!r})"

    def __str__(self) -> str:
        return format_overline(self)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "f": {str(i): m for i, m, _ in self._rows},
            "g": {str(i): p for i, _, p in self._rows},
            "k": self._k,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> OverlinePartition:
        lam = cls(
            {int(i): m for i, m in obj["f"].items()},
            {int(i): p for i, p in obj["g"].items()},
            int(obj["k"]),
        )
        if "n" in obj and obj["n"] != lam.n:
            raise ValueError(f"declared n={obj['n']} but parts sum to {lam.n}")
        return lam


@dataclass(frozen=True)
class S2Triple:
    alpha: Partition
    beta: Partition
    t: int

    def __post_init__(self):
        x_t = self.alpha.multiplicity(self.t)
        if x_t < 1:
            raise ValueError(f"alpha must contain the marked size t={self.t}")
        for i, x in self.alpha.rows:
            if x == 1 and i != self.t:
                raise ValueError(f"alpha has a single copy of {i} but t={self.t}")

    @property
    def n(self) -> int:
        return self.alpha.weight + self.beta.weight

    def __str__(self) -> str:
        return f"alpha={self.alpha}, beta={self.beta}, t={self.t}"

    def to_json(self) -> dict:
        return {"alpha": self.alpha.to_json(), "beta": self.beta.to_json(), "t": self.t}


# -- text form ---------------------------------------------------------------

_PART = re.compile(r"^(~?)(\d+)('?)$")


def format_overline(lam: OverlinePartition) -> str:
    """Render as e.g. ``~2'+2+1'``: the g-th copy of each size carries ``'``
    and the tagged copy is prefixed with ``~``."""
    out = []
    for i, m, p in lam.rows:
        for pos in range(1, m + 1):
            if pos != p:
                out.append(str(i))
            elif i == lam.k:
                out.append(f"~{i}'")
            else:
                out.append(f"{i}'")
    return "+".join(out)


def parse_overline(text: str) -> OverlinePartition:
    tokens = [t.strip() for t in text.strip().split("+")]
    f: dict[int, int] = {}
    g: dict[int, int] = {}
    k = None
    prev = None
    for tok in tokens:
        m = _PART.match(tok)
        if not m:
            raise ValueError(f"malformed part {tok!r} in {text!r}")
        tilde, digits, prime = m.groups()
        size = int(digits)
        if size < 1:
            raise ValueError(f"part sizes must be positive: {text!r}")
        if prev is not None and size > prev:
            raise ValueError(f"parts must be weakly decreasing: {text!r}")
        prev = size
        f[size] = f.get(size, 0) + 1
        if prime:
            if size in g:
                raise ValueError(f"two designated copies of {size} in {text!r}")
            g[size] = f[size]
        if tilde:
            if not prime:
                raise ValueError(f"tag on an undesignated part in {text!r}")
            if k is not None:
                raise ValueError(f"more than one tagged part in {text!r}")
            k = size
    if k is None:
        raise ValueError(f"no tagged part in {text!r}")
    missing = set(f) - set(g)
    if missing:
        raise ValueError(f"sizes {sorted(missing)} have no designated copy in {text!r}")
    return OverlinePartition(f, g, k)


# -- enumeration -------------------------------------------------------------

def iter_S1(n: int) -> Iterator[OverlinePartition]:
    """Partitions of ``n`` in reverse lexicographic order, then designated
    position vectors (sizes read largest first) lexicographically, then the
    tagged size ascending."""
    if n < 1:
        return
    for rows in iter_partition_rows(n):
        sizes = [i for i, _ in rows]
        tags = sorted(sizes)
        for gv in product(*(range(1, m + 1) for _, m in rows)):
            orow = tuple((i, m, p) for (i, m), p in zip(rows, gv))
            for k in tags:
                yield OverlinePartition._from_rows(orow, k)


def enumerate_S1(n: int) -> list[OverlinePartition]:
    return list(iter_S1(n))


def iter_S2(n: int) -> Iterator[S2Triple]:
    """Triples ordered by weight of alpha descending, alpha in partition
    order, t ascending, then beta in partition order."""
    if n < 1:
        return
    for a in range(n, 0, -1):
        betas = enumerate_partitions(n - a)
        for alpha in enumerate_partitions(a):
            singles = [i for i, x in alpha.rows if x == 1]
            if len(singles) > 1:
                continue
            marks = singles if singles else sorted(i for i, _ in alpha.rows)
            for t in marks:
                for beta in betas:
                    yield S2Triple(alpha, beta, t)


def enumerate_S2(n: int) -> list[S2Triple]:
    return list(iter_S2(n))


# -- counting ----------------------------------------------------------------

@lru_cache(maxsize=None)
def pd_count(n: int) -> int:
    """PD(n): sum over partitions of n of the product of multiplicities."""
    if n < 0:
        return 0
    return sum(prod(m for _, m in p.rows) for p in enumerate_partitions(n))


@lru_cache(maxsize=None)
def pdt_count(n: int) -> int:
    """PD_t(n) = |S1(n)|, counted by walking the enumeration."""
    return sum(1 for _ in iter_S1(n))
