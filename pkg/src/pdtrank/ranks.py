"""pdt-rank, the A/B classes, the maps phi_1..phi_5, and the modified rank.

The class definitions are read with each "for all i" quantifier ranging
over the sizes not already pinned by the other clauses (size 1 and/or the
tagged size k).  Two further restrictions keep phi a bijection:

* A5 needs n >= 3, since "~2'" would map to the invalid "~1'+1'".
* A4 needs k to be the largest size of multiplicity >= 2; otherwise two
  members of A4 that differ only in which repeated size carries the tag
  land on the same element of B4 (first happens at n = 15).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .delta import split_rows
from .designated import OverlinePartition, iter_S1
from .partitions import crank_of_rows


@dataclass(frozen=True)
class RankValue:
    """A pdt-rank; ``value is None`` marks the exceptional beta = (1) case."""

    value: int | None

    @property
    def exceptional(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "X" if self.value is None else str(self.value)


EXCEPTIONAL = RankValue(None)


def pdt_rank(lam: OverlinePartition) -> RankValue:
    _, beta = split_rows(lam)
    if beta == ((1, 1),):
        return EXCEPTIONAL
    return RankValue(crank_of_rows(beta))


@dataclass(frozen=True)
class SignedCountTable:
    n: int
    counts: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, m: int) -> int:
        return self.counts.get(m, 0)


def _residues(counts: dict[int, int], t: int) -> dict[int, int]:
    if t < 2:
        raise ValueError(f"modulus must be >= 2, got {t}")
    out = dict.fromkeys(range(t), 0)
    for m, c in counts.items():
        out[m % t] += c
    return out


def _clean(counts: Counter) -> dict[int, int]:
    return {m: c for m, c in sorted(counts.items()) if c}


@lru_cache(maxsize=64)
def _ndt(n: int) -> tuple[tuple[int, int], ...]:
    counts: Counter = Counter()
    for lam in iter_S1(n):
        _, beta = split_rows(lam)
        if beta == ((1, 1),):
            counts[0] -= 1
            counts[1] += 1
            counts[-1] += 1
        else:
            counts[crank_of_rows(beta)] += 1
    return tuple(_clean(counts).items())


def ndt_counts(n: int) -> SignedCountTable:
    """Signed N_dt(m, n): an exceptional element counts -1 at 0 and +1 at +-1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return SignedCountTable(n, dict(_ndt(n)))


def ndt_residue(n: int, t: int) -> dict[int, int]:
    return _residues(ndt_counts(n).counts, t)


# -- classes -----------------------------------------------------------------

class PdtClass(enum.Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"
    A5 = "A5"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    B5 = "B5"
    NEITHER = "-"

    @property
    def is_a(self) -> bool:
        return self.value.startswith("A")

    @property
    def is_b(self) -> bool:
        return self.value.startswith("B")

    def __str__(self) -> str:
        return self.value


def _others(lam: OverlinePartition, *skip: int):
    return [(i, f, g) for i, f, g in lam.rows if i not in skip]


def _all_full_repeated(rows) -> bool:
    # every listed size has f = g >= 2
    return all(f == g and f >= 2 for _, f, g in rows)


def in_a1(lam: OverlinePartition) -> bool:
    k = lam.k
    f1 = lam.fi(1)
    return (
        k != 1
        and f1 >= 3
        and lam.gi(1) == f1
        and lam.gi(k) == lam.fi(k)
        and _all_full_repeated(_others(lam, 1, k))
    )


def in_a2(lam: OverlinePartition) -> bool:
    f1 = lam.fi(1)
    return (
        lam.k == 1
        and f1 >= 2
        and lam.gi(1) == f1
        and _all_full_repeated(_others(lam, 1))
    )


def in_a3(lam: OverlinePartition) -> bool:
    k = lam.k
    fk = lam.fi(k)
    return (
        lam.fi(1) == 1
        and lam.gi(1) == 1
        and k != 1
        and fk >= 2
        and lam.gi(k) == fk - 1
        and _all_full_repeated(_others(lam, 1, k))
    )


def in_a4(lam: OverlinePartition) -> bool:
    k = lam.k
    if not (lam.fi(1) == 1 and lam.gi(1) == 1 and k != 1):
        return False
    if not (lam.fi(k) >= 2 and lam.gi(k) == lam.fi(k)):
        return False
    rest = _others(lam, 1)
    if any(f != g for _, f, g in rest):
        return False
    if sum(1 for _, f, _ in rest if f == 1) != 1:
        return False
    return k == max(i for i, f, _ in rest if f >= 2)


def in_a5(lam: OverlinePartition) -> bool:
    return (
        lam.k != 1
        and len(lam.rows) == 1
        and lam.rows[0][1:] == (1, 1)
        and lam.n >= 3
    )


def in_b1(lam: OverlinePartition) -> bool:
    k = lam.k
    f1 = lam.fi(1)
    return (
        k != 1
        and f1 >= 3
        and lam.gi(1) == f1 - 1
        and lam.gi(k) == lam.fi(k)
        and _all_full_repeated(_others(lam, 1, k))
    )


def in_b2(lam: OverlinePartition) -> bool:
    f1 = lam.fi(1)
    return (
        lam.k == 1
        and f1 >= 2
        and lam.gi(1) == f1 - 1
        and _all_full_repeated(_others(lam, 1))
    )


def in_b3(lam: OverlinePartition) -> bool:
    return (
        lam.fi(1) == 1
        and lam.gi(1) == 1
        and lam.k != 1
        and _all_full_repeated(_others(lam, 1))
    )


def in_b4(lam: OverlinePartition) -> bool:
    k = lam.k
    rest = _others(lam, 1, k)
    return (
        lam.fi(1) == 1
        and lam.gi(1) == 1
        and k != 1
        and lam.fi(k) == 1
        and bool(rest)
        and _all_full_repeated(rest)
    )


def in_b5(lam: OverlinePartition) -> bool:
    k = lam.k
    return (
        k != 1
        and lam.fi(k) == 1
        and lam.fi(1) == 1
        and lam.gi(1) == 1
        and len(lam.rows) == 2
    )


_MEMBERSHIP = {
    PdtClass.A1: in_a1,
    PdtClass.A2: in_a2,
    PdtClass.A3: in_a3,
    PdtClass.A4: in_a4,
    PdtClass.A5: in_a5,
    PdtClass.B1: in_b1,
    PdtClass.B2: in_b2,
    PdtClass.B3: in_b3,
    PdtClass.B4: in_b4,
    PdtClass.B5: in_b5,
}


def matching_classes(lam: OverlinePartition) -> list[PdtClass]:
    return [c for c, test in _MEMBERSHIP.items() if test(lam)]


def classify(lam: OverlinePartition) -> PdtClass:
    found = matching_classes(lam)
    if len(found) > 1:
        raise AssertionError(f"{lam} lies in several classes: {found}")
    return found[0] if found else PdtClass.NEITHER


# -- phi -----------------------------------------------------------------------

def phi(lam: OverlinePartition) -> OverlinePartition:
    """Map A_i onto B_i, preserving weight."""
    cls = classify(lam)
    if cls in (PdtClass.A1, PdtClass.A2):
        return lam.replace(g={1: lam.gi(1) - 1})
    if cls is PdtClass.A3:
        return lam.replace(g={lam.k: lam.gi(lam.k) + 1})
    if cls is PdtClass.A4:
        (j,) = [i for i, f, _ in lam.rows if i != 1 and f == 1]
        return lam.replace(k=j)
    if cls is PdtClass.A5:
        n = lam.n
        return OverlinePartition({n - 1: 1, 1: 1}, {n - 1: 1, 1: 1}, n - 1)
    raise ValueError(f"{lam} is not in A (class {cls})")


def phi_inv(mu: OverlinePartition) -> OverlinePartition:
    cls = classify(mu)
    if cls in (PdtClass.B1, PdtClass.B2):
        return mu.replace(g={1: mu.gi(1) + 1})
    if cls is PdtClass.B3:
        return mu.replace(g={mu.k: mu.gi(mu.k) - 1})
    if cls is PdtClass.B4:
        return mu.replace(k=max(i for i, f, _ in mu.rows if f >= 2))
    if cls is PdtClass.B5:
        n = mu.n
        return OverlinePartition({n: 1}, {n: 1}, n)
    raise ValueError(f"{mu} is not in B (class {cls})")


# -- modified rank -------------------------------------------------------------

def modified_rank(lam: OverlinePartition) -> int:
    cls = classify(lam)
    if cls.is_a:
        return 1
    if cls.is_b:
        return -1
    r = pdt_rank(lam)
    if r.exceptional:
        raise AssertionError(f"{lam} has beta = (1) but is not in B")
    return r.value


@lru_cache(maxsize=64)
def _nmdt(n: int) -> tuple[tuple[int, int], ...]:
    counts = Counter(modified_rank(lam) for lam in iter_S1(n))
    return tuple(_clean(counts).items())


def nmdt_counts(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return dict(_nmdt(n))


def nmdt_residue(n: int, t: int) -> dict[int, int]:
    return _residues(nmdt_counts(n), t)
