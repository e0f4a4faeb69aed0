"""The bijection between S1(n) and S2(n), size by size."""

from __future__ import annotations

from .designated import OverlinePartition, S2Triple
from .partitions import Partition


def split_rows(lam: OverlinePartition) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Multiplicity rows of (alpha, beta) for ``lam``, sizes descending."""
    k = lam.k
    xs, ys = [], []
    for i, f, g in lam.rows:
        if i == k or g >= 2:
            x, y = g, f - g
        else:
            x, y = 0, f
        if x:
            xs.append((i, x))
        if y:
            ys.append((i, y))
    return tuple(xs), tuple(ys)


def delta(lam: OverlinePartition) -> S2Triple:
    """Send each size with ``i == k`` or ``g_i >= 2`` to ``x_i = g_i``,
    ``y_i = f_i - g_i``; every other size goes wholly into beta."""
    xs, ys = split_rows(lam)
    return S2Triple(Partition._from_rows(xs), Partition._from_rows(ys), lam.k)


def delta_inv(tr: S2Triple) -> OverlinePartition:
    x = tr.alpha.mult
    y = tr.beta.mult
    f, g = {}, {}
    for i in set(x) | set(y):
        xi, yi = x.get(i, 0), y.get(i, 0)
        if i == tr.t or xi >= 2:
            f[i], g[i] = xi + yi, xi
        elif xi == 0:
            f[i], g[i] = yi, 1
        else:
            raise ValueError(f"alpha has a lone {i} that is not the marked size {tr.t}")
    return OverlinePartition(f, g, tr.t)
