"""Exact enumeration and verification tools for partitions with overline
designated summands, their pdt-rank and modified pdt-rank, and the q-series
identities behind PD_t(3n+2) = 0 (mod 3)."""

from .partitions import (
    CrankTable,
    Partition,
    crank,
    crank_distribution,
    enumerate_partitions,
    format_partition,
    parse_partition,
    weight,
)
from .designated import (
    OverlinePartition,
    S2Triple,
    enumerate_S1,
    enumerate_S2,
    format_overline,
    parse_overline,
    pd_count,
    pdt_count,
)
from .delta import delta, delta_inv
from .ranks import (
    EXCEPTIONAL,
    PdtClass,
    RankValue,
    SignedCountTable,
    classify,
    modified_rank,
    ndt_counts,
    ndt_residue,
    nmdt_counts,
    nmdt_residue,
    pdt_rank,
    phi,
    phi_inv,
)
from .qseries import LaurentPolySeries, Series

__version__ = "0.1.0"
