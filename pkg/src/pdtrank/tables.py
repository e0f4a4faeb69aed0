"""Rank tables for S1(n) and comparison against the shipped golden TSVs."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from importlib import resources

from .delta import delta
from .designated import format_overline, iter_S1, parse_overline
from .ranks import classify, modified_rank, pdt_rank

COLUMNS = ("partition", "alpha", "beta", "t", "rank", "mrank", "mrank_mod3", "class")
TABLE_COLUMNS = ("partition", "alpha", "beta", "rank", "mrank", "mrank_mod3", "class")

GOLDEN_FILES = {"2.1": "table_2_1.tsv", "4.2": "table_4_2.tsv"}


def rank_rows(n: int) -> list[dict[str, str]]:
    """One row of string fields per element of S1(n), in enumeration order."""
    rows = []
    for lam in iter_S1(n):
        tr = delta(lam)
        mrank = modified_rank(lam)
        rows.append({
            "partition": format_overline(lam),
            "alpha": str(tr.alpha),
            "beta": str(tr.beta),
            "t": str(tr.t),
            "rank": str(pdt_rank(lam)),
            "mrank": str(mrank),
            "mrank_mod3": str(mrank % 3),
            "class": str(classify(lam)),
        })
    return rows


def to_tsv(rows: list[dict[str, str]], columns=TABLE_COLUMNS) -> str:
    buf = io.StringIO()
    buf.write("\t".join(columns) + "\n")
    for row in rows:
        buf.write("\t".join(row[c] for c in columns) + "\n")
    return buf.getvalue()


@dataclass
class Golden:
    columns: list[str]
    rows: list[dict[str, str]]
    # (partition, column) -> value the definitions are known to produce
    deviations: dict[tuple[str, str], str] = field(default_factory=dict)


def load_golden(which: str) -> Golden:
    text = resources.files("pdtrank.data").joinpath(GOLDEN_FILES[which]).read_text(encoding="utf-8")
    deviations = {}
    body = []
    for line in text.splitlines():
        if line.startswith("#deviation\t"):
            _, part, col, value = line.split("\t")
            deviations[(part, col)] = value
        elif line and not line.startswith("#"):
            body.append(line)
    reader = csv.DictReader(body, delimiter="\t", quoting=csv.QUOTE_NONE)
    rows = list(reader)
    return Golden(list(reader.fieldnames or []), rows, deviations)


@dataclass
class GoldenDiff:
    which: str
    n: int
    mismatches: list[tuple[str, str, str, str]]  # partition, column, golden, computed
    deviations: list[tuple[str, str, str, str]]
    missing: list[str]
    extra: list[str]

    @property
    def ok(self) -> bool:
        return not (self.mismatches or self.missing or self.extra)


def compare_golden(which: str) -> GoldenDiff:
    """Match computed rows to the golden file by partition text.

    The printed row order is not a systematic enumeration order, so rows
    are keyed rather than zipped.  A documented deviation is accepted only
    if the computed value is exactly the one recorded in the file.
    """
    golden = load_golden(which)
    n = parse_overline(golden.rows[0]["partition"]).n
    computed = {r["partition"]: r for r in rank_rows(n)}
    seen = set()
    mismatches, deviations, missing = [], [], []
    for grow in golden.rows:
        key = grow["partition"]
        if key in seen or key not in computed:
            missing.append(key)
            continue
        seen.add(key)
        crow = computed[key]
        for col in golden.columns:
            if col == "partition" or grow[col] == crow[col]:
                continue
            entry = (key, col, grow[col], crow[col])
            if golden.deviations.get((key, col)) == crow[col]:
                deviations.append(entry)
            else:
                mismatches.append(entry)
    for (key, col), value in golden.deviations.items():
        if (key, col) not in {(d[0], d[1]) for d in deviations}:
            mismatches.append((key, col, "documented deviation", computed.get(key, {}).get(col, "?")))
    extra = sorted(set(computed) - seen)
    return GoldenDiff(which, n, mismatches, deviations, missing, extra)
