import json
from collections import Counter
from math import prod

import pytest

from pdtrank.designated import (
    OverlinePartition,
    S2Triple,
    enumerate_S1,
    enumerate_S2,
    format_overline,
    parse_overline,
    pd_count,
    pdt_count,
)
from pdtrank.partitions import Partition


def part_lists(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in part_lists(n - first, first):
            yield (first,) + rest


def pd_oracle(n):
    return sum(prod(Counter(p).values()) for p in part_lists(n))


def pdt_oracle(n):
    # one designated copy per size, then one designated copy tagged
    return sum(prod(Counter(p).values()) * len(set(p)) for p in part_lists(n))


def s2_oracle(n):
    """Brute-force S2(n) as hashable keys, straight from the defining conditions."""
    out = set()
    for a in range(1, n + 1):
        for alpha in part_lists(a):
            x = Counter(alpha)
            for beta in part_lists(n - a):
                for t in range(1, n + 1):
                    if x[t] >= 1 and all(x[i] != 1 for i in x if i != t):
                        out.add((alpha, tuple(sorted(beta, reverse=True)), t))
    return out


def s2_key(tr):
    return (tr.alpha.parts, tr.beta.parts, tr.t)


def test_s1_small():
    assert len(enumerate_S1(5)) == 24
    assert enumerate_S1(1) == [OverlinePartition({1: 1}, {1: 1}, 1)]
    assert [str(x) for x in enumerate_S1(2)] == ["~2'", "~1'+1", "1+~1'"]
    assert enumerate_S1(0) == []


def test_s2_small():
    assert len(enumerate_S2(5)) == 24
    assert enumerate_S2(1) == [S2Triple(Partition({1: 1}), Partition(), 1)]
    # alpha weighs 8 and beta 16, so the triple lies in S2(24)
    worked = S2Triple(Partition({2: 1, 3: 2}), Partition.from_parts([1, 2, 3, 5, 5]), 2)
    assert worked.n == 24
    assert worked in set(enumerate_S2(24))


@pytest.mark.parametrize("n", range(1, 13))
def test_s2_matches_brute_force(n):
    s2 = enumerate_S2(n)
    keys = [s2_key(tr) for tr in s2]
    assert len(keys) == len(set(keys))
    assert set(keys) == s2_oracle(n)


@pytest.mark.parametrize("n", range(1, 33))
def test_s1_s2_cardinality(n):
    assert pdt_count(n) == pdt_oracle(n)
    assert sum(1 for _ in enumerate_S2(n)) == pdt_count(n)


@pytest.mark.parametrize("n", range(1, 16))
def test_s1_elements_distinct_and_valid(n):
    s1 = enumerate_S1(n)
    assert len(set(s1)) == len(s1)
    for lam in s1:
        assert lam.n == n
        # the trusted fast constructor agrees with the validating one
        assert OverlinePartition(lam.f, lam.g, lam.k) == lam


def test_counts():
    assert [pd_count(n) for n in (0, 2, 5)] == [1, 3, 15]
    assert [pdt_count(n) for n in (0, 4, 5)] == [0, 13, 24]
    assert [pd_count(n) for n in range(20)] == [pd_oracle(n) for n in range(20)]


def test_congruences_by_enumeration():
    for n in range(2, 33, 3):
        assert pd_count(n) % 3 == 0
        assert pdt_count(n) % 3 == 0


@pytest.mark.parametrize(
    "f, g, k, text",
    [
        ({1: 1, 2: 2}, {1: 1, 2: 1}, 2, "~2'+2+1'"),
        ({5: 1}, {5: 1}, 5, "~5'"),
        ({1: 1}, {1: 1}, 1, "~1'"),
        # tagged 3 with the second of two ones designated
        ({1: 2, 3: 1}, {1: 2, 3: 1}, 3, "~3'+1+1'"),
    ],
)
def test_format_parse(f, g, k, text):
    lam = OverlinePartition(f, g, k)
    assert format_overline(lam) == text
    assert parse_overline(text) == lam


@pytest.mark.parametrize("n", range(1, 13))
def test_text_round_trip(n):
    for lam in enumerate_S1(n):
        assert parse_overline(format_overline(lam)) == lam


@pytest.mark.parametrize(
    "bad",
    [
        "2'+2'+1'",    # two designated copies of one size
        "~2'+~1'",     # two tags
        "2'+1'",       # no tag
        "~2+1'",       # tag on an undesignated part
        "1'+~2'",      # increasing
        "~2'+1",       # size 1 has no designated copy
        "~0'",
        "~2'+x",
        "",
    ],
)
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_overline(bad)


@pytest.mark.parametrize(
    "f, g, k",
    [
        ({2: 1}, {2: 2}, 2),   # position beyond multiplicity
        ({2: 1}, {}, 2),       # missing designation
        ({2: 1}, {2: 1}, 1),   # tag on an absent size
    ],
)
def test_invalid_overline_partitions(f, g, k):
    with pytest.raises(ValueError):
        OverlinePartition(f, g, k)


def test_invalid_triples():
    with pytest.raises(ValueError):
        S2Triple(Partition({2: 1, 3: 1}), Partition(), 2)  # lone 3 is not t
    with pytest.raises(ValueError):
        S2Triple(Partition({2: 2}), Partition(), 3)


def test_json_round_trip():
    lam = parse_overline("5'+5+3+3'+3+~2'+2+1'")
    obj = json.loads(json.dumps(lam.to_json()))
    assert obj == {"n": 24, "f": {"5": 2, "3": 3, "2": 2, "1": 1},
                   "g": {"5": 1, "3": 2, "2": 1, "1": 1}, "k": 2}
    assert OverlinePartition.from_json(obj) == lam
    obj["n"] = 23
    with pytest.raises(ValueError):
        OverlinePartition.from_json(obj)


def test_enumeration_order():
    # partitions reverse-lex, then designated positions, then tag ascending
    texts = [str(x) for x in enumerate_S1(4)]
    assert texts[:5] == ["~4'", "3'+~1'", "~3'+1'", "~2'+2", "2+~2'"]
    assert texts[-1] == "1+1+1+~1'"
    assert enumerate_S1(8) == enumerate_S1(8)
