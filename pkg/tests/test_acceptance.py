"""Exit criteria.  Each test is one criterion; the terminal summary prints
one PASS/FAIL line per criterion.  All comparisons are exact."""

import io
import time

import pytest

from pdtrank import qseries as qs
from pdtrank import designated, ranks
from pdtrank.checks import CHECKS, run_check
from pdtrank.cli import main
from pdtrank.designated import enumerate_S1, parse_overline, pd_count, pdt_count
from pdtrank.partitions import crank_distribution
from pdtrank.ranks import ndt_counts, ndt_residue, nmdt_counts, nmdt_residue
from pdtrank.tables import compare_golden, load_golden


def _clear_caches():
    for fn in (ranks._ndt, ranks._nmdt, designated.pd_count, designated.pdt_count):
        fn.cache_clear()


def _cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.acceptance(1, "PD_t(5) = 24 by enumeration and by the Lambert-series generating function, < 1 s")
def test_pdt_five():
    _clear_caches()
    start = time.perf_counter()
    by_enum = len(enumerate_S1(5))
    by_series = qs.pdt_gf(5)[5]
    elapsed = time.perf_counter() - start
    assert by_enum == by_series == 24
    assert elapsed < 1.0


@pytest.mark.acceptance(2, "table --which 2.1 --n 5 matches the golden TSV row for row (24 rows, 4 X), < 1 s")
def test_table_2_1():
    start = time.perf_counter()
    code, text = _cli("table", "--which", "2.1", "--n", "5")
    elapsed = time.perf_counter() - start
    assert code == 0
    lines = text.splitlines()
    header = lines[0].split("\t")
    produced = [dict(zip(header, line.split("\t"))) for line in lines[1:]]
    golden = load_golden("2.1")
    assert not golden.deviations
    assert len(produced) == len(golden.rows) == 24
    by_key = {row["partition"]: row for row in produced}
    assert len(by_key) == 24
    for grow in golden.rows:
        prow = by_key[grow["partition"]]
        for col in golden.columns:
            assert prow[col] == grow[col], (grow["partition"], col)
    assert sum(row["rank"] == "X" for row in produced) == 4
    assert elapsed < 1.0


@pytest.mark.acceptance(3, "N_dt(0,5) = N_dt(1,5) = N_dt(-1,5) = 4")
def test_ndt_five():
    table = ndt_counts(5)
    assert table[0] == table[1] == table[-1] == 4


@pytest.mark.acceptance(4, "table 4.2 reproduced with exactly one documented deviation; N_mdt(i,3;5) = 8, < 1 s")
def test_table_4_2():
    _clear_caches()
    start = time.perf_counter()
    diff = compare_golden("4.2")
    residues = nmdt_residue(5, 3)
    elapsed = time.perf_counter() - start
    assert diff.ok
    assert diff.deviations == [("2'+~1'+1+1", "mrank", "1", "-2")]
    assert ranks.modified_rank(parse_overline("2'+~1'+1+1")) % 3 == 1 % 3
    assert residues == {0: 8, 1: 8, 2: 8}
    assert elapsed < 1.0


@pytest.mark.acceptance(5, "N_dt(i,3;n) equal for i = 0,1,2 at every n = 2 mod 3, n <= 32, by enumeration, < 2 min")
def test_theorem_equal_residues():
    _clear_caches()
    start = time.perf_counter()
    for n in range(2, 33, 3):
        res = ndt_residue(n, 3)
        assert res[0] == res[1] == res[2], (n, res)
        assert sum(res.values()) == pdt_count(n)
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0


@pytest.mark.acceptance(6, "PD(3n+2) and PD_t(3n+2) = 0 mod 3: enumeration to 32, series to 300")
def test_congruences():
    for n in range(2, 33, 3):
        assert pd_count(n) % 3 == 0
        assert pdt_count(n) % 3 == 0
    pre, pdt = qs.pd_prefactor(300), qs.pdt_gf(300)
    for n in range(2, 301, 3):
        assert pre[n] % 3 == 0
        assert pdt[n] % 3 == 0


@pytest.mark.acceptance(7, "Lambert/eta identity, theta identity and vanishing q^(3n+2) in G to 300 terms, < 10 s")
def test_series_identities():
    start = time.perf_counter()
    assert qs.check_lambert_identity(300)
    assert qs.check_theta_identity(300)
    g = qs.dissection_G(300)
    assert all(g[n] == 0 for n in range(2, 301, 3))
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0


@pytest.mark.acceptance(8, "dissection bridge: N_dt(1,3;n) = N_dt(2,3;n) and 2(N_dt(0,3;n) - N_dt(1,3;n)) = G_n, n <= 30")
def test_bridge():
    g = qs.dissection_G(30)
    assert g[0] == 0
    for n in range(1, 31):
        res = ndt_residue(n, 3)
        assert res[1] == res[2], n
        assert 2 * (res[0] - res[1]) == g[n], n


@pytest.mark.acceptance(9, "Delta and phi bijection suites, class partition of beta = (1), N_mdt = N_dt, n <= 25")
def test_bijection_suites():
    for name in ("delta-roundtrip", "phi-bijection", "class-partition", "a-implies-rank0", "ndt-nmdt-equal"):
        report = run_check(name, max_n=25)
        assert report.passed, report.line()
    assert nmdt_counts(2) == ndt_counts(2).counts == {-1: 1, 0: 1, 1: 1}


@pytest.mark.acceptance(10, "crank generating function matches crank_distribution for n <= 20, incl. n = 1")
def test_crank_generating_function():
    c = qs.crank_gf(20)
    assert c[1] == {-1: 1, 0: -1, 1: 1}
    for n in range(21):
        assert c[n] == crank_distribution(n).counts, n


def test_verify_all_passes():
    code, text = _cli("verify", "--all")
    assert code == 0, text
    assert text.count("PASS") == len(CHECKS)
