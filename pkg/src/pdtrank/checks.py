"""Named verification checks.  ``verify --all`` runs every entry of CHECKS."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import qseries as qs
from .delta import delta, delta_inv, split_rows
from .designated import enumerate_S1, enumerate_S2, pd_count, pdt_count
from .partitions import crank_distribution
from .ranks import (
    classify,
    matching_classes,
    ndt_counts,
    ndt_residue,
    nmdt_counts,
    nmdt_residue,
    pdt_rank,
    phi,
    phi_inv,
)
from .tables import compare_golden


@dataclass(frozen=True)
class Witness:
    n: int | str
    expected: object
    actual: object

    def __str__(self) -> str:
        return f"n={self.n}, expected={self.expected}, actual={self.actual}"


@dataclass
class CheckReport:
    name: str
    params: dict
    passed: bool
    witness: Witness | None = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failed check {self.name} must carry a witness")

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        out = f"{verdict}  {self.name}  {params}".rstrip()
        if self.witness is not None:
            out += f"  witness: {self.witness}"
        for note in self.notes:
            out += f"\n      note: {note}"
        return out

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "range": self.params,
            "verdict": "pass" if self.passed else "fail",
            "first_failure": None if self.witness is None else {
                "n": self.witness.n,
                "expected": str(self.witness.expected),
                "actual": str(self.witness.actual),
            },
            "notes": self.notes,
        }


class _Fail(Exception):
    def __init__(self, n, expected, actual):
        super().__init__(n, expected, actual)
        self.witness = Witness(n, expected, actual)


def _expect(n, expected, actual):
    if expected != actual:
        raise _Fail(n, expected, actual)


@dataclass(frozen=True)
class Check:
    name: str
    func: Callable[..., list[str] | None]
    defaults: dict
    summary: str

    def run(self, **overrides) -> CheckReport:
        params = dict(self.defaults)
        params.update({k: v for k, v in overrides.items() if k in params and v is not None})
        try:
            notes = self.func(**params) or []
        except _Fail as exc:
            return CheckReport(self.name, params, False, exc.witness)
        return CheckReport(self.name, params, True, notes=list(notes))


CHECKS: dict[str, Check] = {}


def check(name: str, summary: str, **defaults):
    def register(func):
        CHECKS[name] = Check(name, func, defaults, summary)
        return func
    return register


def run_check(name: str, **overrides) -> CheckReport:
    return CHECKS[name].run(**overrides)


def _first_diff(lhs: qs.Series, rhs: qs.Series, label: str):
    for i, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            raise _Fail(i, f"{label} lhs={a}", f"rhs={b}")


@check("delta-roundtrip", "Delta and its inverse compose to the identity; Delta maps S1 onto S2", max_n=25)
def _delta_roundtrip(max_n):
    for n in range(1, max_n + 1):
        s1 = enumerate_S1(n)
        images = set()
        for lam in s1:
            tr = delta(lam)
            _expect(n, str(lam), str(delta_inv(tr)))
            _expect(n, n, tr.alpha.weight + tr.beta.weight)
            for i, f, _ in lam.rows:
                _expect(n, f, tr.alpha.multiplicity(i) + tr.beta.multiplicity(i))
            images.add(tr)
        s2 = enumerate_S2(n)
        _expect(n, len(s1), len(images))
        _expect(n, len(s2), len(set(s2)))
        _expect(n, set(s2), images)
        for tr in s2:
            _expect(n, tr, delta(delta_inv(tr)))


def _a_b_split(n):
    a, b = [], []
    for lam in enumerate_S1(n):
        cls = classify(lam)
        if cls.is_a:
            a.append((lam, cls))
        elif cls.is_b:
            b.append((lam, cls))
    return a, b


@check("phi-bijection", "phi maps each A_i bijectively onto B_i", max_n=25)
def _phi_bijection(max_n):
    for n in range(1, max_n + 1):
        a, b = _a_b_split(n)
        images = []
        for lam, cls in a:
            mu = phi(lam)
            _expect(n, f"B{cls.value[1]}", str(classify(mu)))
            _expect(n, n, mu.n)
            _expect(n, str(lam), str(phi_inv(mu)))
            images.append(mu)
        _expect(n, len(images), len(set(images)))
        _expect(n, {str(mu) for mu, _ in b}, {str(mu) for mu in images})
        for mu, _ in b:
            _expect(n, str(mu), str(phi(phi_inv(mu))))


@check("class-partition", "B-classes partition {beta = (1)}; A- and B-classes pairwise disjoint", max_n=25)
def _class_partition(max_n):
    for n in range(1, max_n + 1):
        for lam in enumerate_S1(n):
            found = matching_classes(lam)
            if len(found) > 1:
                raise _Fail(n, f"one class for {lam}", found)
            in_b = bool(found) and found[0].is_b
            _expect(n, f"{lam} in B: {split_rows(lam)[1] == ((1, 1),)}", f"{lam} in B: {in_b}")


@check("a-implies-rank0", "every member of A has pdt-rank 0", max_n=25)
def _a_rank0(max_n):
    for n in range(1, max_n + 1):
        for lam, _ in _a_b_split(n)[0]:
            _expect(n, f"{lam}: 0", f"{lam}: {pdt_rank(lam)}")


@check("ndt-nmdt-equal", "N_mdt(m, n) = N_dt(m, n) for all m", max_n=25)
def _ndt_nmdt(max_n):
    for n in range(1, max_n + 1):
        _expect(n, ndt_counts(n).counts, nmdt_counts(n))


@check("theorem-1-1", "N_dt(i, 3; 3n+2) equal for i = 0, 1, 2 (and likewise N_mdt)", max_n=32)
def _theorem_1_1(max_n):
    for n in range(2, max_n + 1, 3):
        for res in (ndt_residue(n, 3), nmdt_residue(n, 3)):
            if len(set(res.values())) != 1:
                raise _Fail(n, "three equal residue counts", res)


def _congruence(counter, series, max_n, terms):
    for n in range(2, max_n + 1, 3):
        _expect(n, 0, counter(n) % 3)
    s = series(terms)
    for n in range(2, terms + 1, 3):
        _expect(n, 0, s[n] % 3)


@check("congruence-pd", "PD(3n+2) = 0 mod 3 by enumeration and by series", max_n=32, terms=300)
def _congruence_pd(max_n, terms):
    _congruence(pd_count, qs.pd_prefactor, max_n, terms)


@check("congruence-pdt", "PD_t(3n+2) = 0 mod 3 by enumeration and by series", max_n=32, terms=300)
def _congruence_pdt(max_n, terms):
    _congruence(pdt_count, qs.pdt_gf, max_n, terms)


@check("pdtgf-vs-enum", "Lambert-series generating function matches |S1(n)|", max_n=32)
def _pdtgf(max_n):
    s = qs.pdt_gf(max_n)
    for n in range(max_n + 1):
        _expect(n, pdt_count(n), s[n])


@check("pd-prefactor-vs-enum", "eta-quotient prefactor matches PD(n) (empirical)", max_n=32)
def _pd_prefactor(max_n):
    s = qs.pd_prefactor(max_n)
    for n in range(max_n + 1):
        _expect(n, pd_count(n), s[n])


@check("identity-3-2", "2 * Lambert sum + 1 equals the eta quotient", terms=300)
def _identity_3_2(terms):
    _first_diff(qs.lambert_pdt(terms) * 2 + 1, qs.lambert_eta_quotient(terms), "2L+1")


@check("identity-3-5", "(q;q)^2/(q^2;q^2) = (q;q^2)^2 (q^2;q^2) = theta", terms=300)
def _identity_3_5(terms):
    e1, e2 = qs.eta_like(1, terms), qs.eta_like(2, terms)
    middle = qs.pochhammer(1, 2, 1, terms) ** 2 * e2
    _first_diff(e1 ** 2 / e2, middle, "eta quotient vs product")
    _first_diff(middle, qs.theta_alt(terms), "product vs theta")


@check("dissection-zero", "coefficients of q^(3n+2) in G vanish", terms=300)
def _dissection_zero(terms):
    g = qs.dissection_G(terms)
    for n in range(2, terms + 1, 3):
        _expect(n, 0, g[n])


@check("bridge-G", "enumerated mod-3 residues reproduce G: r1 = r2 and 2(r0 - r1) = G_n", max_n=30)
def _bridge(max_n):
    g = qs.dissection_G(max_n)
    _expect(0, 0, g[0])
    for n in range(1, max_n + 1):
        res = ndt_residue(n, 3)
        _expect(n, res[1], res[2])
        _expect(n, g[n], 2 * (res[0] - res[1]))


@check("crank-gf", "crank generating function matches crank_distribution", max_n=20)
def _crank_gf(max_n):
    s = qs.crank_gf(max_n)
    for n in range(max_n + 1):
        _expect(n, crank_distribution(n).counts, s[n])


def _table(which):
    diff = compare_golden(which)
    if diff.missing or diff.extra:
        raise _Fail(diff.n, f"rows {diff.missing}", f"rows {diff.extra}")
    if diff.mismatches:
        part, col, want, got = diff.mismatches[0]
        raise _Fail(diff.n, f"{part} {col}={want}", f"{col}={got}")
    return [
        f"documented deviation: {part} {col} printed {want}, computed {got}"
        for part, col, want, got in diff.deviations
    ]


@check("table-2-1", "reproduce the n = 5 pdt-rank table")
def _table_2_1():
    return _table("2.1")


@check("table-4-2", "reproduce the n = 5 modified-rank table")
def _table_4_2():
    return _table("4.2")


__all__ = ["CHECKS", "Check", "CheckReport", "Witness", "run_check"]
