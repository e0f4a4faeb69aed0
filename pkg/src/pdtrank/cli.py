"""Command-line front end.

Exit codes: 0 when everything requested passed, 1 when a check failed,
2 on a usage error (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import qseries as qs
from .checks import CHECKS, run_check
from .delta import delta
from .designated import iter_S1, parse_overline
from .ranks import classify, modified_rank, ndt_counts, nmdt_counts, pdt_rank
from .tables import COLUMNS, GOLDEN_FILES, TABLE_COLUMNS, load_golden, rank_rows, to_tsv

SERIES = {
    "pdt": qs.pdt_gf,
    "pd-prefactor": qs.pd_prefactor,
    "lambert": qs.lambert_pdt,
    "theta": qs.theta_alt,
    "G": qs.dissection_G,
}


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _modulus(text: str) -> int:
    value = _positive(text)
    if value < 2:
        raise argparse.ArgumentTypeError("modulus must be >= 2")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdtrank",
        description="Partitions with overline designated summands: enumeration, ranks, series and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list S1(n) with Delta-images and ranks")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("table", help="rank table in the golden-file layout")
    p.add_argument("--which", choices=sorted(GOLDEN_FILES), required=True)
    p.add_argument("--n", type=_positive, help="weight (default: that of the golden table)")

    p = sub.add_parser("counts", help="N_dt and N_mdt counts and residues")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--modulus", type=_modulus, default=3)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("series", help="print series coefficients 0..N")
    p.add_argument("--which", choices=sorted(SERIES), required=True)
    p.add_argument("--terms", type=_nonneg, required=True)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("verify", help="run named checks")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", choices=list(CHECKS))
    group.add_argument("--all", action="store_true")
    p.add_argument("--max-n", type=_positive)
    p.add_argument("--terms", type=_nonneg)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def cmd_enumerate(n: int, fmt: str, out) -> int:
    if fmt == "tsv":
        out.write(to_tsv(rank_rows(n), COLUMNS))
        return 0
    records = []
    for lam in iter_S1(n):
        tr = delta(lam)
        rank = pdt_rank(lam)
        records.append({
            "partition": str(lam),
            "lambda": lam.to_json(),
            "delta": tr.to_json(),
            "rank": rank.value,
            "class": str(classify(lam)),
            "mrank": modified_rank(lam),
        })
    json.dump(records, out, indent=1)
    out.write("\n")
    return 0


def cmd_table(which: str, n: int | None, out) -> int:
    if n is None:
        n = parse_overline(load_golden(which).rows[0]["partition"]).n
    out.write(to_tsv(rank_rows(n), TABLE_COLUMNS))
    return 0


def cmd_counts(n: int, modulus: int, fmt: str, out) -> int:
    ndt = ndt_counts(n).counts
    nmdt = nmdt_counts(n)
    ms = sorted(set(ndt) | set(nmdt))
    res_dt = dict.fromkeys(range(modulus), 0)
    res_mdt = dict.fromkeys(range(modulus), 0)
    for m in ms:
        res_dt[m % modulus] += ndt.get(m, 0)
        res_mdt[m % modulus] += nmdt.get(m, 0)
    if fmt == "json":
        json.dump({
            "n": n,
            "modulus": modulus,
            "ndt": {str(m): ndt.get(m, 0) for m in ms},
            "nmdt": {str(m): nmdt.get(m, 0) for m in ms},
            "ndt_residue": {str(i): v for i, v in res_dt.items()},
            "nmdt_residue": {str(i): v for i, v in res_mdt.items()},
        }, out, indent=1)
        out.write("\n")
        return 0
    out.write("kind\tkey\tndt\tnmdt\n")
    for m in ms:
        out.write(f"rank\t{m}\t{ndt.get(m, 0)}\t{nmdt.get(m, 0)}\n")
    for i in range(modulus):
        out.write(f"residue\t{i}\t{res_dt[i]}\t{res_mdt[i]}\n")
    return 0


def cmd_series(which: str, terms: int, fmt: str, out) -> int:
    s = SERIES[which](terms)
    if fmt == "json":
        json.dump({"which": which, "terms": terms, "coeffs": list(s.coeffs)}, out)
        out.write("\n")
    else:
        out.write("n\tcoeff\n")
        for i, c in enumerate(s.coeffs):
            out.write(f"{i}\t{c}\n")
    return 0


def cmd_verify(names: list[str], max_n: int | None, terms: int | None, fmt: str, out) -> int:
    reports = [run_check(name, max_n=max_n, terms=terms) for name in names]
    if fmt == "json":
        json.dump([r.to_json() for r in reports], out, indent=1)
        out.write("\n")
    else:
        for r in reports:
            out.write(r.line() + "\n")
    return 0 if all(r.passed for r in reports) else 1


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "enumerate":
        return cmd_enumerate(args.n, args.format, out)
    if args.command == "table":
        return cmd_table(args.which, args.n, out)
    if args.command == "counts":
        return cmd_counts(args.n, args.modulus, args.format, out)
    if args.command == "series":
        return cmd_series(args.which, args.terms, args.format, out)
    names = list(CHECKS) if args.all else [args.check]
    return cmd_verify(names, args.max_n, args.terms, args.format, out)


if __name__ == "__main__":
    sys.exit(main())
