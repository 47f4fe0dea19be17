"""
ternjump command line.

Exit codes: 0 verified, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .errors import InvalidTriple, OutOfRange, TooLarge
from .families import (
    SCAN_FIELDS,
    family_row,
    germain_triples,
    scan,
    six_m_family,
)
from .modular import validate_triple
from .poly import coefficients, coefficients_csv, jumps_csv
from .report import analyze
from .representation import decompose, jump_from_octuple, octuple, shift_equivalent
from .table import dump_csv
from .zones import classify, table_octuple, table_V, zone_profile

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_text(rows: list[dict], fields: Sequence[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _triple(args: argparse.Namespace):
    return validate_triple(args.p, args.q, args.r)


def cmd_analyze(args: argparse.Namespace) -> int:
    t = _triple(args)
    rep = analyze(t, verify=args.verify, oracle=not args.no_oracle)
    if args.json:
        print(rep.to_json())
    else:
        lines = [("triple", f"{t}  n={t.n}  phi={t.phi}  primes={t.strict_primes}")]
        lines += [(k, v) for k, v in rep.components.items()]
        if rep.oracle:
            lines += [(f"oracle {k}", v) for k, v in rep.oracle.items()]
        lines += [(k, v) for k, v in rep.bounds.items()]
        lines += [(k, v) for k, v in rep.checks.items()]
        width = max(len(k) for k, _ in lines)
        for k, v in lines:
            print(f"{k:<{width}}  {v}")
        print(f"{'status':<{width}}  {'ok' if rep.ok else 'FAILED'}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_classify(args: argparse.Namespace) -> int:
    t = _triple(args)
    if not 0 <= args.k < t.n:
        raise OutOfRange(f"k must lie in [0, {t.n})")
    zp = zone_profile(t)
    rep = decompose(t, args.k)
    cls = classify(zp, rep)
    actual = octuple(t, args.k)
    predicted = table_octuple(zp, cls)
    ct = coefficients(t)
    v_oracle = ct(args.k) - ct(args.k - 1)
    v_table = table_V(zp, cls)
    v_oct = jump_from_octuple(actual)
    detail = {
        "k": args.k,
        "F": rep.F,
        "a": rep.a,
        "b": rep.b,
        "c": rep.c,
        "cell": list(cls.cell),
        "row": cls.row,
        "perm": list(cls.perm),
        "predicted_octuple": list(predicted),
        "actual_octuple": list(actual),
        "V_oracle": v_oracle,
        "V_table": v_table,
        "V_octuple": v_oct,
    }
    ok = v_oracle == v_table == v_oct and shift_equivalent(actual, predicted)
    if args.json:
        print(json.dumps(detail, indent=2))
    else:
        print(f"k={args.k}  (F,a,b,c)=({rep.F},{rep.a},{rep.b},{rep.c})")
        print(f"cell {cls.cell}  row {cls.row}  perm {cls.perm}")
        print(f"predicted octuple {predicted}")
        print(f"actual octuple    {actual}")
        print(f"V oracle={v_oracle} table={v_table} octuple={v_oct}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_coeffs(args: argparse.Namespace) -> int:
    ct = coefficients(_triple(args))
    if args.format == "json":
        if args.jumps:
            v = ct.differences()
            data = [{"k": k, "V": int(v[k])} for k in range(len(v)) if v[k]]
        else:
            data = [{"k": k, "a": int(a)} for k, a in enumerate(ct.coeffs)]
        _emit(json.dumps(data) + "\n", args.out)
    else:
        _emit(jumps_csv(ct) if args.jumps else coefficients_csv(ct), args.out)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    _emit(dump_csv(as_printed=args.as_printed), args.out)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    if args.pmax < 5:
        raise UsageError("--pmax must be at least 5")
    rows = [
        r.as_dict()
        for r in scan(args.pmax, args.primes_only, args.jobs, args.sample_k, args.seed)
    ]
    _emit(_rows_text(rows, SCAN_FIELDS, args.format), args.out)
    failed = sum(r["status"] != "pass" for r in rows)
    seed = f" seed={args.seed}" if args.sample_k is not None else ""
    print(f"scan: {len(rows)} triples, {len(rows) - failed} pass, {failed} fail{seed}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


FAMILY_FIELDS = ("kind", "p", "q", "r", "n", "params", "J_formula", "J_oracle", "bound", "bound_ok", "warnings", "status")


def cmd_family(args: argparse.Namespace) -> int:
    if args.kind == "six-m":
        if not 3 <= args.m_from <= args.m_to:
            raise UsageError("need 3 <= --m-from <= --m-to")
        instances = six_m_family(args.m_from, args.m_to)
    else:
        try:
            eps = Fraction(args.eps)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --eps: {args.eps}") from exc
        if not 0 < eps < 1:
            raise UsageError("--eps must lie in (0, 1)")
        instances = germain_triples(args.qmax, eps)
    rows = []
    for inst in instances:
        fr = family_row(inst, oracle=not args.no_oracle)
        t = inst.t
        rows.append(
            {
                "kind": inst.kind,
                "p": t.p,
                "q": t.q,
                "r": t.r,
                "n": t.n,
                "params": ";".join(f"{k}={v}" for k, v in inst.params.items()),
                "J_formula": fr.J,
                "J_oracle": fr.J_oracle,
                "bound": inst.bound,
                "bound_ok": fr.bound_ok,
                "warnings": "; ".join(fr.warnings),
                "status": "pass" if fr.ok else "fail",
            }
        )
    _emit(_rows_text(rows, FAMILY_FIELDS, args.format), args.out)
    failed = sum(r["status"] != "pass" for r in rows)
    print(f"family {args.kind}: {len(rows)} instances, {len(rows) - failed} pass, {failed} fail", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ternjump",
        description="Jumps of ternary cyclotomic (and inclusion-exclusion) coefficients.",
        epilog="Exit codes: 0 verified, 1 check failed, 2 usage error. "
        "TERNJUMP_MAX_N caps the oracle size (default 10^8).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="<command>", required=True)

    def triple_args(sp: argparse.ArgumentParser) -> None:
        for name in ("p", "q", "r"):
            sp.add_argument(name, type=int)

    def output_args(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("analyze", help="closed form, oracle and checks for one triple")
    triple_args(sp)
    sp.add_argument("--verify", action="store_true", help="per-index three-way agreement")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--no-oracle", action="store_true")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("classify", help="drill down into one index")
    triple_args(sp)
    sp.add_argument("k", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("coeffs", help="export coefficients or jumps")
    triple_args(sp)
    sp.add_argument("--jumps", action="store_true", help="export nonzero V(k) instead")
    output_args(sp)
    sp.set_defaults(func=cmd_coeffs)

    sp = sub.add_parser("table", help="dump the jump table as CSV")
    sp.add_argument("--as-printed", action="store_true", help="original octuple column, errata included")
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("scan", help="verify every triple up to --pmax")
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--primes-only", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--sample-k", type=int, metavar="N", help="check N random indices per triple")
    sp.add_argument("--seed", type=int, default=0)
    output_args(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("family", help="small-J families")
    sp.add_argument("kind", choices=("six-m", "germain"))
    sp.add_argument("--m-from", type=int, default=3)
    sp.add_argument("--m-to", type=int, default=20)
    sp.add_argument("--qmax", type=int, default=200)
    sp.add_argument("--eps", default="1/2")
    sp.add_argument("--no-oracle", action="store_true")
    output_args(sp)
    sp.set_defaults(func=cmd_family)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidTriple, OutOfRange, TooLarge, UsageError) as exc:
        print(f"ternjump: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
