"""Command-line front end: ``count``, ``enumerate``, ``biject``, ``verify``, ``table``.

Exit codes: 0 success (all identities hold), 1 mismatch or domain error,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import List, Optional, TextIO

from . import formulas
from .bijections_ka import phi, phi_inverse, psi_contract, psi_expand
from .bijections_nm import dyck_representative, dyck_to_kary, phi_hat, phi_hat_inverse, strip_first_up
from .enumeration import Family, FamilySpec, count_family, generate, total_humps, total_peaks
from .harness import (
    IDENTITIES,
    RangeError,
    format_params,
    parse_range,
    run_verify,
    summarize,
    table_hump_totals,
    table_kary_peaks,
    table_rational_narayana,
)
from .paths import DomainError, NMWord, PathProfile, PathWord, parse_width

DEFAULT_CAP = 10**6
CAP_ENV = "LATPATH_CAP"

KA_FAMILIES = {
    "ka": Family.KA_STRICT,
    "super": Family.KA_SUPER,
    "super-up": Family.KA_SUPER_POSITIVE_UP,
    "super-with-up": Family.KA_SUPER_WITH_UP,
}
NM_FAMILIES = {
    "dyck": Family.NM_DYCK,
    "free": Family.NM_FREE,
    "free-ud": Family.NM_FREE_UD,
}
COUNT_SELECTORS = sorted(
    list(KA_FAMILIES)
    + ["dyck", "dyck-peaks", "free", "free-ud", "humps", "peaks", "kary", "kary-peaks", "catalan", "narayana"]
)
BIJECT_MAPS = [
    "phi",
    "phi-inverse",
    "psi-expand",
    "psi-contract",
    "phi-hat",
    "phi-hat-inverse",
    "dyck-rep",
    "strip-up",
    "to-kary",
]


class UsageError(Exception):
    pass


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} {args.selector} needs {', '.join(missing)}")


def _profile(args) -> PathProfile:
    a = getattr(args, "a", None)
    if a is None:
        raise UsageError("--a is required (an integer or 'inf')")
    try:
        if getattr(args, "rises", None):
            rises = [int(r) for r in args.rises.split(",")]
            return PathProfile(frozenset(rises), parse_width(a))
        _need(args, "k")
        return PathProfile.ka(args.k, a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{CAP_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_CAP


# ------------------------------------------------------------------ count


def cmd_count(args, out: TextIO) -> int:
    sel = args.selector
    if sel in KA_FAMILIES:
        _need(args, "n")
        value = count_family(FamilySpec(KA_FAMILIES[sel], args.n, _profile(args), j=args.j))
    elif sel in ("humps", "peaks"):
        _need(args, "n")
        fn = total_humps if sel == "humps" else total_peaks
        value = fn(_profile(args), args.n)
    elif sel == "dyck":
        _need(args, "n", "m")
        value = formulas.d_nm(args.n, args.m)
    elif sel == "dyck-peaks":
        _need(args, "n", "m", "j")
        value = formulas.d_nm_j(args.n, args.m, args.j)
    elif sel in ("free", "free-ud"):
        _need(args, "n", "m")
        value = count_family(FamilySpec(NM_FAMILIES[sel], args.n, m=args.m, j=args.j))
    elif sel == "kary":
        _need(args, "k", "n")
        value = formulas.kary_count(args.k, args.n)
    elif sel == "kary-peaks":
        _need(args, "k", "n", "j")
        value = formulas.kary_peaks_count(args.k, args.n, args.j)
    elif sel == "catalan":
        _need(args, "n")
        value = formulas.catalan(args.n)
    else:  # narayana
        _need(args, "n", "j")
        value = formulas.narayana(args.n, args.j)
    print(value, file=out)
    return 0


# ------------------------------------------------------------------ enumerate


def cmd_enumerate(args, out: TextIO) -> int:
    sel = args.selector
    _need(args, "n")
    if sel in KA_FAMILIES:
        spec = FamilySpec(KA_FAMILIES[sel], args.n, _profile(args), j=args.j)
    else:
        _need(args, "m")
        spec = FamilySpec(NM_FAMILIES[sel], args.n, m=args.m, j=args.j)
    cap = _cap(args)
    size = count_family(spec)
    if size > cap:
        raise UsageError(f"family has {size} members, above the cap of {cap} (use --cap or {CAP_ENV})")
    for word in generate(spec):
        out.write(word.text + "\n")
    return 0


# ------------------------------------------------------------------ biject


def _nm_word(args) -> NMWord:
    word = NMWord(args.word)
    if args.n is not None and args.n != word.n:
        raise UsageError(f"--n {args.n} does not match the word ({word.n} D steps)")
    if args.m is not None and args.m != word.m:
        raise UsageError(f"--m {args.m} does not match the word ({word.m} U steps)")
    return word


def cmd_biject(args, out: TextIO) -> int:
    sel = args.selector
    if args.word is None:
        raise UsageError("--word is required")
    trace: dict = {}
    lines: List[str] = []
    if sel in ("phi", "phi-inverse", "psi-expand", "psi-contract"):
        profile = _profile(args)
        try:
            word = PathWord.parse(args.word, profile)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if sel == "phi":
            _need(args, "hump")
            image, anchors = phi(word, args.hump)
            lines.append(image.text)
            trace = anchors.to_json()
        elif sel == "phi-inverse":
            back, hump, anchors = phi_inverse(word)
            lines.append(f"{back.text} {hump}")
            trace = anchors.to_json()
        elif sel == "psi-expand":
            lines.extend(w.text for w in psi_expand(word))
        else:
            lines.append(psi_contract(word).text)
    else:
        try:
            word = _nm_word(args)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if sel == "phi-hat":
            _need(args, "peak")
            lines.append(phi_hat(word, args.peak).text)
        elif sel == "phi-hat-inverse":
            back, peak = phi_hat_inverse(word)
            lines.append(f"{back.text} {peak}")
        elif sel == "dyck-rep":
            rep, offset = dyck_representative(word)
            lines.append(rep.text)
            trace = {"offset": offset}
        elif sel == "strip-up":
            lines.append(strip_first_up(word).text)
        else:
            lines.append(dyck_to_kary(word).text)
    for line in lines:
        out.write(line + "\n")
    if args.trace:
        out.write(json.dumps(trace, sort_keys=True) + "\n")
    return 0


# ------------------------------------------------------------------ verify


def cmd_verify(args, out: TextIO) -> int:
    opts = {
        "k": args.k,
        "a": args.a,
        "n": args.n,
        "m": args.m,
        "j": args.j,
        "rises": args.rises,
        "max_sum": args.max_sum,
    }
    try:
        reports = run_verify(args.selector, opts, timing=not args.no_timing, jobs=args.jobs)
    except RangeError as exc:
        raise UsageError(str(exc)) from None
    summary = summarize(args.selector, reports)
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["id", "params", "lhs", "rhs", "pass", "elapsed_ms"])
        for r in reports:
            writer.writerow([r.id, format_params(r.params), r.lhs, r.rhs, str(r.passed).lower(), r.elapsed_ms])
        s = summary["summary"]
        print(f"summary: {s['passed']}/{s['total']} passed", file=sys.stderr)
    else:
        for r in reports:
            out.write(json.dumps(r.to_json()) + "\n")
        out.write(json.dumps(summary) + "\n")
    return 0 if summary["summary"]["pass"] else 1


# ------------------------------------------------------------------ table


def cmd_table(args, out: TextIO) -> int:
    try:
        if args.selector == "rational-narayana":
            rows = table_rational_narayana(parse_range(args.n or "1..6"), parse_range(args.m or "1..6"))
            columns = ["n", "m", "values", "sum"]
        elif args.selector == "hump-totals":
            rows = table_hump_totals(
                parse_range(args.k or "1..3"),
                parse_range(args.a or "1..2", allow_inf=True),
                parse_range(args.n or "0..8"),
            )
            columns = ["k", "a", "n", "humps", "peaks"]
        else:
            rows = table_kary_peaks(parse_range(args.k or "1..3"), parse_range(args.n or "1..6"))
            columns = ["k", "n", "values", "sum"]
    except RangeError as exc:
        raise UsageError(str(exc)) from None
    if not rows:
        raise UsageError("ranges select no rows")
    if args.format == "json":
        for row in rows:
            out.write(json.dumps({key: (str(v) if isinstance(v, int) and key in ("humps", "peaks", "sum") else v)
                                  for key, v in row.items()}) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([" ".join(map(str, row[c])) if isinstance(row[c], list) else row[c] for c in columns])
    return 0


# ------------------------------------------------------------------ parser


def _add_ka_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, help="up-step rise")
    p.add_argument("--a", help="horizontal step width, an integer or 'inf'")
    p.add_argument("--rises", help="comma-separated rise set for (S,a)-paths, overrides --k")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latpath", description="Exact counts, enumeration and bijections for humps and peaks in lattice paths."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print an exact count")
    p.add_argument("selector", choices=COUNT_SELECTORS)
    _add_ka_flags(p)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--j", type=int)

    p = sub.add_parser("enumerate", help="list every word of a family")
    p.add_argument("selector", choices=sorted(list(KA_FAMILIES) + list(NM_FAMILIES)))
    _add_ka_flags(p)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--j", type=int, help="keep only words with exactly j peaks")
    p.add_argument("--cap", type=int, help=f"refuse families larger than this (default {DEFAULT_CAP}, env {CAP_ENV})")

    p = sub.add_parser("biject", help="apply one of the bijections to a word")
    p.add_argument("selector", choices=BIJECT_MAPS)
    _add_ka_flags(p)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--word")
    p.add_argument("--hump", type=int, help="0-based hump index for phi")
    p.add_argument("--peak", type=int, help="1-based peak (block) index for phi-hat")
    p.add_argument("--trace", action="store_true", help="also print the anchor trace as JSON")

    p = sub.add_parser("verify", help="check an identity over parameter ranges")
    p.add_argument("selector", choices=sorted(IDENTITIES))
    p.add_argument("--k")
    p.add_argument("--a")
    p.add_argument("--n")
    p.add_argument("--m")
    p.add_argument("--j")
    p.add_argument("--rises")
    p.add_argument("--max-sum", dest="max_sum")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-stable output")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")

    p = sub.add_parser("table", help="print a table of closed-form counts")
    p.add_argument("selector", choices=["rational-narayana", "hump-totals", "kary-peaks"])
    p.add_argument("--k")
    p.add_argument("--a")
    p.add_argument("--n")
    p.add_argument("--m")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    return parser


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "biject": cmd_biject,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"latpath: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ArithmeticError) as exc:
        print(f"latpath: {exc}", file=sys.stderr)
        return 2 if args.command in ("count", "enumerate", "table") else 1
    except ValueError as exc:
        print(f"latpath: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
