"""Command-line driver.

Usage:
    lieeinstein spaces --group E6
    lieeinstein spaces --family B --sweep 5..8 --format csv
    lieeinstein solve --group E7 --type Ib
    lieeinstein solve --family C --n 3 --p 2 --format json
    lieeinstein reproduce --format json --out report.json

Exit codes: 0 success, 1 a reproduction check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Context, Decimal
from fractions import Fraction
from typing import Any, Iterable

from .flagdecomp import TYPES, Decomposition, find_nodes_with_q2
from .interval import Interval
from .reproduce import SECTIONS, existence_checks, fstr, run_all
from .rootsys import EXCEPTIONAL_RANK, MIN_RANK, LieKind, RankError, enumerate_positive_roots
from .solver import START_WIDTH, SolveResult, solve

VALUE_NAMES = ("u0", "u1", "u2", "x1", "x2", "e")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------- selectors

def parse_sweep(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"--sweep expects a..b, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty sweep {text!r}")
    return lo, hi


def selected_groups(args) -> list[tuple[str, int | None]]:
    if args.group and args.family:
        raise UsageError("give either --group or --family, not both")
    if args.group:
        name = args.group.upper()
        if name in EXCEPTIONAL_RANK:
            return [(name, None)]
        if name[:1] in MIN_RANK and name[1:].isdigit():
            return [(name[:1], int(name[1:]))]
        raise UsageError(f"unknown group {args.group!r}")
    if args.family:
        fam = args.family.upper()
        if fam not in MIN_RANK:
            raise UsageError(f"--family must be one of B, C, D, got {args.family!r}")
        if args.sweep:
            lo, hi = parse_sweep(args.sweep)
            if lo < MIN_RANK[fam]:
                raise UsageError(f"{fam}_n needs n >= {MIN_RANK[fam]}")
            return [(fam, n) for n in range(lo, hi + 1)]
        if args.n is None:
            raise UsageError("--family needs --n or --sweep")
        return [(fam, args.n)]
    raise UsageError("select a group with --group or --family")


def selected_spaces(args) -> list[Decomposition]:
    """Two-summand flag spaces of the selected groups, filtered by type and node."""
    if args.type and args.type not in TYPES:
        raise UsageError(f"--type must be one of {', '.join(TYPES)}")
    out = []
    for name, rank in selected_groups(args):
        try:
            rs = enumerate_positive_roots(LieKind.parse(name, rank))
        except RankError as exc:
            raise UsageError(str(exc)) from None
        for _, d in find_nodes_with_q2(rs):
            if args.type and d.dtype != args.type:
                continue
            if args.node is not None and d.node + 1 != args.node:
                continue
            out.append(d)
    if not out:
        raise UsageError("no two-summand node matches the selection")
    return out


# ---------------------------------------------------------------- formatting

def decimal_str(v: Fraction, digits: int) -> str:
    ctx = Context(prec=digits)
    return str(ctx.divide(Decimal(v.numerator), Decimal(v.denominator)))


def value_record(v: Any, digits: int) -> dict[str, Any]:
    if isinstance(v, Interval):
        lo, hi = Fraction(v.lo), Fraction(v.hi)
        return {"exact": None, "decimal": decimal_str((lo + hi) / 2, digits),
                "width": decimal_str(hi - lo, 3)}
    v = Fraction(v)
    return {"exact": fstr(v), "decimal": decimal_str(v, digits)}


def value_text(v: Any, digits: int) -> str:
    r = value_record(v, digits)
    return r["exact"] if r["exact"] is not None else r["decimal"]


def space_record(d: Decomposition) -> dict[str, Any]:
    return {
        "group": d.group, "node": d.node + 1, "type": d.dtype,
        "d0": d.d0, "d1": d.d1, "d2": d.d2, "d3": d.d3, "d4": d.d4,
    }


def solution_records(res: SolveResult, digits: int) -> list[dict[str, Any]]:
    rows = []
    for s in res:
        rows.append({
            "branch": s.branch,
            "classification": s.classification.verdict,
            "witness": list(s.classification.witness),
            "values": {k: value_record(v, digits) for k, v in s.values().items()},
            "residual_bound": decimal_str(Fraction(s.residual_bound), 3) if s.residual_bound else "0",
        })
    return rows


def solve_record(d: Decomposition, res: SolveResult, digits: int) -> dict[str, Any]:
    return {
        "space": space_record(d),
        "polynomials": {k: [str(c) for c in reversed(p.primitive().int_coeffs())]
                        for k, p in sorted(res.polynomials.items())},
        "notes": list(res.notes),
        "solutions": solution_records(res, digits),
        "rejected": [
            {"branch": r.branch, "x2": decimal_str(r.x2.mid, digits), "reason": r.reason}
            for r in res.rejected
        ],
    }


def aligned(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def csv_text(header: list[str], rows: Iterable[list[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------- commands

def cmd_spaces(args) -> tuple[str, int]:
    spaces = selected_spaces(args)
    recs = [space_record(d) for d in spaces]
    cols = ["group", "node", "type", "d0", "d1", "d2", "d3", "d4"]
    if args.format == "json":
        return dumps({"spaces": recs}), 0
    if args.format == "csv":
        return csv_text(cols, ([r[c] for c in cols] for r in recs)), 0
    return aligned([cols] + [[str(r[c]) for c in cols] for r in recs]) + "\n", 0


def _solve_all(args) -> list[tuple[Decomposition, SolveResult]]:
    done: dict[tuple, SolveResult] = {}
    out = []
    for d in selected_spaces(args):
        key = (d.dims, d.dtype)
        if key not in done:
            done[key] = solve(d, args.width)
        out.append((d, done[key]))
    return out


def cmd_solve(args) -> tuple[str, int]:
    digits = args.precision
    solved = _solve_all(args)
    if args.format == "json":
        return dumps({"results": [solve_record(d, r, digits) for d, r in solved]}), 0
    if args.format == "csv":
        header = ["group", "node", "type", "d1", "d2", "d3", "d4", "branch", "classification",
                  *VALUE_NAMES, "residual_bound"]
        rows = []
        for d, res in solved:
            for rec in solution_records(res, digits):
                vals = rec["values"]
                rows.append([d.group, d.node + 1, d.dtype, *d.dims, rec["branch"], rec["classification"],
                             *((vals[k]["exact"] or vals[k]["decimal"]) if k in vals else "" for k in VALUE_NAMES),
                             rec["residual_bound"]])
        return csv_text(header, rows), 0
    parts = []
    for d, res in solved:
        parts.append(f"{d.group} node {d.node + 1} type {d.dtype}  "
                     f"(d0, d1, d2, d3, d4) = ({d.d0}, {d.d1}, {d.d2}, {d.d3}, {d.d4})")
        for k, p in sorted(res.polynomials.items()):
            coeffs = " ".join(str(c) for c in reversed(p.primitive().int_coeffs()))
            parts.append(f"  {k} polynomial (descending): {coeffs}")
        for n in res.notes:
            parts.append(f"  note: {n}")
        rows = [["branch", "classification", *VALUE_NAMES, "residual"]]
        for s in res:
            vals = s.values()
            rows.append([s.branch, s.classification.verdict,
                         *(value_text(vals[k], digits) if k in vals else "-" for k in VALUE_NAMES),
                         f"{float(s.residual_bound):.2e}"])
        parts.append("\n".join("  " + line for line in aligned(rows).splitlines()))
        for r in res.rejected:
            parts.append(f"  rejected {r.branch} root x2 ~ {decimal_str(r.x2.mid, 8)}: {r.reason}")
        parts.append("")
    return "\n".join(parts), 0


def cmd_reproduce(args) -> tuple[str, int]:
    sections = args.section or list(SECTIONS)
    if args.sweep:
        lo, hi = parse_sweep(args.sweep)
        rep = run_all([s for s in sections if s != "existence"])
        if "existence" in sections:
            rep.checks.extend(existence_checks(
                *(range(max(lo, m), hi + 1) for m in (5, 3, 6))
            ))
    else:
        rep = run_all(sections)
    code = 0 if rep.ok else 1
    records = [c.record() for c in rep.checks]
    failed = sum(not r["pass"] for r in records)
    if args.format == "json":
        summary = {"total": len(records), "passed": len(records) - failed, "failed": failed}
        return dumps({"checks": records, "summary": summary}), code
    if args.format == "csv":
        rows = ([r["id"], r["paper_ref"], r["pass"], json.dumps(r["expected"]), json.dumps(r["computed"]),
                 r.get("note", "")] for r in records)
        return csv_text(["id", "paper_ref", "pass", "expected", "computed", "note"], rows), code
    lines = []
    for r in records:
        tag = "PASS" if r["pass"] else "FAIL"
        note = f"  [{r['note']}]" if r.get("note") else ""
        lines.append(f"{tag}  {r['id']}{note}")
    lines.append(f"{len(records) - failed}/{len(records)} checks passed")
    return "\n".join(lines) + "\n", code


# ---------------------------------------------------------------- entry point

def _precision(text: str) -> int:
    v = int(text)
    if v < 6:
        raise argparse.ArgumentTypeError("precision must be at least 6")
    return v


def _width(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("width must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lieeinstein", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--out", help="write the report here instead of standard output")
    select = argparse.ArgumentParser(add_help=False)
    select.add_argument("--group", help="E6, E7, E8, F4, G2 or a classical name such as B5")
    select.add_argument("--family", help="B, C or D")
    select.add_argument("--n", type=int, help="rank for --family")
    select.add_argument("--sweep", help="rank range a..b for --family")
    select.add_argument("--type", help="restrict to Ia, Ib, IIa or IIb")
    select.add_argument("--node", "--p", dest="node", type=int, help="painted node, numbered from 1")

    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("spaces", parents=[common, select], help="list two-summand flag spaces")
    s = sub.add_parser("solve", parents=[common, select], help="solve the Einstein equations")
    s.add_argument("--precision", type=_precision, default=12, help="significant digits (>= 6)")
    s.add_argument("--width", type=_width, default=START_WIDTH, help="starting root-enclosure width")
    r = sub.add_parser("reproduce", parents=[common], help="regenerate and check every reference value")
    r.add_argument("--section", action="append", choices=list(SECTIONS))
    r.add_argument("--sweep", help="rank range a..b for the existence sweep (default 3..30)")
    return p


COMMANDS = {"spaces": cmd_spaces, "solve": cmd_solve, "reproduce": cmd_reproduce}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"lieeinstein: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
