"""Command line interface: ``mfold count|table|verify|oracle``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import verification
from .chern import codim_j, fixed_singularity_count
from .kontsevich import n_plane
from .recursion import CountQuery, FamilyRecursion, MemoStore

CACHE_ENV = "MFOLD_CACHE_DIR"
CACHE_FILE = "memo.json"
DEGREE_GUARD = 12


class UsageError(Exception):
    pass


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _render(records: list[dict], fmt: str, columns: list[str], single: bool = False) -> str:
    if fmt == "json":
        payload = [{k: (str(v) if k == "count" else v) for k, v in rec.items()} for rec in records]
        return json.dumps(payload[0] if single else payload, indent=1)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([rec[c] for c in columns])
        return buf.getvalue().rstrip("\n")
    rows = [columns] + [[str(rec[c]) for c in columns] for rec in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(columns))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows)


class Session:
    """Engine plus optional persistent memo."""

    def __init__(self, args):
        self.path = None
        self.mode = args.cache_mode
        if self.mode != "disabled":
            if args.cache:
                self.path = Path(args.cache)
            elif os.environ.get(CACHE_ENV):
                self.path = Path(os.environ[CACHE_ENV]) / CACHE_FILE
        memo = MemoStore()
        if self.path is not None and self.path.exists():
            try:
                memo = MemoStore.load(self.path)
            except (ValueError, KeyError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read memo cache {self.path}: {exc}") from None
        self.loaded = len(memo)
        self.engine = FamilyRecursion(memo=memo)

    def close(self) -> None:
        if self.path is not None and self.mode == "read-write":
            self.engine.memo.save(self.path)


def _check_degree(d: int, args) -> None:
    if d > DEGREE_GUARD and not args.unsafe_degree:
        raise UsageError(f"degree {d} exceeds guard d <= {DEGREE_GUARD} (use --unsafe-degree)")


def _query(d: int, m: int, theta: int, r: int | None) -> CountQuery:
    if (d, m) == (0, 0):
        raise UsageError("class (d,m) = (0,0) is not allowed")
    if theta < 0:
        raise UsageError("theta must be nonnegative")
    if r is None:
        r = 3 * d + 1 - m - theta
        if r < 0:
            raise UsageError(f"computed r = 3d+1-m-theta = {r} is negative")
    elif r < 0:
        raise UsageError("r must be nonnegative")
    return CountQuery.make((d, m), r, theta)


def cmd_count(args) -> int:
    _check_degree(args.d, args)
    q = _query(args.d, args.m, args.theta, args.r)
    session = Session(args)
    value = session.engine.count(q.alpha, q.r, q.theta)
    session.close()
    rec = {"d": args.d, "m": args.m, "theta": q.theta, "r": q.r, "count": value}
    print(_render([rec], args.format, ["d", "m", "theta", "r", "count"], single=True))
    return 0


def cmd_table(args) -> int:
    if args.preset:
        if args.preset not in verification.GOLDEN:
            raise UsageError(f"unknown preset {args.preset!r}")
        cells = [(d, m, t, r) for (d, m, t, r), _ in verification.GOLDEN[args.preset]]
    else:
        if args.m is None or args.d_range is None:
            raise UsageError("table needs --preset or both -m and --d-range")
        lo, hi = args.d_range
        if lo > hi:
            raise UsageError(f"empty degree range {lo}..{hi}")
        cells = []
        for d in range(lo, hi + 1):
            q = _query(d, args.m, args.theta, None)
            cells.append((d, args.m, q.theta, q.r))
    for d, *_ in cells:
        _check_degree(d, args)
    session = Session(args)
    records = []
    for d, m, t, r in sorted(cells):
        records.append({"d": d, "m": m, "theta": t, "r": r, "count": session.engine.count((d, m), r, t)})
    session.close()
    print(_render(records, args.format, ["d", "m", "theta", "r", "count"]))
    return 0


def _verify_text(reports) -> str:
    lines = []
    for rep in reports:
        bad = rep.failures()
        status = "ok" if not bad else f"FAILED ({len(bad)}/{len(rep.checks)})"
        lines.append(f"{rep.title}: {len(rep.checks)} checks {status}")
        for c in bad:
            key = ",".join(map(str, c.key))
            lines.append(f"  {c.name} ({key}): expected {c.expected}, computed {c.computed}")
    ok = all(rep.passed for rep in reports)
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    session = Session(args)
    reports = []
    if session.loaded:
        memo_report = verification.Report("memo-cache")
        for key, stored, fresh in session.engine.memo.mismatches():
            memo_report.checks.append(verification.Check("memo-entry", key, fresh, stored))
        reports.append(memo_report)
    reports.extend(verification.verify(deep=args.deep, engine=session.engine))
    session.close()
    if args.format == "json":
        ok = all(rep.passed for rep in reports)
        print(json.dumps({"passed": ok, "reports": [r.as_dict() for r in reports]}, indent=1))
    else:
        print(_verify_text(reports))
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_oracle(args) -> int:
    if args.d is None:
        raise UsageError("oracle needs -d")
    if args.d < 1:
        raise UsageError("d must be positive")
    _check_degree(args.d, args)
    if args.kind == "kontsevich":
        rec = {"d": args.d, "count": n_plane(args.d)}
        columns = ["d", "count"]
    else:
        if args.m is None or args.m < 2:
            raise UsageError("chern oracle needs -m >= 2")
        if args.theta not in (0, 1, 2):
            raise UsageError("chern oracle needs theta in {0,1,2}")
        try:
            value = fixed_singularity_count(args.d, args.m, args.theta)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rec = {
            "d": args.d,
            "m": args.m,
            "theta": args.theta,
            "points": codim_j(args.d, args.m) - args.theta,
            "count": value,
        }
        columns = ["d", "m", "theta", "points", "count"]
    print(_render([rec], args.format, columns, single=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--cache", metavar="PATH", help=f"memo cache file (default: ${CACHE_ENV}/{CACHE_FILE})")
    common.add_argument("--cache-mode", choices=["read-write", "read-only", "disabled"], default="read-write")
    common.add_argument("--unsafe-degree", action="store_true", help=f"allow d > {DEGREE_GUARD}")

    parser = argparse.ArgumentParser(prog="mfold", description="Count rational plane curves with an m-fold point.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="one count N_(d,m)(r, theta)")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--theta", type=int, default=0)
    p.add_argument("--r", type=int, default=None, help="override r (default 3d+1-m-theta)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common], help="a column of counts over degrees")
    p.add_argument("--preset", choices=verification.TABLE_NAMES)
    p.add_argument("-m", type=int)
    p.add_argument("--theta", type=int, default=0)
    p.add_argument("--d-range", type=_parse_range, metavar="LO..HI")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="golden tables and cross-oracle identities")
    p.add_argument("--deep", action="store_true", help="extend identity checks to d <= 10")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="run an independent oracle")
    p.add_argument("kind", choices=["kontsevich", "chern"])
    p.add_argument("-d", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("--theta", type=int, default=0)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"mfold: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
