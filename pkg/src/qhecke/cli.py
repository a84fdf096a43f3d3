"""Command-line front end: ``qhecke verify``, ``qhecke table``, ``qhecke list``.

Exit codes: 0 when every report matches, 1 when some identity mismatched or
raised, 2 for usage errors (unknown names, nonpositive orders).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed

from .identities import bailey, hecke, lemmas
from .identities.registry import REGISTRY, get_identity, verify
from .series import QSeries

ENV_ORDER = "QHECKE_DEFAULT_ORDER"
TABLE_NAMES = ("S", "P1", "T", "U", "V", "gamma:R", "DN")


class UsageError(Exception):
    pass


def _env_order() -> int | None:
    raw = os.environ.get(ENV_ORDER)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_ORDER} must be an integer, got {raw!r}") from None


def _positive(order: int, what: str = "order") -> int:
    if order <= 0:
        raise UsageError(f"{what} must be positive, got {order}")
    return order


# ---------------------------------------------------------------------------
# verify


def _resolve_order(spec, cli_order):
    if cli_order is not None:
        return _positive(cli_order)
    env = _env_order()
    if env is not None:
        return _positive(env, ENV_ORDER)
    return spec.default_order


def run_verify(names, order, jobs=1, ordered=False):
    """Yield reports for ``names``; with ``jobs > 1`` in completion order unless ``ordered``."""
    specs = [get_identity(n) for n in names]
    plan = [(s, _resolve_order(s, order)) for s in specs]
    if jobs <= 1 or len(plan) <= 1:
        for s, n in plan:
            yield verify(s, n)
        return
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(verify, s, n) for s, n in plan]
        if ordered:
            for f in futures:
                yield f.result()
        else:
            for f in as_completed(futures):
                yield f.result()


def cmd_verify(args, out) -> int:
    if args.all and args.name:
        raise UsageError("give an identity name or --all, not both")
    if not args.all and not args.name:
        raise UsageError("give an identity name or --all")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    names = list(REGISTRY) if args.all else [args.name]
    if args.name and args.name not in REGISTRY:
        raise UsageError(f"unknown identity {args.name!r}; try 'qhecke list'")
    if args.order is not None:
        _positive(args.order)
    ok = True
    for report in run_verify(names, args.order, args.jobs, args.ordered):
        ok = ok and report.ok
        out.write((report.to_json() if args.json else str(report)) + "\n")
        out.flush()
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# table


def _series_by_name(name: str, trunc: int) -> QSeries:
    if name == "S":
        return hecke.build_S(trunc, 1)
    if name == "P1":
        return hecke.build_P(trunc, 1)
    if name == "T":
        return hecke.build_T(trunc)
    if name == "U":
        return hecke.build_U(trunc)
    if name == "V":
        return hecke.build_V(trunc)
    if name.startswith("gamma:"):
        try:
            R = int(name.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad gamma index in {name!r}") from None
        if R < 0:
            raise UsageError("gamma index must be nonnegative")
        return bailey.gamma_closed(R, trunc)
    raise UsageError(f"unknown series {name!r}; known: {', '.join(TABLE_NAMES)}")


def table_rows(name: str, order: int | None = None, count: int | None = None) -> tuple[list, list]:
    """Header and rows of the requested table, all cells as strings.

    Series tables cover exponents ``0..order`` (or ``0..count-1``); DN covers
    ``N = 0..count-1`` (or ``0..order``).
    """
    if count is not None:
        last = _positive(count, "count") - 1
    else:
        last = _positive(order)
    if name == "DN":
        header = ["N", "D_N"]
        rows = [[str(N), repr(D)] for N, D in lemmas.pentagonal_family(last)]
        return header, rows
    f = _series_by_name(name, last + 1)
    header = ["exponent", "coefficient", "even", "odd"]
    rows = []
    for e in range(min(0, f.min_exp), last + 1):
        c = f[e]
        even, odd = (c, 0) if e % 2 == 0 else (0, c)
        rows.append([str(e), str(c), str(even), str(odd)])
    return header, rows


def cmd_table(args, out) -> int:
    order, count = args.order, args.count
    if order is None and count is None:
        order = _env_order()
        if order is None:
            raise UsageError("give --order or --count")
    header, rows = table_rows(args.name, order, count)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        for row in rows:
            out.write(json.dumps(dict(zip(header, row))) + "\n")
    return 0


# ---------------------------------------------------------------------------
# list


def cmd_list(args, out) -> int:
    env = _env_order()
    for name, spec in REGISTRY.items():
        order = env if env is not None else spec.default_order
        out.write(f"{name}\t{spec.description}\tdefault order {order} ({spec.order_meaning})\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qhecke", description="Exact q-series verification of Hecke-type identities.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check registered identities coefficient by coefficient")
    v.add_argument("name", nargs="?")
    v.add_argument("--all", action="store_true", help="verify every registered identity")
    v.add_argument("--order", type=int, help=f"truncation order (default: per identity, or ${ENV_ORDER})")
    v.add_argument("--json", action="store_true", help="emit JSON lines")
    v.add_argument("--ordered", action="store_true", help="emit in registry order even with --jobs")
    v.add_argument("--jobs", type=int, default=1, help="worker threads for --all")
    v.add_argument("--out", help="write reports to PATH instead of stdout")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="coefficient table of a series")
    t.add_argument("name", help=", ".join(TABLE_NAMES))
    g = t.add_mutually_exclusive_group()
    g.add_argument("--order", type=int)
    g.add_argument("--count", type=int)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--out", help="write the table to PATH instead of stdout")
    t.set_defaults(func=cmd_table)

    ls = sub.add_parser("list", help="list registered identities")
    ls.add_argument("--out", help=argparse.SUPPRESS)
    ls.set_defaults(func=cmd_list)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO() if args.out else sys.stdout
    try:
        code = args.func(args, buf)
    except UsageError as e:
        print(f"qhecke: error: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
