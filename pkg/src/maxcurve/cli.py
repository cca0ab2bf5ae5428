"""maxcurve command line.

Exit codes: 0 success, 1 mathematical mismatch, 2 usage or resource error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Optional, Sequence

from . import audit, bounds
from .counting import BudgetExceeded
from .curves import family_facts, family_genus, family_instances, parse_family
from .field_core import is_prime_power
from .semigroups import (
    nongaps_from_orders,
    orders_from_nongaps,
    semigroup_from_generators,
    semigroup_genus,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
BOUNDS_COLUMNS = ("q", "r", "c0", "eps", "c1", "eps1", "ihara", "ft1", "third")


class UsageError(ValueError):
    pass


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi) + 1) if sep else range(int(lo), int(lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(rows: Sequence[dict], columns: Sequence[str], fmt: str, meta: Optional[dict] = None,
          out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        doc = {"schema_version": audit.SCHEMA_VERSION, **(meta or {}), "rows": list(rows)}
        out.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")
        return
    cells = [[_cell(r.get(c)) for c in columns] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(cells)
        out.write(buf.getvalue())
        return
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    out.write("  ".join(c.rjust(w) for c, w in zip(columns, widths)) + "\n")
    for row in cells:
        out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)) + "\n")
    for key, val in (meta or {}).items():
        out.write(f"# {key}: {_cell(val)}\n")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return ";".join(map(str, v))
    if isinstance(v, dict):
        return ";".join(f"{k}={_cell(x)}" for k, x in v.items())
    return str(v)


def _config(args) -> audit.Config:
    return audit.Config.from_env(budget=args.budget, q_cap=args.q_cap, format=args.format, workers=args.workers)


# -- commands ------------------------------------------------------------------


def cmd_verify(args) -> int:
    cfg = _config(args)
    families = [parse_family(s) for s in args.family or []]
    for q in args.sweep or []:
        if is_prime_power(q) and q <= cfg.q_cap:
            families += family_instances(q)
    if not families:
        raise UsageError("give --family or --sweep")
    rows = [row for f in families for row in audit.verify_family(f, args.k, cfg)]
    bad = [r for r in rows if not r.ok]
    _emit([r.to_dict() for r in rows],
          ("family", "k", "affine", "at_infinity", "observed", "expected", "ok"), cfg.format,
          {"result": "FAIL" if bad else "PASS"})
    for r in bad:
        print(f"MISMATCH {r.family} k={r.k}: observed {r.observed}, expected {r.expected}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_spectrum(args) -> int:
    cfg = _config(args)
    report = audit.spectrum_audit(args.q)
    rows = [r.to_dict() for r in report.records if args.all or r.status != "possible" or r.notable]
    meta = {"q": args.q, "summary": report.summary(), "possible": report.possible}
    columns = ("q", "g", "status", "trichotomy", "max_count", "conjecture", "known_examples", "families", "notes")
    _emit(rows, columns, cfg.format, meta)
    return EXIT_OK


def cmd_bounds(args) -> int:
    cfg = _config(args)
    qs = list(args.sweep) if args.sweep else ([args.q] if args.q is not None else [])
    if not qs:
        raise UsageError("give --q or --sweep")
    rs = args.r or list(audit.CONJECTURE_RS)
    rows = []
    for q in qs:
        if not is_prime_power(q):
            if args.sweep:
                continue
            raise UsageError(f"q={q} is not a prime power")
        for r in rs:
            if r > q + 1:
                continue
            rep = bounds.BoundReport(q, r, args.g)
            rows.append(rep.to_dict())
    columns = BOUNDS_COLUMNS + (("g", "trichotomy", "conjecture_excludes") if args.g is not None else ())
    _emit(rows, columns, cfg.format)
    return EXIT_OK


def cmd_semigroup(args) -> int:
    cfg = _config(args)
    if args.family:
        f = parse_family(args.family)
        gens = family_facts(f).semigroup_gens
        if gens is None:
            raise UsageError(f"no certified semigroup generators for {f.id}")
    elif args.gens:
        gens = tuple(args.gens)
    else:
        raise UsageError("give --gens or --family")
    s = semigroup_from_generators(gens)
    row = {"generators": list(s.generators), "genus": semigroup_genus(s), "conductor": s.conductor,
           "frobenius_number": s.frobenius_number, "gaps": s.gaps()}
    columns = ["generators", "genus", "conductor", "frobenius_number", "gaps"]
    status = EXIT_OK
    if args.q is not None and args.N is not None:
        nongaps = s.nongaps(args.N + 1)
        orders = orders_from_nongaps(args.q, nongaps, args.N)
        round_trip = nongaps_from_orders(args.q, orders.values).values == nongaps
        row.update(nongaps=list(nongaps), orders=list(orders.values), round_trip=round_trip)
        columns += ["nongaps", "orders", "round_trip"]
        status = EXIT_OK if round_trip else EXIT_MISMATCH
    _emit([row], columns, cfg.format)
    return status


def cmd_count(args) -> int:
    cfg = _config(args)
    f = parse_family(args.family)
    rows = [r.to_dict() for r in audit.verify_family(f, args.k, cfg)]
    columns = ["family", "k", "affine", "at_infinity", "observed", "expected", "ok"]
    if f.kind.startswith("r32"):
        for row in rows:
            plane, residual = audit.plane_model_residual(f, row["k"], cfg)
            row.update(plane_model=plane, residual=residual)
        columns += ["plane_model", "residual"]
    _emit(rows, columns, cfg.format, {"genus": family_genus(f)})
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_MISMATCH


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=audit.FORMATS, default=None, help="output format (default text)")
    common.add_argument("--budget", type=lambda s: int(float(s)), default=None,
                        help="element-operation cap (default $MAXCURVE_BUDGET or 1e9)")
    common.add_argument("--q-cap", type=int, default=None, help="largest q allowed for point counts")
    common.add_argument("--workers", type=int, default=None, help="threads for generic counting")

    p = argparse.ArgumentParser(prog="maxcurve", description="Maximal curves over F_{q^2}: counts, bounds, spectra.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="check maximality and the extension law")
    v.add_argument("--family", action="append", help="family id, e.g. as:q=7,m=4 (repeatable)")
    v.add_argument("--sweep", type=_int_range, help="all families for q in LO..HI")
    v.add_argument("--k", type=int, default=1, help="check k = 1..K")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("spectrum", parents=[common], help="audit every genus for one q")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--all", action="store_true", help="list unremarkable genera too")
    s.set_defaults(func=cmd_spectrum)

    b = sub.add_parser("bounds", parents=[common], help="Castelnuovo/Halphen table")
    b.add_argument("--q", type=int)
    b.add_argument("--r", type=_int_list, help="comma-separated r values (default 3,4,5,6)")
    b.add_argument("--g", type=int, help="also classify this genus")
    b.add_argument("--sweep", type=_int_range, help="q in LO..HI (prime powers only)")
    b.set_defaults(func=cmd_bounds)

    g = sub.add_parser("semigroup", parents=[common], help="gaps and order duality of a numerical semigroup")
    g.add_argument("--gens", type=_int_list)
    g.add_argument("--family")
    g.add_argument("--q", type=int)
    g.add_argument("--N", type=int)
    g.set_defaults(func=cmd_semigroup)

    c = sub.add_parser("count", parents=[common], help="point counts of one family")
    c.add_argument("--family", required=True)
    c.add_argument("--k", type=int, default=1)
    c.set_defaults(func=cmd_count)
    return p


def main(argv: Optional[Iterable[str]] = None) -> int:
    args = build_parser().parse_args(None if argv is None else list(argv))
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OverflowError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
