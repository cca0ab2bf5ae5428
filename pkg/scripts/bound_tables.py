"""Write Castelnuovo/Halphen tables and the conjecture-interval check to CSV.

    python3 scripts/bound_tables.py --qmax 64 --out bounds.csv
"""

import argparse
import csv
import sys

from maxcurve.bounds import BoundReport, conjecture_interval_violations
from maxcurve.field_core import is_prime_power

COLUMNS = ("q", "r", "c0", "eps", "c1", "eps1", "castelnuovo_upper", "ihara", "ft1", "third")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qmax", type=int, default=64)
    ap.add_argument("--rs", default="2,3,4,5,6")
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    rs = [int(r) for r in args.rs.split(",")]

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.DictWriter(out, COLUMNS, extrasaction="ignore")
    w.writeheader()
    for q in range(2, args.qmax + 1):
        if is_prime_power(q):
            for r in rs:
                if r <= q + 1:
                    w.writerow(BoundReport(q, r).to_dict())
    if out is not sys.stdout:
        out.close()
    viol = conjecture_interval_violations(args.qmax, [r for r in rs if r >= 3])
    print(f"# c1 >= c0 (empty conjecture interval) at: {viol}", file=sys.stderr)


if __name__ == "__main__":
    main()
