"""Count every catalogued family for a range of q and compare with the maximal count.

    python3 scripts/maximality_sweep.py --q 2..13 --method generic --k 1
"""

import argparse
import time

from maxcurve.counting import count_curve, predicted_extension_count
from maxcurve.curves import family_genus, family_instances
from maxcurve.field_core import is_prime_power


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", default="2..13", help="LO..HI")
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--method", choices=("auto", "generic", "additive"), default="auto")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    lo, _, hi = args.q.partition("..")
    qs = [q for q in range(int(lo), int(hi or lo) + 1) if is_prime_power(q)]

    bad = 0
    t0 = time.perf_counter()
    print(f"{'family':<22}{'k':>3}{'observed':>12}{'expected':>12}")
    for q in qs:
        for f in family_instances(q):
            method = args.method
            if method == "additive" and f.kind not in ("hermitian", "as", "even-trace", "r32iii"):
                method = "generic"
            got = count_curve(f, args.k, method=method, workers=args.workers, q_cap=max(qs)).total
            want = predicted_extension_count(q, family_genus(f), args.k)
            bad += got != want
            print(f"{f.id:<22}{args.k:>3}{got:>12}{want:>12}{'' if got == want else '  MISMATCH'}")
    print(f"{bad} mismatches, {time.perf_counter() - t0:.1f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
