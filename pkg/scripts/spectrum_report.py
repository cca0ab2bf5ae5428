"""Summarise the genus-spectrum audit for several q.

    python3 scripts/spectrum_report.py 2 3 4 5 7 8 9 13 16
"""

import sys

from maxcurve.audit import spectrum_audit


def main():
    qs = [int(a) for a in sys.argv[1:]] or [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    for q in qs:
        rep = spectrum_audit(q)
        s = rep.summary()
        labelled = [(r.g, r.status, ", ".join(r.notes)) for r in rep.records if r.notes]
        print(f"q={q:<3} possible={s['possible']:<4} excluded={s['excluded']:<4} "
              f"non-existent={s['non-existent']:<2} conjecturally excluded={s['conjecturally_excluded']}")
        for g, status, notes in labelled:
            print(f"      g={g:<4} {status:<13} {notes}")


if __name__ == "__main__":
    main()
