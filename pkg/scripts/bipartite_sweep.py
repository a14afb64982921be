"""Tabulate r(K_{p,q}, t): closed form next to the explicit partition scan.

    python scripts/bipartite_sweep.py --max-side 6 --max-t 3 > sweep.csv
"""

import argparse
import csv
import sys
import time

from antiramsey.formulas import r_bipartite
from antiramsey.general import r_general
from antiramsey.graph import complete_multipartite


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-side", type=int, default=6)
    ap.add_argument("--max-t", type=int, default=3)
    ap.add_argument("--no-scan", action="store_true", help="skip the partition scan (formula only)")
    args = ap.parse_args(argv)

    out = csv.writer(sys.stdout)
    out.writerow(["p", "q", "t", "formula", "branch", "scan", "scan_seconds"])
    mismatches = 0
    for p in range(1, args.max_side + 1):
        for q in range(1, p + 1):
            if p + q > 14 and not args.no_scan:
                continue
            G = None if args.no_scan else complete_multipartite((p, q))
            for t in range(1, args.max_t + 1):
                res = r_bipartite(p, q, t)
                scan, secs = "", ""
                if G is not None and p + q >= 3:
                    start = time.perf_counter()
                    scan = r_general(G, t).value
                    secs = f"{time.perf_counter() - start:.3f}"
                    mismatches += scan != res.value
                out.writerow([p, q, t, res.value, "+".join(res.branch), scan, secs])
    if mismatches:
        print(f"{mismatches} mismatches", file=sys.stderr)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
