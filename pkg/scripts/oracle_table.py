"""Brute-force r(K_n, t) by enumerating colorings, next to the closed form."""

import argparse
import sys
import time

from antiramsey.formulas import r_complete
from antiramsey.graph import complete_graph
from antiramsey.oracle import r_oracle

PAIRS = [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args(argv)

    print(f"{'n':>2} {'t':>2} {'oracle':>7} {'formula':>8} {'kind':<18} {'secs':>6}")
    bad = 0
    for n, t in PAIRS:
        if n > args.max_n:
            continue
        start = time.perf_counter()
        res = r_oracle(complete_graph(n), t)
        secs = time.perf_counter() - start
        want = r_complete(n, t).value
        bad += res.value != want
        print(f"{n:>2} {t:>2} {res.value!s:>7} {want!s:>8} {res.kind:<18} {secs:6.2f}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
