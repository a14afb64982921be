"""Compare two partition tests for completing forests against the extension search.

The exact test counts, for each forest, how many blocks of P it merges (its
rank in G/P). The raw test counts its crossing edges instead, which can
overstate progress once t >= 2. Prints mismatch counts for both and the
smallest raw-test counterexample found.
"""

import argparse
import random

import numpy as np

from antiramsey.generators import erdos_renyi, random_forest_family, uniform_coloring
from antiramsey.io import serialize_forests, serialize_graph
from antiramsey.partitions import partition_batches
from antiramsey.rainbow import extension_feasible, extension_sides, find_color_disjoint_extension


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-edges", type=int, default=16)
    ap.add_argument("--max-t", type=int, default=3)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    exact_bad = raw_bad = 0
    smallest = None
    done = 0
    while done < args.instances:
        G = erdos_renyi(rng, rng.randint(2, args.max_n), rng.uniform(0.4, 1.0),
                        mult=rng.randint(1, 4), max_edges=args.max_edges)
        if G.m == 0:
            continue
        G = uniform_coloring(rng, G, rng.randint(1, G.m))
        F = random_forest_family(rng, G, rng.randint(1, args.max_t), attempts=rng.randint(0, 3 * G.m))
        truth = find_color_disjoint_extension(G, F)[0]
        exact_bad += extension_feasible(G, F).extendable != truth
        labels = np.concatenate([b.labels for b in partition_batches(G.n)])
        lhs, rhs = extension_sides(G, F, labels, literal=True)
        if bool((lhs >= rhs).all()) != truth:
            raw_bad += 1
            if smallest is None or G.m < smallest[0].m:
                smallest = (G, F)
        done += 1

    print(f"instances: {done}")
    print(f"exact test mismatches: {exact_bad}")
    print(f"raw crossing-count test mismatches: {raw_bad}")
    if smallest:
        G, F = smallest
        print("\nsmallest raw-test counterexample:")
        print(serialize_graph(G), end="")
        print("forests:")
        print(serialize_forests(F), end="")
    return 1 if exact_bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
