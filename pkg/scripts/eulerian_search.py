"""Search small integer parameter tuples whose triangle reproduces the Eulerian numbers.

Eulerian numbers are counted directly as descents over all permutations, so the
search does not assume any recurrence for them.

    python scripts/eulerian_search.py --max-n 6 --bound 2
"""

import argparse
from itertools import permutations, product

from hyperbinomial.triangle import EULERIAN, Params, compute_table


def descent_rows(max_n):
    rows = []
    for n in range(max_n + 1):
        counts = [0] * (n + 1)
        for perm in permutations(range(n)):
            counts[sum(a > b for a, b in zip(perm, perm[1:]))] += 1
        rows.append(tuple(counts))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--bound", type=int, default=2)
    args = ap.parse_args()

    target = descent_rows(args.max_n)
    rng = range(-args.bound, args.bound + 1)
    hits = []
    for tup in product(rng, repeat=6):
        table = compute_table(Params.of(*tup), args.max_n)
        if all(tuple(table.rows[n]) == target[n] for n in range(args.max_n + 1)):
            hits.append(tup)
    print(f"{len(hits)} tuple(s) in [-{args.bound}, {args.bound}]^6 match descents up to n = {args.max_n}:")
    for tup in hits:
        print("  ", tup)
    print("package constant EULERIAN =", EULERIAN, "found" if EULERIAN.as_tuple() in hits else "NOT found")


if __name__ == "__main__":
    main()
