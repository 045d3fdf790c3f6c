"""Relative error of the truncated row-sum series against the exact row sum.

    python scripts/rowsum_convergence.py --params 1,2,1,0,1,2 --n 4
"""

import argparse

import mpmath

from hyperbinomial.closed_form import row_sum_series_sum
from hyperbinomial.triangle import Params, compute_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--params", type=Params.parse, default=Params.of(1, 2, 1, 0, 1, 2))
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--bits", type=int, default=256)
    ap.add_argument("--terms", type=int, nargs="+", default=[10, 25, 50, 100, 200, 400])
    args = ap.parse_args()

    exact = compute_table(args.params, args.n).row_sum(args.n)
    print(f"params {args.params}, n = {args.n}, exact row sum {exact}")
    print(f"{'J':>6} {'rel. error':>14} {'last term':>14}")
    with mpmath.workprec(args.bits):
        ref = mpmath.mpf(exact.numerator) / exact.denominator
        for J in args.terms:
            res = row_sum_series_sum(args.params, args.n, J, args.bits)
            rel = abs(res.value / ref - 1)
            print(f"{J:>6} {mpmath.nstr(rel, 4):>14} {mpmath.nstr(res.last_term, 4):>14}")


if __name__ == "__main__":
    main()
