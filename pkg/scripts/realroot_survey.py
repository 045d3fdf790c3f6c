"""How often does phi_n fail to be real-rooted once beta' > 0?

Draws random nonnegative rational tuples, certifies phi_1..phi_N with exact
Sturm counts, and tabulates the share of non-real-rooted polynomials per n.
With beta' = 0 the share must be zero.

    python scripts/realroot_survey.py --samples 200 --max-n 8
"""

import argparse
import random
from fractions import Fraction

from hyperbinomial.rowpoly import phi_sequence
from hyperbinomial.sturm import certify_all_real
from hyperbinomial.triangle import Params


def draw(rng, beta_prime_zero):
    vals = [Fraction(rng.randint(0, 12), rng.randint(1, 4)) for _ in range(6)]
    if beta_prime_zero:
        vals[4] = Fraction(0)
    else:
        vals[4] = Fraction(rng.randint(1, 12), rng.randint(1, 4))
    return Params(*vals)


def survey(rng, samples, max_n, beta_prime_zero):
    bad = [0] * (max_n + 1)
    examples = {}
    for _ in range(samples):
        p = draw(rng, beta_prime_zero)
        for n, poly in enumerate(phi_sequence(p, max_n)):
            if poly.is_zero():
                continue
            if not certify_all_real(poly).all_real:
                bad[n] += 1
                examples.setdefault(n, p)
    return bad, examples


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    for zero in (True, False):
        bad, examples = survey(rng, args.samples, args.max_n, zero)
        label = "beta' = 0" if zero else "beta' > 0"
        print(f"{label}: non-real-rooted share by n")
        for n in range(1, args.max_n + 1):
            ex = f"  e.g. ({examples[n]})" if n in examples else ""
            print(f"  n={n:2d}  {bad[n]:4d}/{args.samples}{ex}")


if __name__ == "__main__":
    main()
