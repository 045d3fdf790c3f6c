from fractions import Fraction

from hypothesis import strategies as st

from hyperbinomial.poly import X, Poly
from hyperbinomial.triangle import Params

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
nonneg_rationals = st.fractions(min_value=0, max_value=4, max_denominator=6)
nonzero_rationals = rationals.filter(lambda q: q != 0)


def params(alpha_prime=rationals, beta=rationals, beta_prime=rationals, alpha=rationals, gamma=rationals, gamma_prime=rationals):
    return st.builds(Params, alpha, beta, gamma, alpha_prime, beta_prime, gamma_prime)


def random_fraction(rng, lo=-4, hi=4, max_den=6):
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def build_known_roots(rng, max_degree=8):
    """Product of random linear factors (known roots) and irreducible quadratics."""
    p = Poly([rng.choice([1, -1, 2, Fraction(1, 3)])])
    roots = []
    deg, target = 0, rng.randint(1, max_degree)
    while deg < target:
        if deg + 2 <= max_degree and rng.random() < 0.4:
            # (x - m)^2 + s, s > 0
            m = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            s = Fraction(rng.randint(1, 9), rng.randint(1, 4))
            p = p * ((X - m) ** 2 + s)
            deg += 2
        else:
            r = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            if roots and rng.random() < 0.2:
                r = rng.choice(roots)
            roots.append(r)
            p = p * (X - r)
            deg += 1
    return p, sorted(set(roots)), deg
