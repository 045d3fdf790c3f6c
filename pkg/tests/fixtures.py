"""Hand-transcribed reference polynomials."""

# {4||2} with all six parameters free: (coefficient, exponents of alpha, beta, gamma, alpha', beta', gamma')
GBC_4_2_GENERAL = [
    (18, (1, 0, 1, 2, 0, 0)),
    (7, (0, 1, 1, 2, 0, 0)),
    (11, (0, 0, 2, 2, 0, 0)),
    (18, (2, 0, 0, 1, 1, 0)),
    (29, (1, 1, 0, 1, 1, 0)),
    (11, (0, 2, 0, 1, 1, 0)),
    (51, (1, 0, 1, 1, 1, 0)),
    (29, (0, 1, 1, 1, 1, 0)),
    (22, (0, 0, 2, 1, 1, 0)),
    (22, (2, 0, 0, 0, 2, 0)),
    (36, (1, 1, 0, 0, 2, 0)),
    (14, (0, 2, 0, 0, 2, 0)),
    (36, (1, 0, 1, 0, 2, 0)),
    (24, (0, 1, 1, 0, 2, 0)),
    (12, (0, 0, 2, 0, 2, 0)),
    (18, (2, 0, 0, 1, 0, 1)),
    (29, (1, 1, 0, 1, 0, 1)),
    (11, (0, 2, 0, 1, 0, 1)),
    (44, (1, 0, 1, 1, 0, 1)),
    (26, (0, 1, 1, 1, 0, 1)),
    (18, (0, 0, 2, 1, 0, 1)),
    (33, (2, 0, 0, 0, 1, 1)),
    (54, (1, 1, 0, 0, 1, 1)),
    (21, (0, 2, 0, 0, 1, 1)),
    (54, (1, 0, 1, 0, 1, 1)),
    (36, (0, 1, 1, 0, 1, 1)),
    (18, (0, 0, 2, 0, 1, 1)),
    (11, (2, 0, 0, 0, 0, 2)),
    (18, (1, 1, 0, 0, 0, 2)),
    (7, (0, 2, 0, 0, 0, 2)),
    (18, (1, 0, 1, 0, 0, 2)),
    (12, (0, 1, 1, 0, 0, 2)),
    (6, (0, 0, 2, 0, 0, 2)),
]


def gbc_4_2_general(p):
    vals = p.as_tuple()
    total = 0
    for coeff, exps in GBC_4_2_GENERAL:
        term = coeff
        for v, e in zip(vals, exps):
            term *= v**e
        total += term
    return total


def gbc_4_2_factored(p):
    """{4||2} when alpha' = 0."""
    a, b, c, _, bp, cp = p.as_tuple()
    first = 11 * a**2 + 18 * a * b + 7 * b**2 + 18 * a * c + 12 * b * c + 6 * c**2
    return first * (bp + cp) * (2 * bp + cp)


# Q_0 .. Q_7 for n = 5, ascending coefficients
QK_N5 = [
    [1, 0, 0, 0, 0, -1],
    [1, 0, 0, 0, -5, 4],
    [1, 0, 0, -10, 15, -6],
    [1, 0, -10, 20, -15, 4],
    [1, -5, 10, -10, 5, -1],
    [],
    [],
    [],
]
