import sympy
from sympy.polys.galoistools import gf_add, gf_mul, gf_rem

from sympmember import GroupParams, Matrix, field_make

# the acceptance grid
GRID = ([(n, q) for n in (1, 2, 3) for q in (3, 5, 7, 9)]
        + [(2, q) for q in (11, 13, 25, 27)] + [(4, 3)])

FIELD_QS = (3, 5, 7, 9, 11, 13, 25, 27)


def field_for(q):
    (p, k), = sympy.factorint(q).items()
    return field_make(p, k)


def params_for(n, q):
    return GroupParams(n, field_for(q))


# -- independent field oracle: sympy polynomial arithmetic --------------------------


def to_poly(F, a):
    """Encoding -> sympy dense poly (high degree first)."""
    c = [(a // F.p**i) % F.p for i in range(F.k)]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return list(reversed(c)) if any(c) else []


def from_poly(F, poly):
    return sum(int(c) * F.p**i for i, c in enumerate(reversed(poly)))


def ref_mul(F, a, b):
    mod = list(reversed(F.modulus))
    return from_poly(F, gf_rem(gf_mul(to_poly(F, a), to_poly(F, b), F.p, sympy.ZZ),
                               mod, F.p, sympy.ZZ))


def ref_add(F, a, b):
    return from_poly(F, gf_add(to_poly(F, a), to_poly(F, b), F.p, sympy.ZZ))


# -- natural matrices from basis images ---------------------------------------------


def pos_e(i, n):
    return i - 1


def pos_f(i, n):
    return 2 * n - i


def from_images(F, n, images):
    """Matrix whose row for each listed basis position is the given image.

    ``images`` maps a 0-based position to {position: coefficient} where
    coefficients are plain ints (reduced into GF(p)) or field encodings.
    """
    d = 2 * n
    rows = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for src, img in images.items():
        rows[src] = [0] * d
        for dst, c in img.items():
            rows[src][dst] = c % F.p if c < 0 else c
    return Matrix.from_entries(F, rows)


def ref_matmul(a, b):
    """Schoolbook product through field ops."""
    F, d = a.field, a.dim
    A, B = a.entries, b.entries
    out = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            acc = 0
            for k in range(d):
                acc = F.add(acc, F.mul(int(A[i, k]), int(B[k, j])))
            out[i][j] = acc
    return Matrix.from_entries(F, out)


def q_element(F, n, coords):
    """Q-element with row 1 equal to e_1 + sum coords[j] * b_j, j = 2..2n.

    ``coords`` lists the field encodings at positions 2..2n (1-based).
    Other rows: e_i -> e_i + beta_i f_1, f_i -> f_i - alpha_i f_1, where
    alpha_i / beta_i are the e_i / f_i coordinates of row 1.
    """
    d = 2 * n
    rows = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    rows[0] = [1] + list(coords)
    for i in range(2, n + 1):
        alpha = rows[0][pos_e(i, n)]
        beta = rows[0][pos_f(i, n)]
        rows[pos_e(i, n)][d - 1] = beta
        rows[pos_f(i, n)][d - 1] = F.neg(alpha)
    return Matrix.from_entries(F, rows)


# -- acceptance report ------------------------------------------------------------------

ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
