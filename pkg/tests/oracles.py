"""Independent brute-force oracles and random generators used by the tests.

Everything here loops densely over all index tuples and touches the library only
through ``T[i, j, k]`` lookups and scalar arithmetic.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from hopfconst.linalg import is_invertible
from hopfconst.scalars import CyclotomicField, PrimeField


def green_table(P):
    """Every (i, j, k1, k2) with both sides of the compatibility identity, 8-index loops."""
    n, F, G, zero = P.dim, P.F, P.G, P.field.zero
    out = {}
    for i, j, k1, k2 in product(range(n), repeat=4):
        lhs = zero
        for l in range(n):
            lhs = lhs + F[i, j, l] * G[k1, k2, l]
        rhs = zero
        for a, b, c, d in product(range(n), repeat=4):
            rhs = rhs + G[a, b, i] * G[c, d, j] * F[a, c, k1] * F[b, d, k2]
        out[(i, j, k1, k2)] = (lhs, rhs)
    return out


def associativity_failures(F):
    n, zero = F.dim, F.field.zero
    bad = []
    for i, j, k, m in product(range(n), repeat=4):
        left = sum((F[i, j, l] * F[l, k, m] for l in range(n)), zero)
        right = sum((F[j, k, l] * F[i, l, m] for l in range(n)), zero)
        if left != right:
            bad.append((i, j, k, m))
    return bad


def unit_holds(F, lam):
    n, zero = F.dim, F.field.zero
    for i, m in product(range(n), repeat=2):
        want = F.field.one if i == m else zero
        left = sum((lam[l] * F[l, i, m] for l in range(n)), zero)
        right = sum((lam[l] * F[i, l, m] for l in range(n)), zero)
        if left != want or right != want:
            return False
    return True


def diamond_simple(F):
    n, zero = F.dim, F.field.zero
    out = {}
    for i, j, k in product(range(n), repeat=3):
        s = zero
        for a, b, c in product(range(n), repeat=3):
            s = s + F[a, c, j] * F[c, b, i] * F[b, a, k]
        out[(i, j, k)] = s
    return out


def diamond_general(P, S):
    n, F, G, zero = P.dim, P.F, P.G, P.field.zero
    out = {}
    for i, j, k in product(range(n), repeat=3):
        s = zero
        for y1, y2, x, z in product(range(n), repeat=4):
            s = s + S[y1][y2] * G[y1, x, i] * G[z, y2, j] * F[x, z, k]
        out[(i, j, k)] = s
    return out


def dense(T):
    n = T.dim
    return {(i, j, k): T[i, j, k] for i, j, k in product(range(n), repeat=3)}


def random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_scalar(field, rng: random.Random):
    if isinstance(field, PrimeField):
        return field(rng.randrange(field.p))
    if isinstance(field, CyclotomicField):
        return field.from_coefficients([random_rational(rng) for _ in range(field.degree)])
    return field(random_rational(rng))


def random_matrix(field, n, rng, invertible=False, symmetric=False):
    while True:
        M = [[random_scalar(field, rng) for _ in range(n)] for _ in range(n)]
        if symmetric:
            for i in range(n):
                for j in range(i):
                    M[i][j] = M[j][i]
        M = tuple(tuple(r) for r in M)
        if not invertible or is_invertible(M):
            return M
