"""Seeded random generators shared by the test modules.

All samples are exact rational matrices.  Conjugation uses products of
integer shear matrices, so inverses are exact and determinants are 1.
"""

from __future__ import annotations

import random
from fractions import Fraction

from lieorbits import linalg
from lieorbits.orbits import Partition, jordan_matrix, partitions
from lieorbits.sln import SlnElement


def rand_traceless(rng: random.Random, n: int, bound: int = 4) -> SlnElement:
    """Random traceless matrix with small integer or half-integer entries."""
    rows = [[Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 2))) for _ in range(n)] for _ in range(n)]
    rows[n - 1][n - 1] -= sum(rows[i][i] for i in range(n))
    return SlnElement.from_rows(rows)


def rand_unimodular(rng: random.Random, n: int, shears: int | None = None):
    """A product of integer shears and its exact inverse."""
    g = linalg.identity(n)
    gi = linalg.identity(n)
    for _ in range(shears if shears is not None else 2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        c = rng.randint(-2, 2)
        if i == j or c == 0:
            continue
        e = linalg.identity(n)
        e[i][j] = Fraction(c)
        einv = linalg.identity(n)
        einv[i][j] = Fraction(-c)
        g = linalg.mat_mul(g, e)
        gi = linalg.mat_mul(einv, gi)
    return g, gi


def conjugate(g, gi, x: SlnElement) -> SlnElement:
    return SlnElement.from_rows(linalg.mat_mul(g, linalg.mat_mul(x.to_matrix(), gi)))


def rand_partition(rng: random.Random, n: int) -> Partition:
    return rng.choice(partitions(n))


def rand_nilpotent(rng: random.Random, n: int) -> SlnElement:
    """Random conjugate of a random Jordan-type nilpotent."""
    g, gi = rand_unimodular(rng, n)
    return conjugate(g, gi, jordan_matrix(rand_partition(rng, n)))


def rand_rational_spectrum(rng: random.Random, n: int) -> SlnElement:
    """Random conjugate of an upper-triangular matrix with small integer spectrum."""
    diag = [rng.randint(-2, 2) for _ in range(n - 1)]
    diag.append(-sum(diag))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(diag[i])
        for j in range(i + 1, n):
            rows[i][j] = Fraction(rng.randint(-1, 1))
    g, gi = rand_unimodular(rng, n)
    return conjugate(g, gi, SlnElement.from_rows(rows))


def rand_jordan_type(rng: random.Random, n: int) -> SlnElement:
    """Random conjugate of a matrix with repeated eigenvalues and nilpotent blocks."""
    lam = rand_partition(rng, n)
    values = []
    pool = [-1, 0, 1, 2]
    rows = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for p in lam.parts:
        v = rng.choice(pool)
        values.extend([v] * p)
        for i in range(p - 1):
            rows[off + i][off + i + 1] = Fraction(1)
        off += p
    shift = Fraction(sum(values), n)
    off = 0
    for i in range(n):
        rows[i][i] = Fraction(values[i]) - shift
    g, gi = rand_unimodular(rng, n)
    return conjugate(g, gi, SlnElement.from_rows(rows))
