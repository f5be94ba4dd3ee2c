"""Tests for the concrete traceless-matrix algebra.

Invariance properties are asserted on the generating invariants (the
characteristic coefficients); since the invariant ring is freely generated
by them, equality on the generators settles equality for every invariant
polynomial.  That reduction is relied on throughout this module.
"""

import random
from fractions import Fraction

import pytest

from helpers import conjugate, rand_jordan_type, rand_nilpotent, rand_traceless, rand_unimodular
from lieorbits import linalg
from lieorbits.sln import (
    IrrationalSpectrumError,
    SlnElement,
    ad_matrix,
    basis_matrices,
    bracket,
    centralizer_dim,
    invariants_phi,
    is_nilpotent,
    is_semisimple,
    jordan_chevalley,
    killing,
    kks_form,
    kks_matrix,
    matrix_from_json,
    matrix_to_json,
    orbit_dim,
    same_orbit,
    trace_power,
)

X = SlnElement.from_rows([[0, 1], [0, 0]])
H = SlnElement.from_rows([[1, 0], [0, -1]])
Y = SlnElement.from_rows([[0, 0], [1, 0]])


def E(n, i, j):
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = 1
    return SlnElement.from_rows(rows)


def test_element_validation():
    with pytest.raises(ValueError):
        SlnElement.from_rows([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        SlnElement.from_rows([[0, 1], [0, 0], [0, 0]])
    with pytest.raises(ValueError):
        bracket(X, SlnElement.zero(3))


def test_bracket_examples():
    assert bracket(X, Y).entries == H.entries
    assert bracket(X, X).is_zero()
    assert bracket(E(3, 1, 2), E(3, 2, 3)).entries == E(3, 1, 3).entries


def test_bracket_properties_random():
    rng = random.Random(41)
    for _ in range(30):
        n = rng.randint(2, 4)
        x, y, z = (rand_traceless(rng, n) for _ in range(3))
        assert bracket(x, y).entries == (-bracket(y, x)).entries
        jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert jacobi.is_zero()
        # invariance of the Killing form
        assert killing(bracket(z, x), y) + killing(x, bracket(z, y)) == 0


def test_killing_examples():
    assert killing(H, H) == 8
    assert killing(X, X) == 0
    assert killing(X, Y) == 4


def test_killing_normalization_oracle():
    # trace(ad_x ad_y) must equal 2n trace(xy), exactly
    rng = random.Random(43)
    for _ in range(20):
        n = rng.randint(2, 4)
        x, y = rand_traceless(rng, n), rand_traceless(rng, n)
        prod = linalg.mat_mul(ad_matrix(x), ad_matrix(y))
        assert linalg.mat_trace(prod) == killing(x, y)


def test_ad_matrix_examples():
    assert ad_matrix(SlnElement.zero(2)) == linalg.zeros(3, 3)
    # fixed basis order (E_12, E_21, diag): ad_H is diagonal with (2, -2, 0)
    assert ad_matrix(H) == [[2, 0, 0], [0, -2, 0], [0, 0, 0]]


def test_centralizer_and_orbit_dims():
    assert centralizer_dim(SlnElement.zero(3)) == 8
    assert centralizer_dim(X) == 1
    for n in (2, 3, 4, 5):
        reg = SlnElement.from_rows([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])
        assert centralizer_dim(reg) == n - 1
    assert orbit_dim(SlnElement.zero(4)) == 0
    reg4 = SlnElement.from_rows([[1 if j == i + 1 else 0 for j in range(4)] for i in range(4)])
    assert orbit_dim(reg4) == 12
    assert orbit_dim(E(3, 1, 2)) == 4


def test_centralizer_lower_bound_and_regularity():
    rng = random.Random(47)
    for _ in range(25):
        n = rng.randint(2, 4)
        x = rng.choice((rand_traceless, rand_nilpotent, rand_jordan_type))(rng, n)
        c = centralizer_dim(x)
        assert c >= n - 1
        assert (c == n - 1) == (orbit_dim(x) == (n * n - 1) - (n - 1))


def test_nilpotent_semisimple_tests():
    assert is_nilpotent(X) and not is_semisimple(X)
    assert is_semisimple(H) and not is_nilpotent(H)
    z = SlnElement.zero(2)
    assert is_nilpotent(z) and is_semisimple(z)
    for a in range(-2, 3):
        for b in range(-2, 3):
            for c in range(-2, 3):
                m = SlnElement.from_rows([[a, b], [c, -a]])
                assert is_nilpotent(m) == (a * a + b * c == 0)


def test_jordan_chevalley_examples():
    jp = jordan_chevalley(X)
    assert jp.semisimple_part.is_zero() and jp.nilpotent_part.entries == X.entries
    jp = jordan_chevalley(H)
    assert jp.semisimple_part.entries == H.entries and jp.nilpotent_part.is_zero()
    x = SlnElement.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, -2]])
    jp = jordan_chevalley(x)
    assert jp.semisimple_part.entries == SlnElement.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, -2]]).entries
    assert jp.nilpotent_part.entries == E(3, 1, 2).entries


def check_jordan_properties(x):
    jp = jordan_chevalley(x)
    xs, xn = jp.semisimple_part, jp.nilpotent_part
    assert is_semisimple(xs)
    assert is_nilpotent(xn)
    assert (xs + xn).entries == x.entries
    assert bracket(xs, xn).is_zero()
    assert linalg.poly_eval_matrix(list(jp.semisimple_witness), x.to_matrix()) == xs.to_matrix()
    assert linalg.poly_eval_matrix(list(jp.nilpotent_witness), x.to_matrix()) == xn.to_matrix()
    return jp


def test_jordan_chevalley_random_and_idempotent():
    rng = random.Random(53)
    for _ in range(40):
        n = rng.randint(2, 5)
        x = rng.choice((rand_traceless, rand_jordan_type))(rng, n)
        jp = check_jordan_properties(x)
        again = jordan_chevalley(jp.semisimple_part)
        assert again.semisimple_part.entries == jp.semisimple_part.entries
        assert again.nilpotent_part.is_zero()


def test_phi_examples_and_invariance():
    assert invariants_phi(X) == (Fraction(0),)
    assert invariants_phi(H) == (Fraction(-1),)
    rng = random.Random(59)
    for _ in range(25):
        n = rng.randint(2, 4)
        x = rand_jordan_type(rng, n)
        jp = jordan_chevalley(x)
        assert invariants_phi(x) == invariants_phi(jp.semisimple_part)
        g, gi = rand_unimodular(rng, n)
        assert invariants_phi(conjugate(g, gi, x)) == invariants_phi(x)


def test_phi_zero_iff_nilpotent():
    rng = random.Random(61)
    for _ in range(40):
        n = rng.randint(2, 5)
        x = rng.choice((rand_traceless, rand_nilpotent))(rng, n)
        assert is_nilpotent(x) == all(c == 0 for c in invariants_phi(x))


def test_trace_power():
    assert trace_power(SlnElement.zero(3), 2) == 0
    assert trace_power(H, 2) == 8
    rng = random.Random(67)
    for n in (2, 3):
        x = rand_nilpotent(rng, n)
        for k in range(1, 2 * n + 1):
            assert trace_power(x, k) == 0
    with pytest.raises(ValueError):
        trace_power(H, 0)


def test_same_orbit_examples():
    rng = random.Random(71)
    for n in (2, 3, 4):
        x = rand_nilpotent(rng, n)
        if x.is_zero():
            continue
        assert same_orbit(x, 3 * x)
        assert same_orbit(x, Fraction(-1, 2) * x)
    assert same_orbit(SlnElement.from_rows([[1, 0], [0, -1]]), SlnElement.from_rows([[-1, 0], [0, 1]]))
    assert same_orbit(E(3, 1, 2), E(3, 1, 3))
    assert not same_orbit(X, H)
    assert not same_orbit(E(3, 1, 2), SlnElement.zero(3))
    with pytest.raises(IrrationalSpectrumError):
        same_orbit(SlnElement.from_rows([[0, 2], [1, 0]]), H)


def test_same_orbit_dilation_of_nilpotent_part():
    rng = random.Random(73)
    for _ in range(20):
        n = rng.randint(2, 4)
        x = rand_jordan_type(rng, n)
        jp = jordan_chevalley(x)
        for a in (Fraction(2), Fraction(-1), Fraction(1, 3)):
            y = jp.semisimple_part + a * jp.nilpotent_part
            assert same_orbit(x, y)


def test_kks_examples():
    assert kks_form(H, X, X) == 0
    assert kks_form(H, X, Y) == 8
    assert kks_form(H, X, Y) == -kks_form(H, Y, X)
    # centralizer elements are in the radical of the pairing
    x = E(3, 1, 2)
    kernel = linalg.nullspace(ad_matrix(x))
    basis = [SlnElement.from_rows(b) for b in basis_matrices(3)]
    for v in kernel:
        y = SlnElement.zero(3)
        for c, b in zip(v, basis):
            y = y + c * b
        for b in basis:
            assert kks_form(x, y, b) == 0


def test_kks_matrix_rank_and_radical():
    rng = random.Random(79)
    basis_cache = {}
    for _ in range(9):
        n = rng.randint(2, 3)
        x = rng.choice((rand_traceless, rand_nilpotent, rand_jordan_type))(rng, n)
        m = kks_matrix(x)
        basis = basis_cache.setdefault(n, [SlnElement.from_rows(b) for b in basis_matrices(n)])
        # entry honesty against the three-argument form
        for i in (0, len(basis) - 1):
            for j in (0, len(basis) - 1):
                assert m[i][j] == kks_form(x, basis[i], basis[j])
        ad = ad_matrix(x)
        assert linalg.rank(m) == orbit_dim(x)
        for v in linalg.nullspace(m):
            assert all(c == 0 for c in linalg.mat_vec(ad, v))
        assert len(linalg.nullspace(m)) == centralizer_dim(x)


def test_matrix_json_round_trip():
    x = SlnElement.from_rows([[Fraction(1, 2), 1], [0, Fraction(-1, 2)]])
    d = matrix_to_json(x)
    assert d == {"n": 2, "entries": [["1/2", "1"], ["0", "-1/2"]]}
    assert matrix_from_json(d).entries == x.entries
    with pytest.raises(ValueError):
        matrix_from_json({"n": 3, "entries": [["0", "0"], ["0", "0"]]})
