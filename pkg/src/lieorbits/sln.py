"""The Lie algebra of traceless n-by-n matrices over exact rationals.

Provides the bracket, the Killing form (2n times the trace form), the adjoint
operator in a fixed basis, centralizer and orbit dimensions, semisimplicity
and nilpotency tests, the Jordan decomposition, characteristic-polynomial
invariants, a conjugacy test for rational spectra, and the orbit symplectic
pairing.  All arithmetic is exact; there is no floating-point mode.

The fixed basis is: the elementary matrices E_ij with i != j in row-major
order, followed by the n-1 consecutive diagonal differences E_ii - E_(i+1)(i+1).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import Matrix, Poly


class IrrationalSpectrumError(ValueError):
    """Raised when an operation needs rational eigenvalues and they are not."""


@dataclass(frozen=True)
class SlnElement:
    """An n-by-n matrix of exact rationals with zero trace."""

    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"entries must form an {self.n}x{self.n} matrix")
        tr = sum((self.entries[i][i] for i in range(self.n)), Fraction(0))
        if tr != 0:
            raise ValueError(f"trace must be zero, got {tr}")

    @classmethod
    def from_rows(cls, rows) -> "SlnElement":
        entries = tuple(tuple(linalg.frac(x) for x in row) for row in rows)
        return cls(n=len(entries), entries=entries)

    @classmethod
    def zero(cls, n: int) -> "SlnElement":
        return cls.from_rows([[0] * n for _ in range(n)])

    def to_matrix(self) -> Matrix:
        return [list(row) for row in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __add__(self, other: "SlnElement") -> "SlnElement":
        _same_n(self, other)
        return SlnElement.from_rows(linalg.mat_add(self.to_matrix(), other.to_matrix()))

    def __sub__(self, other: "SlnElement") -> "SlnElement":
        _same_n(self, other)
        return SlnElement.from_rows(linalg.mat_sub(self.to_matrix(), other.to_matrix()))

    def __rmul__(self, scalar) -> "SlnElement":
        return SlnElement.from_rows(linalg.mat_scale(self.to_matrix(), scalar))

    def __neg__(self) -> "SlnElement":
        return SlnElement.from_rows(linalg.mat_scale(self.to_matrix(), -1))


@dataclass(frozen=True)
class JordanPair:
    """Semisimple plus nilpotent split of an element, with polynomial witnesses.

    Both parts are polynomials in the input; the stored witness coefficient
    lists (lowest degree first) evaluate on the input to the respective part.
    """

    semisimple_part: SlnElement
    nilpotent_part: SlnElement
    semisimple_witness: tuple[Fraction, ...]
    nilpotent_witness: tuple[Fraction, ...]


def _same_n(x: SlnElement, y: SlnElement):
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")


def elementary(n: int, i: int, j: int) -> Matrix:
    m = linalg.zeros(n, n)
    m[i][j] = Fraction(1)
    return m


def basis_matrices(n: int) -> list[Matrix]:
    """The fixed basis of the traceless matrices, as plain matrices."""
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append(elementary(n, i, j))
    for i in range(n - 1):
        m = linalg.zeros(n, n)
        m[i][i] = Fraction(1)
        m[i + 1][i + 1] = Fraction(-1)
        out.append(m)
    return out


def coords_in_basis(m: Matrix) -> list[Fraction]:
    """Coordinates of a traceless matrix over the fixed basis."""
    n = len(m)
    out = [m[i][j] for i in range(n) for j in range(n) if i != j]
    acc = Fraction(0)
    for i in range(n - 1):
        acc += m[i][i]
        out.append(acc)
    return out


def bracket(x: SlnElement, y: SlnElement) -> SlnElement:
    """The commutator xy - yx."""
    _same_n(x, y)
    a, b = x.to_matrix(), y.to_matrix()
    return SlnElement.from_rows(linalg.mat_sub(linalg.mat_mul(a, b), linalg.mat_mul(b, a)))


def killing(x: SlnElement, y: SlnElement) -> Fraction:
    """The invariant form 2n * trace(xy)."""
    _same_n(x, y)
    n = x.n
    t = Fraction(0)
    for i in range(n):
        t += sum((x.entries[i][j] * y.entries[j][i] for j in range(n)), Fraction(0))
    return 2 * n * t


def ad_matrix(x: SlnElement) -> Matrix:
    """The matrix of y -> [x, y] over the fixed basis; (n^2-1) square."""
    cols = [coords_in_basis(bracket(x, SlnElement.from_rows(b)).to_matrix()) for b in basis_matrices(x.n)]
    dim = len(cols)
    return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def centralizer_dim(x: SlnElement) -> int:
    """Dimension of the commutant {y : [x,y] = 0}, by exact nullity of ad."""
    dim = x.n * x.n - 1
    return dim - linalg.rank(ad_matrix(x))


def orbit_dim(x: SlnElement) -> int:
    """Dimension of the conjugacy orbit: dim(g) minus the centralizer."""
    return (x.n * x.n - 1) - centralizer_dim(x)


def is_nilpotent(x: SlnElement) -> bool:
    return linalg.mat_is_zero(linalg.mat_pow(x.to_matrix(), x.n))


def _squarefree_part(p: Poly) -> Poly:
    return linalg.poly_divmod(p, linalg.poly_gcd(p, linalg.poly_deriv(p)))[0]


def is_semisimple(x: SlnElement) -> bool:
    """Diagonalizable iff the squarefree part of the characteristic polynomial kills x."""
    p = linalg.charpoly(x.to_matrix())
    q = _squarefree_part(p)
    return linalg.mat_is_zero(linalg.poly_eval_matrix(q, x.to_matrix()))


def jordan_chevalley(x: SlnElement) -> JordanPair:
    """Split x into commuting semisimple and nilpotent parts, exactly.

    Newton iteration on the squarefree part q of the characteristic
    polynomial p, carried out in the quotient ring Q[T]/(p): starting from
    the identity polynomial, iterate s -> s - q(s)*u(s), where u inverts q'
    modulo q.  Since q(x) is nilpotent, ceil(log2 n) + 1 rounds reach an
    exact fixed point; evaluating the resulting polynomial at x gives the
    semisimple part, and the computation never leaves the rationals.
    """
    a = x.to_matrix()
    n = x.n
    p = linalg.charpoly(a)
    q = _squarefree_part(p)
    _, u, _ = linalg.poly_xgcd(linalg.poly_deriv(q), q)
    sigma: Poly = [Fraction(0), Fraction(1)]
    rounds = max(1, math.ceil(math.log2(n)) + 1) if n > 1 else 1
    for _ in range(rounds):
        qs = linalg.poly_compose_mod(q, sigma, p)
        if not qs:
            break
        us = linalg.poly_compose_mod(u, sigma, p)
        sigma = linalg.poly_mod(linalg.poly_sub(sigma, linalg.poly_mul(qs, us)), p)
    if linalg.poly_compose_mod(q, sigma, p):
        raise RuntimeError("Newton iteration failed to converge; this is a bug")
    xs = linalg.poly_eval_matrix(sigma, a)
    xn = linalg.mat_sub(a, xs)
    tau = linalg.poly_sub([Fraction(0), Fraction(1)], sigma)
    return JordanPair(
        semisimple_part=SlnElement.from_rows(xs),
        nilpotent_part=SlnElement.from_rows(xn),
        semisimple_witness=tuple(sigma),
        nilpotent_witness=tuple(tau),
    )


def invariants_phi(x: SlnElement) -> tuple[Fraction, ...]:
    """Characteristic-polynomial coefficients (c_2, ..., c_n) of det(tI - x).

    These generate the conjugation-invariant polynomials, so the vector is
    constant on orbits and vanishes exactly on the nilpotent cone.
    """
    p = linalg.charpoly(x.to_matrix())
    n = x.n
    if n >= 2 and p[n - 1] != 0:
        raise RuntimeError("trace coefficient nonzero for a traceless matrix")
    return tuple(p[n - k] for k in range(2, n + 1))


def trace_power(x: SlnElement, k: int) -> Fraction:
    """Trace of the k-th power of the adjoint operator of x."""
    if k < 1:
        raise ValueError("k must be at least 1")
    ad = ad_matrix(x)
    return linalg.mat_trace(linalg.mat_pow(ad, k))


def rational_eigenvalues(x: SlnElement) -> dict[Fraction, int]:
    """Eigenvalues with multiplicity; raises unless the spectrum is rational."""
    roots, rest = linalg.rational_roots(linalg.charpoly(x.to_matrix()))
    if linalg.poly_deg(rest) > 0:
        raise IrrationalSpectrumError(
            "matrix has irrational eigenvalues; conjugacy testing supports rational spectra only"
        )
    return dict(roots)


def same_orbit(x: SlnElement, y: SlnElement) -> bool:
    """Conjugacy test via eigenvalues plus rank sequences of (x - lambda I)^k.

    Equality of all such ranks pins the Jordan type at every eigenvalue; for
    traceless matrices conjugacy over the full linear group coincides with
    conjugacy over the special linear group.
    """
    _same_n(x, y)
    ex, ey = rational_eigenvalues(x), rational_eigenvalues(y)
    if ex != ey:
        return False
    n = x.n
    for lam in ex:
        a = x.to_matrix()
        b = y.to_matrix()
        for i in range(n):
            a[i][i] -= lam
            b[i][i] -= lam
        pa, pb = linalg.identity(n), linalg.identity(n)
        for _ in range(1, n + 1):
            pa = linalg.mat_mul(pa, a)
            pb = linalg.mat_mul(pb, b)
            if linalg.rank(pa) != linalg.rank(pb):
                return False
    return True


def kks_form(x: SlnElement, y: SlnElement, z: SlnElement) -> Fraction:
    """The orbit symplectic pairing at x: <x, [y, z]>."""
    _same_n(x, y)
    _same_n(x, z)
    return killing(x, bracket(y, z))


def kks_matrix(x: SlnElement) -> Matrix:
    """Gram matrix of the pairing at x over the fixed basis."""
    basis = [SlnElement.from_rows(b) for b in basis_matrices(x.n)]
    # <x,[y,z]> = <[x,y],z>, so row y is the Killing pairing of [x,y] against the basis
    rows = []
    for by in basis:
        xy = bracket(x, by)
        rows.append([killing(xy, bz) for bz in basis])
    return rows


def matrix_to_json(x: SlnElement) -> dict:
    """Matrix JSON with rationals rendered as exact strings."""
    return {"n": x.n, "entries": [[str(v) for v in row] for row in x.entries]}


def matrix_from_json(obj) -> SlnElement:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise ValueError('matrix JSON must be {"n": ..., "entries": [[...]]}')
    x = SlnElement.from_rows(obj["entries"])
    if x.n != int(obj["n"]):
        raise ValueError(f'entry shape {x.n} disagrees with declared n = {obj["n"]}')
    return x
