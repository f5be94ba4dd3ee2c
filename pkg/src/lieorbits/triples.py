"""Construction and verification of sl2-triples.

Covers three constructions: the bracket-relation checker for concrete matrix
triples, the principal triple attached to any root system (the torus element
evaluating to 2 on every simple root, expressed over the simple coroots), and
a constructive converse of the Jacobson-Morozov theorem for nilpotent
traceless matrices, built from an exact Jordan chain basis.

The abstract principal triple never materializes root vectors: the bracket
relations reduce to the coefficient solve plus the fact that the difference
of two distinct simple roots is never zero or a root, both of which are
verified exactly here for every Cartan type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .rootsys import Root, RootSystem
from .sln import SlnElement, bracket, is_nilpotent


@dataclass(frozen=True)
class CorootVector:
    """An element of the Cartan subalgebra, in coordinates over the simple coroots."""

    coords: tuple[Fraction, ...]

    def evaluate(self, rs: RootSystem, i: int) -> Fraction:
        """Value of the i-th simple root (1-based) on this element."""
        a = rs.cartan_matrix
        return sum((c * a[i - 1][j] for j, c in enumerate(self.coords)), Fraction(0))

    def evaluate_root(self, rs: RootSystem, r: Root) -> Fraction:
        return sum((k * self.evaluate(rs, i + 1) for i, k in enumerate(r.coeffs) if k), Fraction(0))


@dataclass(frozen=True)
class AbstractPrincipalTriple:
    """The neutral element h of the principal triple and its coroot coefficients."""

    h: CorootVector
    c: tuple[Fraction, ...]


@dataclass(frozen=True)
class MatrixTriple:
    """Candidate (x, h, y) for the bracket relations [x,y]=h, [h,x]=2x, [h,y]=-2y."""

    x: SlnElement
    h: SlnElement
    y: SlnElement


def verify_matrix_triple(t: MatrixTriple) -> bool:
    """Exact check of all three defining bracket relations."""
    if not (t.x.n == t.h.n == t.y.n):
        raise ValueError("triple members must share a dimension")
    return (
        bracket(t.x, t.y).entries == t.h.entries
        and bracket(t.h, t.x).entries == (2 * t.x).entries
        and bracket(t.h, t.y).entries == (-2 * t.y).entries
    )


def kostant_principal(rs: RootSystem) -> AbstractPrincipalTriple:
    """The principal triple's h: the solve of alpha_i(h) = 2 over the coroots.

    Also verifies the two ingredients that make the triple close up without
    structure constants: the solve is exact, and no difference of distinct
    simple roots is zero or a root.
    """
    n = rs.rank
    a = linalg.mat_from(rs.cartan_matrix)
    try:
        coords = linalg.solve(a, [Fraction(2)] * n)
    except ValueError as exc:
        raise RuntimeError(f"Cartan matrix of {rs.ctype} is singular") from exc
    h = CorootVector(tuple(coords))
    for i in range(1, n + 1):
        if h.evaluate(rs, i) != 2:
            raise RuntimeError("coefficient solve failed to give alpha(h) = 2")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            diff = tuple((1 if k == i else 0) - (1 if k == j else 0) for k in range(n))
            if rs.is_root(diff):
                raise RuntimeError(
                    f"simple-root difference alpha_{i+1} - alpha_{j+1} is a root; "
                    "the principal triple would not close"
                )
    return AbstractPrincipalTriple(h=h, c=h.coords)


def principal_triple_sln(n: int) -> MatrixTriple:
    """The concrete principal triple in the traceless n-by-n matrices.

    x is the full superdiagonal, h the integer string n-1, n-3, ..., 1-n on
    the diagonal, and y the subdiagonal with weights i(n-i).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    x = [[Fraction(0)] * n for _ in range(n)]
    y = [[Fraction(0)] * n for _ in range(n)]
    h = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        x[i][i + 1] = Fraction(1)
        y[i + 1][i] = Fraction((i + 1) * (n - i - 1))
    for i in range(n):
        h[i][i] = Fraction(n - 1 - 2 * i)
    t = MatrixTriple(
        x=SlnElement.from_rows(x), h=SlnElement.from_rows(h), y=SlnElement.from_rows(y)
    )
    if not verify_matrix_triple(t):
        raise RuntimeError("principal triple construction violated the bracket relations")
    return t


def _standard_block_triple(sizes: list[int]) -> tuple[linalg.Matrix, linalg.Matrix, linalg.Matrix]:
    """Block-diagonal (J, H, F) with one standard string per block size."""
    n = sum(sizes)
    jm = linalg.zeros(n, n)
    hm = linalg.zeros(n, n)
    fm = linalg.zeros(n, n)
    off = 0
    for s in sizes:
        for i in range(s - 1):
            jm[off + i][off + i + 1] = Fraction(1)
            fm[off + i + 1][off + i] = Fraction((i + 1) * (s - i - 1))
        for i in range(s):
            hm[off + i][off + i] = Fraction(s - 1 - 2 * i)
        off += s
    return jm, hm, fm


class _Span:
    """Incremental row space with exact reduction, for independence tests."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, v: list[Fraction]) -> list[Fraction]:
        v = v[:]
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                for j in range(self.dim):
                    v[j] -= f * row[j]
        return v

    def add(self, v: list[Fraction]) -> bool:
        """Insert v if independent of the current span; returns whether it was."""
        r = self.reduce(v)
        p = next((j for j, x in enumerate(r) if x), None)
        if p is None:
            return False
        inv = r[p]
        r = [x / inv for x in r]
        self.rows.append(r)
        self.pivots.append(p)
        return True


def jacobson_morozov_sln(e: SlnElement) -> MatrixTriple:
    """Complete a nilpotent traceless matrix to an sl2-triple.

    Builds a Jordan chain basis from the kernel filtration of the powers of
    e: working down from the largest chain length, each new chain top is the
    first kernel-basis vector independent of the smaller kernel together with
    the already-chosen chains (a deterministic choice).  The standard triple
    for the resulting block sizes is then conjugated back through the chain
    basis, so the bracket relations hold exactly and h has integer spectrum.
    """
    if not is_nilpotent(e):
        raise ValueError("input must be nilpotent")
    n = e.n
    a = e.to_matrix()
    if e.is_zero():
        z = SlnElement.zero(n)
        return MatrixTriple(x=e, h=z, y=z)
    powers = [linalg.identity(n)]
    while not linalg.mat_is_zero(powers[-1]):
        powers.append(linalg.mat_mul(powers[-1], a))
    d = len(powers) - 1  # nilpotency index
    kernels = [[] if k == 0 else linalg.nullspace(powers[k]) for k in range(d + 1)]
    tops: list[tuple[list[Fraction], int]] = []  # (top vector, chain length)
    for k in range(d, 0, -1):
        # fresh span per stage: the smaller kernel plus the height-k layer of
        # the chains already chosen; candidates complete it to ker(e^k)
        span = _Span(n)
        for v in kernels[k - 1]:
            span.add(v)
        for v, size in tops:
            if size >= k + 1:
                span.add(linalg.mat_vec(powers[size - k], v))
        for v in kernels[k]:
            if span.add(v):
                tops.append((v, k))
    sizes = [s for _, s in tops]
    if sum(sizes) != n:
        raise RuntimeError("Jordan chain extraction did not exhaust the space")
    cols: list[list[Fraction]] = []
    for v, s in tops:
        for j in range(s - 1, -1, -1):
            cols.append(linalg.mat_vec(powers[j], v))
    g = [[cols[j][i] for j in range(n)] for i in range(n)]
    ginv = linalg.inverse(g)
    jm, hm, fm = _standard_block_triple(sizes)
    if linalg.mat_mul(g, linalg.mat_mul(jm, ginv)) != a:
        raise RuntimeError("chain basis does not conjugate the standard form to e")
    h = SlnElement.from_rows(linalg.mat_mul(g, linalg.mat_mul(hm, ginv)))
    f = SlnElement.from_rows(linalg.mat_mul(g, linalg.mat_mul(fm, ginv)))
    t = MatrixTriple(x=e, h=h, y=f)
    if not verify_matrix_triple(t):
        raise RuntimeError("constructed triple violated the bracket relations")
    return t
