"""Exact linear algebra and dense polynomial arithmetic over the rationals.

Matrices are lists of rows of Fraction entries; polynomials are coefficient
lists, lowest degree first, with [] as the zero polynomial.  Nothing here uses
floats or tolerances: ranks come from fraction-free (Bareiss) elimination on
integer-scaled rows, and every division in the polynomial routines is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = list[list[Fraction]]
Vector = list[Fraction]
Poly = list[Fraction]


def frac(x) -> Fraction:
    """Coerce an int, string ("p" or "p/q") or Fraction to Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def mat_from(rows) -> Matrix:
    return [[frac(x) for x in row] for row in rows]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, s) -> Matrix:
    s = frac(s)
    return [[s * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k = len(a), len(b)
    c = len(b[0]) if b else 0
    out = zeros(n, c)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(c):
                    oi[j] += x * bt[j]
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def mat_trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def mat_is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def rank(m: Matrix) -> int:
    """Rank by Bareiss fraction-free elimination.

    Rows are first scaled to integers (rank-preserving), so all intermediate
    divisions are exact integer divisions by the previous pivot.
    """
    rows: list[list[int]] = []
    for row in m:
        den = 1
        for x in row:
            d = x.denominator
            den = den * d // gcd(den, d)
        srow = [int(x * den) for x in row]
        if any(srow):
            rows.append(srow)
    if not rows:
        return 0
    nr, nc = len(rows), len(rows[0])
    r = 0
    prev = 1
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) // prev
            rows[i][c] = 0
        prev = rows[r][c]
        r += 1
    return r


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    a = [row[:] for row in m]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def nullspace(m: Matrix) -> list[Vector]:
    """Deterministic kernel basis: one vector per free column, unit there."""
    nc = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Vector) -> Vector:
    """Solve a square nonsingular system exactly; raises on singular input."""
    n = len(a)
    aug = [row[:] + [bv] for row, bv in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c]
        aug[c] = [x / inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [row[:] + ident_row for row, ident_row in zip(a, identity(n))]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c]
        aug[c] = [x / inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def det(a: Matrix) -> Fraction:
    n = len(a)
    m = [row[:] for row in a]
    sign = 1
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        out *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * out


def charpoly(a: Matrix) -> Poly:
    """Coefficients of det(lambda*I - a), lowest degree first, monic.

    Faddeev-LeVerrier recursion; every step stays in the rationals.
    """
    n = len(a)
    coeffs = [Fraction(1)]  # built high degree first
    m = zeros(n, n)
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        for i in range(n):
            m[i][i] += coeffs[-1]
        t = Fraction(0)
        for i in range(n):
            t += sum((a[i][j] * m[j][i] for j in range(n)), Fraction(0))
        coeffs.append(-t / k)
    return list(reversed(coeffs))


# ---------------------------------------------------------------------------
# dense polynomials over Q


def poly_trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_deg(p: Poly) -> int:
    return len(p) - 1


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else Fraction(0)) + (q[i] if i < len(q) else Fraction(0)) for i in range(n)]
    return poly_trim(out)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, [-x for x in q])


def poly_scale(p: Poly, s) -> Poly:
    s = frac(s)
    return poly_trim([s * x for x in p])


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return poly_trim(out)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    q = poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    dq = len(q) - 1
    lead = q[-1]
    while len(poly_trim(r)) - 1 >= dq:
        r = poly_trim(r)
        shift = len(r) - 1 - dq
        c = r[-1] / lead
        quo[shift] = c
        for i, y in enumerate(q):
            r[shift + i] -= c * y
    return poly_trim(quo), poly_trim(r)


def poly_mod(p: Poly, q: Poly) -> Poly:
    return poly_divmod(p, q)[1]


def poly_monic(p: Poly) -> Poly:
    p = poly_trim(p)
    if not p:
        return p
    return [x / p[-1] for x in p]


def poly_gcd(p: Poly, q: Poly) -> Poly:
    a, b = poly_trim(p), poly_trim(q)
    while b:
        a, b = b, poly_mod(a, b)
    return poly_monic(a)


def poly_xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Monic g and cofactors (g, u, v) with u*p + v*q = g."""
    a, b = poly_trim(p), poly_trim(q)
    ua, va = [Fraction(1)], []
    ub, vb = [], [Fraction(1)]
    while b:
        quo, rem = poly_divmod(a, b)
        a, b = b, rem
        ua, ub = ub, poly_sub(ua, poly_mul(quo, ub))
        va, vb = vb, poly_sub(va, poly_mul(quo, vb))
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
        ua = [x / lead for x in ua]
        va = [x / lead for x in va]
    return a, ua, va


def poly_deriv(p: Poly) -> Poly:
    return poly_trim([i * p[i] for i in range(1, len(p))])


def poly_eval(p: Poly, x) -> Fraction:
    x = frac(x)
    out = Fraction(0)
    for c in reversed(p):
        out = out * x + c
    return out


def poly_eval_matrix(p: Poly, a: Matrix) -> Matrix:
    n = len(a)
    out = zeros(n, n)
    for c in reversed(p):
        out = mat_mul(out, a)
        for i in range(n):
            out[i][i] += c
    return out


def poly_compose_mod(p: Poly, s: Poly, m: Poly) -> Poly:
    """p(s) reduced modulo m, via Horner on the coefficients of p."""
    out: Poly = []
    for c in reversed(p):
        out = poly_mod(poly_add(poly_mul(out, s), [c]), m)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly) -> tuple[list[tuple[Fraction, int]], Poly]:
    """All rational roots of p with multiplicities, and the root-free cofactor.

    Candidates come from the rational root theorem applied to the
    integer-scaled polynomial; deflation preserves the candidate set.
    """
    q = poly_trim(list(p))
    if not q:
        raise ValueError("zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    k = 0
    while q[0] == 0:
        q = q[1:]
        k += 1
    if k:
        roots.append((Fraction(0), k))
    if len(q) <= 1:
        return roots, q
    den = 1
    for c in q:
        d = c.denominator
        den = den * d // gcd(den, d)
    ip = [int(c * den) for c in q]
    cands = sorted(
        {Fraction(s * d0, dn) for d0 in _divisors(ip[0]) for dn in _divisors(ip[-1]) for s in (1, -1)}
    )
    for r in cands:
        mult = 0
        while len(q) > 1 and poly_eval(q, r) == 0:
            q = poly_divmod(q, [-r, Fraction(1)])[0]
            mult += 1
        if mult:
            roots.append((r, mult))
    return roots, q
