"""Abstract root systems for the simple Cartan types A through G.

Roots are integer coefficient vectors over the simple roots, generated by
breadth-first closure of the simple roots under the simple reflections.
Simple-root indices are 1-based throughout the public API (Bourbaki
numbering, with the branch node of E-types numbered 2).

The inner product is the symmetrized Cartan form normalized so that long
roots have squared length 2.  Every quantity exposed here (coroot pairings,
orthogonality, weight order) is invariant under rescaling that form, so the
choice of normalization never leaks into results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg

Coeffs = tuple[int, ...]
RatVector = tuple[Fraction, ...]

_RANK_CONSTRAINTS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanType:
    """A simple Cartan family letter plus rank, validated on construction."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_CONSTRAINTS:
            raise ValueError(f"unknown Cartan family {self.family!r}; expected one of A-G")
        lo, hi = _RANK_CONSTRAINTS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f">= {lo}" if hi is None else (f"= {lo}" if lo == hi else f"in {{{lo}..{hi}}}")
            raise ValueError(f"family {self.family} requires rank {bound}, got {self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """An integer vector over the simple roots, uniformly signed and nonzero."""

    coeffs: Coeffs

    def __post_init__(self):
        if not any(self.coeffs):
            raise ValueError("zero vector is not a root")
        if any(c > 0 for c in self.coeffs) and any(c < 0 for c in self.coeffs):
            raise ValueError(f"mixed-sign coefficients {self.coeffs} are not a root")

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))


@dataclass(frozen=True)
class RootSystem:
    """Full root data for one Cartan type.

    cartan_matrix[i][j] is the pairing of simple root i+1 against simple
    coroot j+1; symmetrizer[j] is half the squared length of simple root
    j+1, so that (alpha_i, alpha_j) = symmetrizer[j] * cartan_matrix[i][j].
    """

    ctype: CartanType
    cartan_matrix: tuple[Coeffs, ...]
    roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    symmetrizer: tuple[Fraction, ...]
    root_index: frozenset[Coeffs] = field(repr=False, compare=False, default=frozenset())

    def __post_init__(self):
        if not self.root_index:
            object.__setattr__(self, "root_index", frozenset(r.coeffs for r in self.roots))

    @property
    def rank(self) -> int:
        return self.ctype.rank

    @property
    def dim_g(self) -> int:
        return self.rank + len(self.roots)

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def is_root(self, coeffs) -> bool:
        return tuple(coeffs) in self.root_index


@dataclass(frozen=True)
class ParabolicData:
    """Root data of the standard parabolic attached to a set of simple roots."""

    subset: frozenset[int]
    delta_s: tuple[Root, ...]
    delta_s_plus: tuple[Root, ...]
    delta_s_minus: tuple[Root, ...]
    dim_p: int
    dim_l: int
    dim_u: int


@dataclass(frozen=True)
class ReducedWord:
    """A word in simple reflections; letters apply left to right."""

    letters: tuple[int, ...]

    def __len__(self):
        return len(self.letters)


_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def _cartan_matrix(ctype: CartanType) -> tuple[Coeffs, ...]:
    fam, n = ctype.family, ctype.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain_edge(i, j):
        a[i][j] = -1
        a[j][i] = -1

    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            chain_edge(i, i + 1)
        if fam == "B" and n >= 2:
            a[n - 2][n - 1] = -2  # alpha_n short
        if fam == "C" and n >= 2:
            a[n - 1][n - 2] = -2  # alpha_n long
    elif fam == "D":
        for i in range(n - 3):
            chain_edge(i, i + 1)
        chain_edge(n - 3, n - 2)
        chain_edge(n - 3, n - 1)
    elif fam == "E":
        for i, j in _E8_EDGES:
            if i <= n and j <= n:
                chain_edge(i - 1, j - 1)
    elif fam == "F":
        chain_edge(0, 1)
        chain_edge(2, 3)
        a[1][2] = -2  # alpha_3 short
        a[2][1] = -1
    elif fam == "G":
        a[0][1] = -1  # alpha_1 short
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: tuple[Coeffs, ...]) -> tuple[Fraction, ...]:
    """Diagonal weights d with d[j]*A[i][j] symmetric, normalized to max 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                stack.append(j)
    if any(x is None for x in d):
        raise ValueError("disconnected Cartan matrix")
    top = max(d)  # type: ignore[type-var]
    return tuple(x / top for x in d)  # type: ignore[operator, union-attr]


def _reflect_coeffs(cartan, i0: int, v):
    """Apply the simple reflection at 0-based index i0 to a coefficient vector."""
    pairing = sum(v[j] * cartan[j][i0] for j in range(len(v)))
    w = list(v)
    w[i0] = w[i0] - pairing
    return tuple(w)


def build_root_system(ctype: CartanType) -> RootSystem:
    """Generate the complete root system by reflection closure of the simple roots."""
    n = ctype.rank
    cartan = _cartan_matrix(ctype)
    seen: set[Coeffs] = set()
    frontier: list[Coeffs] = []
    for i in range(n):
        unit = tuple(1 if j == i else 0 for j in range(n))
        seen.add(unit)
        frontier.append(unit)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = _reflect_coeffs(cartan, i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    ordered = sorted(seen, key=lambda c: (sum(c), c))
    roots = tuple(Root(c) for c in ordered)
    positive = tuple(r for r in roots if r.is_positive)
    if len(roots) != 2 * len(positive):
        raise RuntimeError("root generation lost the plus/minus symmetry")
    return RootSystem(
        ctype=ctype,
        cartan_matrix=cartan,
        roots=roots,
        positive_roots=positive,
        symmetrizer=_symmetrizer(cartan),
    )


def _check_index(rs: RootSystem, i: int) -> int:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple-root index {i} out of range 1..{rs.rank}")
    return i - 1


def inner_product(rs: RootSystem, u, v) -> Fraction:
    """Symmetrized Cartan form on simple-root coordinates (long roots have length^2 = 2)."""
    a, d = rs.cartan_matrix, rs.symmetrizer
    total = Fraction(0)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj:
                    total += ui * vj * d[j] * a[i][j]
    return total


def coroot_pairing(rs: RootSystem, i: int, v) -> Fraction:
    """2<alpha_i, v>/<alpha_i, alpha_i>; the Cartan integer when v is simple."""
    i0 = _check_index(rs, i)
    unit = tuple(1 if j == i0 else 0 for j in range(rs.rank))
    return 2 * inner_product(rs, unit, v) / inner_product(rs, unit, unit)


def reflect(rs: RootSystem, i: int, v) -> RatVector:
    """Simple reflection s_i applied to a rational vector in simple-root coordinates."""
    i0 = _check_index(rs, i)
    w = [Fraction(x) for x in v]
    if len(w) != rs.rank:
        raise ValueError(f"vector length {len(w)} != rank {rs.rank}")
    w[i0] -= coroot_pairing(rs, i, w)
    return tuple(w)


def reflect_root(rs: RootSystem, i: int, r: Root) -> Root:
    i0 = _check_index(rs, i)
    return Root(_reflect_coeffs(rs.cartan_matrix, i0, r.coeffs))


def weight_leq(rs: RootSystem, beta, gamma) -> bool:
    """True iff gamma - beta is a nonnegative integer combination of simple roots."""
    beta, gamma = tuple(beta), tuple(gamma)
    if len(beta) != rs.rank or len(gamma) != rs.rank:
        raise ValueError("vectors must have length equal to the rank")
    for b, g in zip(beta, gamma):
        diff = Fraction(g) - Fraction(b)
        if diff.denominator != 1 or diff < 0:
            return False
    return True


def maximal_root(rs: RootSystem) -> Root:
    """The unique root dominating every root in the weight order."""
    top_height = max(r.height for r in rs.positive_roots)
    candidates = [r for r in rs.positive_roots if r.height == top_height]
    if len(candidates) != 1:
        raise RuntimeError(f"no unique maximal root for {rs.ctype}; is it irreducible?")
    theta = candidates[0]
    for r in rs.roots:
        if not weight_leq(rs, r.coeffs, theta.coeffs):
            raise RuntimeError(f"height-maximal root {theta.coeffs} fails to dominate {r.coeffs}")
    return theta


def longest_element(rs: RootSystem) -> ReducedWord:
    """Reduced word for the longest Weyl element, by greedy descent.

    Walk a strictly dominant vector to the antidominant chamber, always
    reflecting at the least simple index with positive coroot pairing.  The
    walk takes exactly one step per positive root.
    """
    n = rs.rank
    rho = [Fraction(0)] * n
    for r in rs.positive_roots:
        for j, c in enumerate(r.coeffs):
            rho[j] += Fraction(c, 2)
    v: RatVector = tuple(rho)
    letters: list[int] = []
    while True:
        for i in range(1, n + 1):
            if coroot_pairing(rs, i, v) > 0:
                v = reflect(rs, i, v)
                letters.append(i)
                break
        else:
            break
    if len(letters) != rs.num_positive:
        raise RuntimeError("longest-element walk did not take |positive roots| steps")
    return ReducedWord(tuple(letters))


def apply_word(rs: RootSystem, word: ReducedWord, v) -> RatVector:
    """Apply a reflection word to a rational vector, letters left to right."""
    out = tuple(Fraction(x) for x in v)
    for i in word.letters:
        out = reflect(rs, i, out)
    return out


def apply_word_root(rs: RootSystem, word: ReducedWord, r: Root) -> Root:
    coeffs = r.coeffs
    for i in word.letters:
        coeffs = _reflect_coeffs(rs.cartan_matrix, i - 1, coeffs)
    return Root(coeffs)


def dual_subset(rs: RootSystem, subset) -> frozenset[int]:
    """The involution S -> -w0.S on subsets of the simple roots."""
    s = frozenset(subset)
    for i in s:
        _check_index(rs, i)
    w0 = longest_element(rs)
    out = set()
    for i in s:
        unit = Root(tuple(1 if j == i - 1 else 0 for j in range(rs.rank)))
        image = -apply_word_root(rs, w0, unit)
        coeffs = image.coeffs
        if sum(coeffs) != 1 or set(coeffs) - {0, 1}:
            raise RuntimeError(f"-w0.alpha_{i} = {coeffs} is not a simple root")
        out.add(coeffs.index(1) + 1)
    return frozenset(out)


def parabolic_data(rs: RootSystem, subset) -> ParabolicData:
    """Root sets and dimensions of the standard parabolic, its Levi and unipotent parts."""
    s = frozenset(subset)
    for i in s:
        _check_index(rs, i)
    s0 = {i - 1 for i in s}
    delta_s = tuple(r for r in rs.roots if all(c == 0 or j in s0 for j, c in enumerate(r.coeffs)))
    plus = tuple(r for r in delta_s if r.is_positive)
    minus = tuple(r for r in delta_s if not r.is_positive)
    dim_l = rs.rank + len(delta_s)
    dim_u = rs.num_positive - len(plus)
    return ParabolicData(
        subset=s,
        delta_s=delta_s,
        delta_s_plus=plus,
        delta_s_minus=minus,
        dim_p=dim_l + dim_u,
        dim_l=dim_l,
        dim_u=dim_u,
    )


def root_system_to_json(rs: RootSystem) -> dict:
    """JSON-ready dict with integer entries, roots in canonical order."""
    return {
        "type": rs.ctype.family,
        "rank": rs.ctype.rank,
        "roots": [list(r.coeffs) for r in rs.roots],
        "cartan": [list(row) for row in rs.cartan_matrix],
    }


def solve_coroot_coords(rs: RootSystem, values) -> RatVector:
    """Coordinates over the simple coroots of the element with given simple-root values."""
    a = linalg.mat_from(rs.cartan_matrix)
    return tuple(linalg.solve(a, [linalg.frac(v) for v in values]))
