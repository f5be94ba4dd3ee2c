"""Semisimple-orbit computations over the abstract root system.

A semisimple orbit is encoded by a torus element h in coordinates over the
simple coroots, with Gaussian-rational (exact complex) values.  Membership in
the fundamental domain, the vanishing set of simple roots, Levi stabilizer
dimensions, regularity, and the dual-parabolic root identities are all exact;
zero tests never involve tolerances.

Stabilizers appear only through root sets and dimensions.  Reduction of an
arbitrary complex h into the fundamental domain is deliberately not offered;
only real h can be reflected to a dominant representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .rootsys import (
    ParabolicData,
    Root,
    RootSystem,
    apply_word_root,
    dual_subset,
    longest_element,
    parabolic_data,
)


class FundamentalDomainError(ValueError):
    """Raised when an operation requires h in the fundamental domain."""

    def __init__(self, index: int, value: "GaussianRational"):
        self.index = index
        self.value = value
        super().__init__(
            f"h is outside the fundamental domain: alpha_{index}(h) = {value} "
            "violates Re >= 0, or Im >= 0 on the Re = 0 wall"
        )


@dataclass(frozen=True)
class GaussianRational:
    """An exact complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        if isinstance(re, GaussianRational):
            return re
        return cls(linalg.frac(re), linalg.frac(im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def scale(self, s) -> "GaussianRational":
        s = linalg.frac(s)
        return GaussianRational(s * self.re, s * self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im} i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)} i"


_ZERO = GaussianRational(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class TorusElement:
    """A Cartan element over the simple coroots, with exact complex coordinates."""

    coords: tuple[GaussianRational, ...]

    @classmethod
    def of(cls, values) -> "TorusElement":
        return cls(tuple(GaussianRational.of(v) for v in values))

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coords)


def simple_values(rs: RootSystem, h: TorusElement) -> tuple[GaussianRational, ...]:
    """The values alpha_i(h) for every simple root, via the Cartan matrix."""
    if len(h.coords) != rs.rank:
        raise ValueError(f"torus element has {len(h.coords)} coordinates, rank is {rs.rank}")
    a = rs.cartan_matrix
    out = []
    for i in range(rs.rank):
        acc = _ZERO
        for j, c in enumerate(h.coords):
            if a[i][j]:
                acc = acc + c.scale(a[i][j])
        out.append(acc)
    return tuple(out)


def root_value(rs: RootSystem, h: TorusElement, r: Root) -> GaussianRational:
    vals = simple_values(rs, h)
    acc = _ZERO
    for i, k in enumerate(r.coeffs):
        if k:
            acc = acc + vals[i].scale(k)
    return acc


def _first_violation(rs: RootSystem, h: TorusElement) -> tuple[int, GaussianRational] | None:
    for i, v in enumerate(simple_values(rs, h), start=1):
        if v.re < 0 or (v.re == 0 and v.im < 0):
            return i, v
    return None


def in_fundamental_domain(rs: RootSystem, h: TorusElement) -> bool:
    """Exact test: Re(alpha(h)) >= 0 for simple alpha, and Im >= 0 on Re = 0 walls."""
    return _first_violation(rs, h) is None


def pi_of_h(rs: RootSystem, h: TorusElement) -> frozenset[int]:
    """Indices of the simple roots vanishing exactly on h."""
    return frozenset(i for i, v in enumerate(simple_values(rs, h), start=1) if v.is_zero())


def centralizer_root_set(rs: RootSystem, h: TorusElement) -> tuple[Root, ...]:
    """All roots vanishing on h, in canonical order.

    When h lies in the fundamental domain this set must coincide with the
    Levi root set of the vanishing simple roots; that equality is asserted.
    """
    vals = simple_values(rs, h)
    vanishing = []
    for r in rs.roots:
        acc = _ZERO
        for i, k in enumerate(r.coeffs):
            if k:
                acc = acc + vals[i].scale(k)
        if acc.is_zero():
            vanishing.append(r)
    out = tuple(vanishing)
    if in_fundamental_domain(rs, h):
        levi = parabolic_data(rs, pi_of_h(rs, h)).delta_s
        assert set(out) == set(levi), "vanishing roots differ from the Levi root set inside D"
    return out


def _require_in_domain(rs: RootSystem, h: TorusElement):
    violation = _first_violation(rs, h)
    if violation is not None:
        raise FundamentalDomainError(*violation)


def ss_orbit_dim(rs: RootSystem, h: TorusElement) -> int:
    """Orbit dimension |roots| - |Levi roots of Pi(h)|; requires h in the domain."""
    _require_in_domain(rs, h)
    pd = parabolic_data(rs, pi_of_h(rs, h))
    return len(rs.roots) - len(pd.delta_s)


def is_regular_semisimple(rs: RootSystem, h: TorusElement) -> bool:
    """Full-dimensional orbit: no simple root vanishes on h."""
    _require_in_domain(rs, h)
    return not pi_of_h(rs, h)


@dataclass(frozen=True)
class DualParabolicReport:
    """Root-level verification data for the dual-parabolic statements."""

    subset: frozenset[int]
    dual: frozenset[int]
    w0_image_is_plus: bool
    intersection_roots: tuple[Root, ...]
    intersection_is_levi: bool
    dim_intersection: int
    dim_l: int
    plus_counts_equal: bool

    @property
    def ok(self) -> bool:
        return self.w0_image_is_plus and self.intersection_is_levi and self.plus_counts_equal


def verify_dual_parabolic(rs: RootSystem, subset) -> DualParabolicReport:
    """Check, at the root level, the three dual-parabolic identities.

    (a) the longest element maps the negative Levi roots of the dual subset
    onto the positive Levi roots of the subset; (b) the root set of the
    intersection of the parabolic with the w0-image of the dual parabolic is
    exactly the Levi root set; (c) the positive Levi root counts agree.
    """
    s = frozenset(subset)
    sv = dual_subset(rs, s)
    w0 = longest_element(rs)
    pd_s: ParabolicData = parabolic_data(rs, s)
    pd_sv: ParabolicData = parabolic_data(rs, sv)

    image = {apply_word_root(rs, w0, r) for r in pd_sv.delta_s_minus}
    w0_ok = image == set(pd_s.delta_s_plus)

    p_s_roots = set(rs.positive_roots) | set(pd_s.delta_s_minus)
    p_dual_roots = {apply_word_root(rs, w0, r) for r in rs.positive_roots} | {
        apply_word_root(rs, w0, r) for r in pd_sv.delta_s_minus
    }
    inter = p_s_roots & p_dual_roots
    inter_ok = inter == set(pd_s.delta_s)
    ordered = tuple(sorted(inter, key=lambda r: (r.height, r.coeffs)))

    return DualParabolicReport(
        subset=s,
        dual=sv,
        w0_image_is_plus=w0_ok,
        intersection_roots=ordered,
        intersection_is_levi=inter_ok,
        dim_intersection=rs.rank + len(inter),
        dim_l=pd_s.dim_l,
        plus_counts_equal=len(pd_s.delta_s_plus) == len(pd_sv.delta_s_plus),
    )


def compactification_dims(rs: RootSystem, h: TorusElement) -> tuple[int, int, int]:
    """(orbit dim, dim G/P, dim G/P*) for h in the domain; the first is twice the second."""
    _require_in_domain(rs, h)
    s = pi_of_h(rs, h)
    dim_orbit = ss_orbit_dim(rs, h)
    dim_gp = parabolic_data(rs, s).dim_u
    dim_gp_star = parabolic_data(rs, dual_subset(rs, s)).dim_u
    if dim_orbit != 2 * dim_gp or dim_gp != dim_gp_star:
        raise RuntimeError("dimension identity failed; this contradicts the dual-parabolic count")
    return dim_orbit, dim_gp, dim_gp_star


def dominant_representative(rs: RootSystem, h: TorusElement) -> TorusElement:
    """Reflect a real torus element into the dominant chamber.

    Repeatedly applies the simple reflection at the least index with a
    negative value; terminates in at most |positive roots| steps.  Complex
    coordinates are rejected: a canonical reduction for those would need an
    ordering convention this module does not fix.
    """
    if not h.is_real():
        raise ValueError("dominant_representative supports real coordinates only")
    coords = [c.re for c in h.coords]
    a = rs.cartan_matrix
    steps = 0
    limit = rs.num_positive
    while True:
        vals = [sum((c * a[i][j] for j, c in enumerate(coords)), Fraction(0)) for i in range(rs.rank)]
        i = next((k for k, v in enumerate(vals) if v < 0), None)
        if i is None:
            break
        # reflection on the Cartan side: subtract alpha_i(h) times the coroot
        coords[i] -= vals[i]
        steps += 1
        if steps > limit:
            raise RuntimeError("reflection walk exceeded the positive-root count")
    return TorusElement.of(coords)
