"""Minimal nilpotent orbit data for the simple types.

The minimal nonzero nilpotent orbit is the orbit of a highest-root vector;
its projectivization is the flag variety of the parabolic attached to the
simple roots orthogonal to the maximal root.  Everything here is dimension
and root-set bookkeeping: orthogonality is tested exactly with the
symmetrized Cartan form (any rescaling of the form gives the same set), and
the orbit dimension exceeds the projectivization by one for the scaling
direction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orbits import minimal_orbit, orbit_dim_partition
from .rootsys import (
    CartanType,
    Root,
    RootSystem,
    build_root_system,
    coroot_pairing,
    inner_product,
    maximal_root,
    parabolic_data,
)


@dataclass(frozen=True)
class MinOrbitReport:
    """Maximal root, its orthogonal simple roots, and the two orbit dimensions."""

    theta: Root
    pi_theta: frozenset[int]
    dim_P_Omin: int
    dim_Omin: int


def min_orbit_report(rs: RootSystem) -> MinOrbitReport:
    """Compute the minimal-orbit data from the root system alone."""
    theta = maximal_root(rs)
    unit = lambda i: tuple(1 if j == i - 1 else 0 for j in range(rs.rank))  # noqa: E731
    pi_theta = frozenset(
        i for i in range(1, rs.rank + 1) if inner_product(rs, unit(i), theta.coeffs) == 0
    )
    pairing_route = frozenset(
        i for i in range(1, rs.rank + 1) if coroot_pairing(rs, i, theta.coeffs) == 0
    )
    if pi_theta != pairing_route:
        raise RuntimeError("orthogonality must not depend on the normalization of the form")
    dim_p_omin = parabolic_data(rs, pi_theta).dim_u
    return MinOrbitReport(
        theta=theta,
        pi_theta=pi_theta,
        dim_P_Omin=dim_p_omin,
        dim_Omin=dim_p_omin + 1,
    )


def type_a_flag_check(n: int) -> bool:
    """Cross-check the type A projectivized minimal orbit against two other routes.

    The projectivization is the variety of (line, hyperplane) incident flags,
    of dimension 2n - 3; the orbit itself must match the partition-route
    dimension of the (2, 1, ..., 1) orbit.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    report = min_orbit_report(build_root_system(CartanType("A", n - 1)))
    flag_dim = (n - 1) + (n - 1) - 1
    partition_dim = orbit_dim_partition(minimal_orbit(n))
    return report.dim_P_Omin == flag_dim == 2 * n - 3 and report.dim_Omin == partition_dim
