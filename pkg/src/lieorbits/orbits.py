"""Nilpotent-orbit combinatorics for traceless matrices: partitions of n.

Orbits are labeled by partitions, ordered by dominance (prefix sums), with
the closure order realized two independent ways: the dominance test itself
and an exact rank oracle on powers of the Jordan representatives.  The poset
is emitted with covering relations (transitive reduction), dimension labels,
and deterministic reverse-lexicographic node order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .sln import SlnElement


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive integers; labels one nilpotent orbit."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "+".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class OrbitPoset:
    """All partitions of n with the covering pairs of the dominance order.

    covers holds (lower_index, upper_index) pairs into nodes; nodes are in
    reverse-lexicographic order, so index 0 is the regular orbit (n) and the
    last index is the zero orbit (1,...,1).
    """

    n: int
    nodes: tuple[Partition, ...]
    covers: tuple[tuple[int, int], ...]


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(cap, remaining), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(n, n, ())
    return out


def _check_same_n(lam: Partition, mu: Partition):
    if lam.n != mu.n:
        raise ValueError(f"partitions of different integers: {lam.n} vs {mu.n}")


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """Prefix-sum comparison: every initial segment of lam sums to at most mu's."""
    _check_same_n(lam, mu)
    acc_l = acc_m = 0
    for i in range(max(len(lam.parts), len(mu.parts))):
        acc_l += lam.parts[i] if i < len(lam.parts) else 0
        acc_m += mu.parts[i] if i < len(mu.parts) else 0
        if acc_l > acc_m:
            return False
    return True


def transpose(lam: Partition) -> Partition:
    """Conjugate partition: column lengths of the Young diagram."""
    return Partition(tuple(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1)))


def jordan_matrix(lam: Partition) -> SlnElement:
    """Nilpotent block matrix with one upper Jordan block per part, largest first."""
    n = lam.n
    m = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for p in lam.parts:
        for i in range(p - 1):
            m[off + i][off + i + 1] = Fraction(1)
        off += p
    return SlnElement.from_rows(m)


def orbit_dim_partition(lam: Partition) -> int:
    """n^2 minus the sum of squared transpose parts; oracle-checked in the tests."""
    n = lam.n
    return n * n - sum(t * t for t in transpose(lam).parts)


def closure_leq_rank(lam: Partition, mu: Partition) -> bool:
    """Closure membership by exact rank conditions on Jordan representatives.

    True iff rank(J_lam^k) <= rank(J_mu^k) for 1 <= k < n, with ranks computed
    from the actual matrix powers; independent of the dominance shortcut.
    """
    _check_same_n(lam, mu)
    n = lam.n
    a = jordan_matrix(lam).to_matrix()
    b = jordan_matrix(mu).to_matrix()
    pa, pb = linalg.identity(n), linalg.identity(n)
    for _ in range(1, n):
        pa = linalg.mat_mul(pa, a)
        pb = linalg.mat_mul(pb, b)
        if linalg.rank(pa) > linalg.rank(pb):
            return False
    return True


def hasse_diagram(n: int) -> OrbitPoset:
    """Dominance order on partitions of n, reduced to covering relations."""
    nodes = partitions(n)
    k = len(nodes)
    leq = [[dominance_leq(nodes[i], nodes[j]) for j in range(k)] for i in range(k)]
    covers = []
    for i in range(k):
        for j in range(k):
            if i == j or not leq[i][j]:
                continue
            if any(t != i and t != j and leq[i][t] and leq[t][j] for t in range(k)):
                continue
            covers.append((i, j))
    covers.sort()
    return OrbitPoset(n=n, nodes=tuple(nodes), covers=tuple(covers))


def regular_orbit(n: int) -> Partition:
    """Label of the unique dense nilpotent orbit: the single-block partition."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Partition((n,))


def minimal_orbit(n: int) -> Partition:
    """Label of the minimal nonzero nilpotent orbit: one 2 and n-2 ones."""
    if n < 2:
        raise ValueError("no nonzero nilpotent orbit exists for n < 2")
    return Partition((2,) + (1,) * (n - 2))


def poset_to_json(poset: OrbitPoset) -> dict:
    return {
        "n": poset.n,
        "nodes": [{"parts": list(p.parts), "dim": orbit_dim_partition(p)} for p in poset.nodes],
        "covers": [list(c) for c in poset.covers],
    }


def poset_to_dot(poset: OrbitPoset) -> str:
    """DOT digraph with dimension-labeled nodes, edges upward in the order."""
    lines = [f'digraph "nilpotent_orbits_n{poset.n}" {{']
    for i, p in enumerate(poset.nodes):
        lines.append(f'  n{i} [label="{p} (dim {orbit_dim_partition(p)})"];')
    for lo, hi in poset.covers:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
