"""Milnor lattice of the cusp polynomial x^p + y^q + z^r - c xyz.

Basis order is fixed: delta_1, the three arms (axis ascending, position
ascending), then delta_mu'.  The radical is spanned by delta_0 = delta_mu' - delta_1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .errors import InputError, InvalidTripleError
from .exact import (
    BilinearSpace,
    LatticeVector,
    arm,
    center,
    mu_prime,
    zeros,
)

AXES = (1, 2, 3)


def delta_invariant(gamma) -> int:
    """Delta(p, q, r) = pqr - qr - pr - pq."""
    if isinstance(gamma, CuspTriple):
        gamma = gamma.gamma_prime
    p, q, r = gamma
    return p * q * r - q * r - p * r - p * q


@dataclass(frozen=True)
class CuspTriple:
    gamma_prime: tuple[int, int, int]

    def __post_init__(self):
        g = tuple(self.gamma_prime)
        if len(g) != 3 or not all(isinstance(x, int) and not isinstance(x, bool) for x in g):
            raise InputError(f"a cusp triple is three integers, got {self.gamma_prime!r}")
        if min(g) < 1:
            raise InputError(f"cusp exponents must be positive, got {g}")
        d = delta_invariant(g)
        if d <= 0:
            raise InvalidTripleError(g, d)
        object.__setattr__(self, "gamma_prime", g)

    @property
    def delta(self) -> int:
        return delta_invariant(self.gamma_prime)

    def __getitem__(self, axis: int) -> int:
        """gamma'_axis for axis in 1..3."""
        return self.gamma_prime[axis - 1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.gamma_prime)) + ")"


def milnor_number(t: CuspTriple) -> int:
    return 2 + sum(g - 1 for g in t.gamma_prime)


@dataclass(frozen=True)
class MilnorLattice:
    triple: CuspTriple
    space: BilinearSpace
    delta0: LatticeVector

    @property
    def rank(self) -> int:
        return self.space.dim


def milnor_basis(t: CuspTriple) -> tuple:
    labels = [center()]
    for i in AXES:
        labels.extend(arm(i, j) for j in range(1, t[i]))
    labels.append(mu_prime())
    return tuple(labels)


def build_milnor_lattice(t: CuspTriple) -> MilnorLattice:
    basis = milnor_basis(t)
    ix = {b: n for n, b in enumerate(basis)}
    g = zeros(len(basis))

    def link(a, b, w):
        g[ix[a]][ix[b]] = g[ix[b]][ix[a]] = Q(w)

    for n in range(len(basis)):
        g[n][n] = Q(-2)
    for i in AXES:
        if t[i] >= 2:
            link(center(), arm(i, 1), 1)
            link(mu_prime(), arm(i, 1), 1)
        for j in range(1, t[i] - 1):
            link(arm(i, j), arm(i, j + 1), 1)
    link(mu_prime(), center(), -2)

    space = BilinearSpace(basis, g)
    return MilnorLattice(t, space, space.e(mu_prime()) - space.e(center()))


def arm_cycle(t: CuspTriple, lat: MilnorLattice, i: int, j: int) -> LatticeVector:
    """delta^i_j with j read mod gamma'_i; index 0 is delta_0 minus the whole arm."""
    if i not in AXES:
        raise InputError(f"axis index must be 1, 2 or 3, got {i}")
    j %= t[i]
    space = lat.space
    if j:
        return space.e(arm(i, j))
    v = lat.delta0
    for k in range(1, t[i]):
        v = v - space.e(arm(i, k))
    return v


def milnor_quotient_space(lat: MilnorLattice) -> BilinearSpace:
    """The T-shaped basis B: drop delta_mu'."""
    return lat.space.restrict(b for b in lat.space.basis if b != mu_prime())
