"""Intersection form on the orbit space W = V/G.

Pairings are brute-force sums over the group, <u, v>_W = sum_g <u, g v>_V,
evaluated on fixed representatives in the Milnor lattice.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .action import ActionMatrix, action_matrices
from .cusp import AXES, CuspTriple, MilnorLattice, arm_cycle
from .errors import VerificationError
from .exact import (
    BasisLabel,
    BilinearSpace,
    LabelKind,
    LatticeVector,
    arm,
    center,
    delta0,
    pair,
    zeros,
)
from .symmetry import SymmetryGroup, compute_stats, gabrielov_numbers


@dataclass(frozen=True)
class OrbitSpace:
    space: BilinearSpace
    triple: CuspTriple
    group: SymmetryGroup
    representatives: dict

    def representative(self, label: BasisLabel) -> LatticeVector:
        return self.representatives[label]


def orbit_basis(t: CuspTriple, G: SymmetryGroup) -> tuple[BasisLabel, ...]:
    gammas, _ = gabrielov_numbers(t, G)
    labels = [center()]
    for i, g in zip(AXES, gammas):
        labels.extend(arm(i, j) for j in range(1, g))
    labels.append(delta0())
    return tuple(labels)


def orbit_pairing(
    t: CuspTriple,
    lat: MilnorLattice,
    G: SymmetryGroup,
    u: LatticeVector,
    v: LatticeVector,
    actions: dict[object, ActionMatrix] | None = None,
) -> Q:
    actions = actions or action_matrices(t, lat, G)
    space = lat.space
    return sum(
        (pair(space, u, space.vector(actions[g].apply(v.coords))) for g in G),
        Q(0),
    )


def build_orbit_space(
    t: CuspTriple, lat: MilnorLattice, G: SymmetryGroup, actions=None
) -> OrbitSpace:
    actions = actions or action_matrices(t, lat, G)
    basis = orbit_basis(t, G)
    reps = {}
    for b in basis:
        if b.kind is LabelKind.CENTER:
            reps[b] = lat.space.e(center())
        elif b.kind is LabelKind.DELTA0:
            reps[b] = lat.delta0
        else:
            reps[b] = lat.space.e(b)
    n = len(basis)
    g = zeros(n)
    for a in range(n):
        for c in range(a, n):
            g[a][c] = g[c][a] = orbit_pairing(t, lat, G, reps[basis[a]], reps[basis[c]], actions)
    return OrbitSpace(BilinearSpace(basis, g, accent="bar"), t, G, reps)


def orbit_closed_form(t: CuspTriple, G: SymmetryGroup) -> BilinearSpace:
    """Orbit Gram predicted from group data alone: 2j_G-2, -2n_i, n_i, 0."""
    stats = compute_stats(G)
    basis = orbit_basis(t, G)
    ix = {b: k for k, b in enumerate(basis)}
    g = zeros(len(basis))
    g[0][0] = Q(2 * stats.j_G - 2)
    gammas, _ = gabrielov_numbers(t, G, stats)
    for i, gi, ni in zip(AXES, gammas, stats.n):
        for j in range(1, gi):
            g[ix[arm(i, j)]][ix[arm(i, j)]] = Q(-2 * ni)
        if gi >= 2:
            g[0][ix[arm(i, 1)]] = g[ix[arm(i, 1)]][0] = Q(ni)
        for j in range(1, gi - 1):
            a, b = ix[arm(i, j)], ix[arm(i, j + 1)]
            g[a][b] = g[b][a] = Q(ni)
    return BilinearSpace(basis, g, accent="bar")


@dataclass(frozen=True)
class OrbitReport:
    dim: int
    entries_checked: int
    translates_checked: int


def verify_orbit_lemma(
    t: CuspTriple, lat: MilnorLattice, G: SymmetryGroup, orbit: OrbitSpace | None = None, actions=None
) -> OrbitReport:
    actions = actions or action_matrices(t, lat, G)
    orbit = orbit or build_orbit_space(t, lat, G, actions)
    expected = orbit_closed_form(t, G)
    basis = orbit.space.basis
    if basis != expected.basis:
        raise VerificationError("orbit-lemma", "basis mismatch with closed form")
    for a, la in enumerate(basis):
        for c, lc in enumerate(basis):
            got, want = orbit.space.gram[a][c], expected.gram[a][c]
            if got != want:
                raise VerificationError(
                    "orbit-lemma",
                    f"<{orbit.space.name(la)}, {orbit.space.name(lc)}>_W = {got}, closed form gives {want}",
                )

    gammas, _ = gabrielov_numbers(t, G)
    translates = 0
    milnor_basis = [lat.space.e(k) for k in range(lat.space.dim)]
    for i, gi in zip(AXES, gammas):
        for j in range(1, gi):
            u0 = arm_cycle(t, lat, i, j)
            u1 = arm_cycle(t, lat, i, j + gi)
            for v in milnor_basis:
                x = orbit_pairing(t, lat, G, u0, v, actions)
                y = orbit_pairing(t, lat, G, u1, v, actions)
                if x != y:
                    raise VerificationError(
                        "orbit-representative",
                        f"replacing delta^{i}_{j} by delta^{i}_{j + gi} changes a pairing: {x} vs {y}",
                    )
                translates += 1
    return OrbitReport(len(basis), len(basis) ** 2, translates)
