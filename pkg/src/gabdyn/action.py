"""The G-action on the Milnor lattice as exact integer matrices.

Column b of the matrix is the image of basis vector b.  Arms rotate
cyclically (delta^i_j -> delta^i_{j+a_i}), delta_0 is fixed, and

    g(delta_1) = delta_1 + sum_i sum_{j=1..a_i} delta^i_j - age(g) delta_0.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cusp import AXES, CuspTriple, MilnorLattice, arm_cycle
from .errors import ConsistencyError, VerificationError
from .exact import (
    LabelKind,
    fixed_subspace_dim,
    identity,
    matmul,
    matvec,
    transpose,
)
from .symmetry import GroupElement, SymmetryGroup, age, check_symmetry, gabrielov_numbers


@dataclass(frozen=True)
class ActionMatrix:
    element: GroupElement
    matrix: tuple[tuple[int, ...], ...]

    def apply(self, coords):
        return matvec(self.matrix, coords)


def _integral(coords) -> tuple[int, ...]:
    if any(c.denominator != 1 for c in coords):
        raise ConsistencyError(f"non-integral action column {coords}")
    return tuple(int(c) for c in coords)


def action_matrix(t: CuspTriple, lat: MilnorLattice, g: GroupElement) -> ActionMatrix:
    check_symmetry(t, g)
    a = g.shifts(t)
    space = lat.space

    image_d1 = space.e(0)
    for i, ai in zip(AXES, a):
        for j in range(1, ai + 1):
            image_d1 = image_d1 + arm_cycle(t, lat, i, j)
    image_d1 = image_d1 - age(g) * lat.delta0

    columns = []
    for label in space.basis:
        if label.kind is LabelKind.CENTER:
            col = image_d1
        elif label.kind is LabelKind.ARM:
            i, j = label.indices
            col = arm_cycle(t, lat, i, j + a[i - 1])
        else:
            # delta_mu' = delta_0 + delta_1 and g fixes delta_0
            col = lat.delta0 + image_d1
        columns.append(_integral(col.coords))
    return ActionMatrix(g, transpose(columns))


def action_matrices(t: CuspTriple, lat: MilnorLattice, G: SymmetryGroup) -> dict[GroupElement, ActionMatrix]:
    return {g: action_matrix(t, lat, g) for g in G}


def matrix_power(m, k: int):
    out = identity(len(m))
    for _ in range(k):
        out = matmul(out, m)
    return out


@dataclass(frozen=True)
class ActionReport:
    group_order: int
    fixed_dim: int
    expected_fixed_dim: int
    pairs_checked: int


def verify_action(t: CuspTriple, lat: MilnorLattice, G: SymmetryGroup, actions=None) -> ActionReport:
    """Isometry, homomorphism, delta_0 fixed, and invariant-subspace dimension."""
    actions = actions or action_matrices(t, lat, G)
    gram = lat.space.gram
    d0 = lat.delta0.coords
    for g, A in actions.items():
        M = A.matrix
        if matmul(matmul(transpose(M), gram), M) != gram:
            raise VerificationError("isometry", f"M^T G M != G for g = {g}")
        if A.apply(d0) != d0:
            raise VerificationError("delta0-fixed", f"g = {g} moves delta_0")
    pairs = 0
    for g, A in actions.items():
        for h, B in actions.items():
            if matmul(A.matrix, B.matrix) != actions[g + h].matrix:
                raise VerificationError(
                    "homomorphism", f"M_g M_h != M_(g+h) for g = {g}, h = {h}"
                )
            pairs += 1
    found = fixed_subspace_dim([A.matrix for A in actions.values()])
    gammas, _ = gabrielov_numbers(t, G)
    expected = 2 + sum(x - 1 for x in gammas)
    if found != expected:
        raise VerificationError(
            "invariant-dimension",
            f"fixed subspace has dimension {found}, expected 2 + sum(gamma_i - 1) = {expected}",
        )
    return ActionReport(G.order, found, expected, pairs)
