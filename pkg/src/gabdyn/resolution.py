"""Rational model of H_2(Z) and the hat basis of H_3(Y, Z).

H_2(Z; Q) is modelled as an orthogonal sum: the orbit lattice (images h(x)
of orbit classes, with <h(x), h(y)>_Z = <x, y>_W) plus one A_{n_i - 1} root
block for each singular point (i, j), j = 1..gamma_i, of W.  Cross pairings
between blocks are zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache

from .cusp import AXES, CuspTriple, build_milnor_lattice
from .errors import InputError, VerificationError
from .exact import (
    BasisLabel,
    BilinearSpace,
    LabelKind,
    LatticeVector,
    arm,
    center,
    delta0,
    exceptional,
    gram_of,
    hclass,
    negative_cartan_a,
    pair,
    reflect,
    vectors_rank,
    y_exceptional,
    zeros,
)
from .orbit import OrbitSpace, build_orbit_space
from .symmetry import SymmetryGroup, cohomology_dims, compute_stats, gabrielov_numbers


# -- A_{n-1} root blocks -----------------------------------------------------


@lru_cache(maxsize=None)
def root_block(n: int) -> BilinearSpace:
    """Simple roots E_1..E_{n-1} of A_{n-1} with the negated Cartan matrix."""
    if n < 2:
        raise InputError(f"A_(n-1) root block needs n >= 2, got {n}")
    return BilinearSpace(
        tuple(exceptional(k) for k in range(1, n)), negative_cartan_a(n - 1)
    )


def fundamental_weight(n: int) -> LatticeVector:
    """Lambda_1 = ((n-1) E_1 + (n-2) E_2 + ... + E_{n-1}) / n."""
    block = root_block(n)
    return block.vector(Q(n - k, n) for k in range(1, n))


def lambda_sequence(n: int) -> list[LatticeVector]:
    """lambda_0 = Lambda_1 and lambda_k = w_k(lambda_{k-1}) for k = 1..n-1."""
    block = root_block(n)
    out = [fundamental_weight(n)]
    for k in range(1, n):
        out.append(reflect(block, block.e(k - 1), out[-1]))
    return out


def verify_lambda_lemma(n: int) -> None:
    block = root_block(n)
    lam = lambda_sequence(n)
    diag, off = Q(-(n - 1), n), Q(1, n)
    for a, x in enumerate(lam):
        for b, y in enumerate(lam):
            got = pair(block, x, y)
            want = diag if a == b else off
            if got != want:
                raise VerificationError(
                    "lambda-lemma", f"n={n}: <lambda_{a}, lambda_{b}> = {got}, expected {want}"
                )
    # w_k fixes Lambda_1 for k >= 2
    weight = lam[0]
    for k in range(2, n):
        if reflect(block, block.e(k - 1), weight) != weight:
            raise VerificationError("lambda-lemma", f"n={n}: w_{k} moves Lambda_1")


# -- Z model -----------------------------------------------------------------


@dataclass(frozen=True)
class ZModel:
    triple: CuspTriple
    group: SymmetryGroup
    orbit: OrbitSpace
    space: BilinearSpace
    n: tuple[int, int, int]
    gammas: tuple[int, int, int]

    def h_shriek(self, x: LatticeVector) -> LatticeVector:
        """Image of an orbit-space vector in the h-block."""
        coords = [Q(0)] * self.space.dim
        for label, c in zip(self.orbit.space.basis, x.coords):
            coords[self.space.index(hclass(label))] = c
        return self.space.vector(coords)

    def place(self, i: int, j: int, v: LatticeVector) -> LatticeVector:
        """Put a root-block vector into block (i, j)."""
        coords = [Q(0)] * self.space.dim
        for k, c in enumerate(v.coords, start=1):
            coords[self.space.index(exceptional(i, j, k))] = c
        return self.space.vector(coords)

    def block_of(self, label: BasisLabel):
        if label.kind is LabelKind.EXCEPTIONAL:
            return label.indices[:2]
        return "h"


def build_z_model(t: CuspTriple, G: SymmetryGroup, orbit: OrbitSpace | None = None) -> ZModel:
    orbit = orbit or build_orbit_space(t, build_milnor_lattice(t), G)
    stats = compute_stats(G)
    gammas, _ = gabrielov_numbers(t, G, stats)

    labels = [hclass(b) for b in orbit.space.basis]
    blocks = [(0, orbit.space.gram)]
    for i, gi, ni in zip(AXES, gammas, stats.n):
        if ni == 1:
            continue
        for j in range(1, gi + 1):
            blocks.append((len(labels), root_block(ni).gram))
            labels.extend(exceptional(i, j, k) for k in range(1, ni))

    g = zeros(len(labels))
    for start, block in blocks:
        for a, row in enumerate(block):
            for b, x in enumerate(row):
                g[start + a][start + b] = x
    space = BilinearSpace(tuple(labels), g)
    return ZModel(t, G, orbit, space, stats.n, gammas)


def check_block_diagonal(zm: ZModel) -> None:
    for a, la in enumerate(zm.space.basis):
        for b, lb in enumerate(zm.space.basis):
            if zm.block_of(la) != zm.block_of(lb) and zm.space.gram[a][b] != 0:
                raise VerificationError(
                    "block-diagonal", f"nonzero cross pairing between {la} and {lb}"
                )


# -- hat basis ---------------------------------------------------------------


@dataclass(frozen=True)
class HatBasis:
    model: ZModel
    delta0: LatticeVector
    delta1: LatticeVector
    arms: dict

    def labels(self) -> list[BasisLabel]:
        """B-hat in fixed order, then delta-hat_0."""
        return [center(), *(arm(*key) for key in self.arms), delta0()]

    def vectors(self) -> list[LatticeVector]:
        return [self.delta1, *self.arms.values(), self.delta0]

    def space(self) -> BilinearSpace:
        """Gram of B-hat and delta-hat_0 under <,>_Z."""
        return BilinearSpace(
            tuple(self.labels()), gram_of(self.model.space, self.vectors()), accent="hat"
        )


def build_hat_basis(t: CuspTriple, G: SymmetryGroup, zm: ZModel) -> HatBasis:
    ob = zm.orbit.space
    lam = {n: lambda_sequence(n) for n in set(zm.n) if n > 1}
    d0 = zm.h_shriek(ob.e(delta0())) / G.order
    d1 = zm.h_shriek(ob.e(center()))
    arms = {}
    for i, gi, ni in zip(AXES, zm.gammas, zm.n):
        for j in range(1, gi):
            h = zm.h_shriek(ob.e(arm(i, j)))
            if ni == 1:
                arms[(i, j, 0)] = h
                continue
            for k in range(ni):
                arms[(i, j, k)] = (
                    h / ni + zm.place(i, j, lam[ni][k]) - zm.place(i, j + 1, lam[ni][k])
                )
    return HatBasis(zm, d0, d1, arms)


def hat_closed_form(t: CuspTriple, G: SymmetryGroup) -> BilinearSpace:
    """Star diagram: center 2j_G-2, arms of -2 vertices joined by 1, delta-hat_0 null."""
    stats = compute_stats(G)
    gammas, _ = gabrielov_numbers(t, G, stats)
    labels = [center()]
    for i, gi, ni in zip(AXES, gammas, stats.n):
        labels.extend(arm(i, j, k) for j in range(1, gi) for k in range(ni))
    labels.append(delta0())
    ix = {b: n for n, b in enumerate(labels)}
    g = zeros(len(labels))
    g[0][0] = Q(2 * stats.j_G - 2)
    for i, gi, ni in zip(AXES, gammas, stats.n):
        for k in range(ni):
            for j in range(1, gi):
                a = ix[arm(i, j, k)]
                g[a][a] = Q(-2)
                nb = ix[arm(i, j + 1, k)] if j + 1 < gi else None
                if nb is not None:
                    g[a][nb] = g[nb][a] = Q(1)
            if gi >= 2:
                a = ix[arm(i, 1, k)]
                g[0][a] = g[a][0] = Q(1)
    return BilinearSpace(tuple(labels), g, accent="hat")


# -- pushforward to Y --------------------------------------------------------


def y_exceptional_space(n: tuple[int, int, int]) -> BilinearSpace:
    """Exceptional curves E^i_k of Y over the coordinate axes, one A_{n_i-1} chain each."""
    labels, blocks = [], []
    for i, ni in zip(AXES, n):
        if ni > 1:
            blocks.append((len(labels), negative_cartan_a(ni - 1)))
            labels.extend(y_exceptional(i, k) for k in range(1, ni))
    g = zeros(len(labels))
    for start, block in blocks:
        for a, row in enumerate(block):
            for b, x in enumerate(row):
                g[start + a][start + b] = x
    return BilinearSpace(tuple(labels), g)


def iota_pushforward(zm: ZModel, v: LatticeVector, target: BilinearSpace | None = None) -> LatticeVector:
    """E^i_{j,k} -> E^i_k for every j; h-classes -> 0."""
    target = target or y_exceptional_space(zm.n)
    coords = [Q(0)] * target.dim
    for label, c in zip(zm.space.basis, v.coords):
        if c and label.kind is LabelKind.EXCEPTIONAL:
            i, _, k = label.indices
            coords[target.index(y_exceptional(i, k))] += c
    return target.vector(coords)


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class HatReport:
    size: int
    expected_size: int
    rank: int
    integral: bool


def verify_hat_lemma(t: CuspTriple, G: SymmetryGroup, hb: HatBasis) -> HatReport:
    computed = hb.space()
    expected = hat_closed_form(t, G)
    if computed.basis != expected.basis:
        raise VerificationError("hat-lemma", "basis mismatch with closed form")
    for a, la in enumerate(computed.basis):
        for b, lb in enumerate(computed.basis):
            got, want = computed.gram[a][b], expected.gram[a][b]
            if got != want:
                raise VerificationError(
                    "hat-lemma",
                    f"<{computed.name(la)}, {computed.name(lb)}>_Z = {got}, closed form gives {want}",
                )

    zspace = hb.model.space
    for k in range(zspace.dim):
        if pair(zspace, hb.delta0, zspace.e(k)) != 0:
            raise VerificationError(
                "hat-radical", f"delta-hat_0 pairs nontrivially with {zspace.basis[k]}"
            )

    vectors = hb.vectors()
    dims = cohomology_dims(t, G)
    r = vectors_rank(vectors)
    if len(vectors) != dims.h3_yz or r != len(vectors):
        raise VerificationError(
            "hat-rank",
            f"{len(vectors)} vectors of rank {r}; dim H3(Y,Z) = 2 + sum n_i(gamma_i - 1) = {dims.h3_yz}",
        )

    target = y_exceptional_space(hb.model.n)
    for label, v in zip(hb.labels(), vectors):
        if not iota_pushforward(hb.model, v, target).is_zero():
            raise VerificationError("iota-kernel", f"{label.name('hat')} is not in ker iota_*")

    return HatReport(len(vectors), dims.h3_yz, r, hat_gram_is_integral(hb))


def verify_iota_image(zm: ZModel) -> int:
    """The exceptional curves of Z push forward onto a space of dimension sum(n_i - 1)."""
    target = y_exceptional_space(zm.n)
    images = [
        iota_pushforward(zm, zm.space.e(label), target)
        for label in zm.space.basis
        if label.kind is LabelKind.EXCEPTIONAL
    ]
    r = vectors_rank(images) if images else 0
    expected = sum(n - 1 for n in zm.n)
    if r != expected:
        raise VerificationError("iota-image", f"image has dimension {r}, expected {expected}")
    return r


def hat_gram_is_integral(hb: HatBasis) -> bool:
    """Diagnostic only: whether all pairings among B-hat and delta-hat_0 are integers."""
    return all(x.denominator == 1 for row in hb.space().gram for x in row)
