"""Finite abelian diagonal symmetry groups of the cusp polynomial in SL(3,C).

An element is stored as its exponent triple (a1, a2, a3) in [0,1)^3, acting
by x_i -> exp(2 pi sqrt(-1) a_i) x_i; composition is addition mod 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Q
from math import lcm
from typing import Iterable, Iterator

from .cusp import AXES, CuspTriple, milnor_number
from .errors import ConsistencyError, InputError, NotInSLError, NotSymmetryError


@dataclass(frozen=True, order=True)
class GroupElement:
    exponents: tuple[Q, Q, Q]

    def __post_init__(self):
        ex = tuple(Q(a) % 1 for a in self.exponents)
        if len(ex) != 3:
            raise InputError(f"group elements have three exponents, got {len(ex)}")
        object.__setattr__(self, "exponents", ex)

    @classmethod
    def from_ints(cls, num: Iterable[int], den: int) -> GroupElement:
        if den <= 0:
            raise InputError(f"denominator must be positive, got {den}")
        return cls(tuple(Q(a, den) for a in num))

    @classmethod
    def identity(cls) -> GroupElement:
        return cls((Q(0), Q(0), Q(0)))

    def __add__(self, other: GroupElement) -> GroupElement:
        return GroupElement(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __neg__(self) -> GroupElement:
        return GroupElement(tuple(-a for a in self.exponents))

    def __mul__(self, k: int) -> GroupElement:
        return GroupElement(tuple(a * k for a in self.exponents))

    @property
    def is_identity(self) -> bool:
        return not any(self.exponents)

    @property
    def order(self) -> int:
        return lcm(*(a.denominator for a in self.exponents))

    def exponent_sum(self) -> Q:
        return sum(self.exponents, Q(0))

    def shifts(self, t: CuspTriple) -> tuple[int, int, int]:
        """a_i = gamma'_i * alpha_i, the arm rotation amounts."""
        out = []
        for i, a in zip(AXES, self.exponents):
            s = a * t[i]
            if s.denominator != 1:
                raise NotSymmetryError(self.exponents, t.gamma_prime, i)
            out.append(int(s))
        return tuple(out)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.exponents) + ")"


def age(g: GroupElement) -> int:
    s = g.exponent_sum()
    if s.denominator != 1:
        raise NotInSLError(g.exponents, s)
    return int(s)


def fixed_dim(g: GroupElement) -> int:
    return sum(1 for a in g.exponents if a == 0)


def check_symmetry(t: CuspTriple, g: GroupElement) -> None:
    """Raise unless g lies in SL(3,C) and preserves every monomial of f."""
    age(g)
    g.shifts(t)


@dataclass(frozen=True)
class SymmetryGroup:
    triple: CuspTriple
    elements: tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in set(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def describe(self) -> str:
        return "{" + ", ".join(map(str, self.elements)) + "}"


def _closure(elements: Iterable[GroupElement], gens: Iterable[GroupElement]) -> frozenset:
    group = set(elements) | {GroupElement.identity()}
    gens = list(gens)
    frontier = list(group)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y not in group:
                    group.add(y)
                    new.append(y)
        frontier = new
    return frozenset(group)


def close_generators(t: CuspTriple, gens: Iterable[GroupElement]) -> SymmetryGroup:
    gens = list(gens)
    for g in gens:
        check_symmetry(t, g)
    return SymmetryGroup(t, tuple(_closure((), gens)))


def trivial_group(t: CuspTriple) -> SymmetryGroup:
    return SymmetryGroup(t, (GroupElement.identity(),))


@dataclass(frozen=True)
class GroupStats:
    order: int
    n: tuple[int, int, int]
    j_G: int
    age_table: tuple[tuple[GroupElement, int, int], ...]
    identity_holds: bool

    @property
    def age_one_count(self) -> int:
        return sum(1 for _, a, _ in self.age_table if a == 1)


def compute_stats(G: SymmetryGroup) -> GroupStats:
    table = tuple((g, age(g), fixed_dim(g)) for g in G)
    n = tuple(sum(1 for g in G if g.exponents[i] == 0) for i in range(3))
    j = sum(1 for _, a, N in table if a == 1 and N == 0)
    holds = G.order == 1 + 2 * j + sum(x - 1 for x in n)
    if not holds:
        raise ConsistencyError(
            f"order identity fails for {G.describe()}: |G| = {G.order}, "
            f"j_G = {j}, n = {n}"
        )
    return GroupStats(G.order, n, j, table, holds)


def gabrielov_numbers(t: CuspTriple, G: SymmetryGroup, stats: GroupStats | None = None):
    """Per-axis gamma_i = gamma'_i / |G/K_i| and the multiset with ones omitted."""
    stats = stats or compute_stats(G)
    gammas = []
    for i, n in zip(AXES, stats.n):
        quotient = G.order // n
        if G.order % n or t[i] % quotient:
            raise ConsistencyError(
                f"|G/K_{i}| = {Q(G.order, n)} does not divide gamma'_{i} = {t[i]}"
            )
        gammas.append(t[i] // quotient)
    multiset = tuple(
        g for g, n in zip(gammas, stats.n) for _ in range(n) if g != 1
    )
    return tuple(gammas), multiset


@dataclass(frozen=True)
class CohomologyDims:
    h2_y: int
    h4_y: int
    h2_yz: int
    h3_yz: int
    h2_v_invariant: int
    milnor_number: int

    def as_dict(self) -> dict[str, int]:
        return {
            "H2(Y)": self.h2_y,
            "H4(Y)": self.h4_y,
            "H2(Y,Z)": self.h2_yz,
            "H3(Y,Z)": self.h3_yz,
            "H2(V)^G": self.h2_v_invariant,
            "mu'": self.milnor_number,
        }


def cohomology_dims(t: CuspTriple, G: SymmetryGroup, stats: GroupStats | None = None) -> CohomologyDims:
    stats = stats or compute_stats(G)
    gammas, _ = gabrielov_numbers(t, G, stats)
    n = stats.n
    return CohomologyDims(
        h2_y=stats.j_G + sum(x - 1 for x in n),
        h4_y=stats.j_G,
        h2_yz=stats.j_G,
        h3_yz=2 + sum(ni * (gi - 1) for ni, gi in zip(n, gammas)),
        h2_v_invariant=2 + sum(gi - 1 for gi in gammas),
        milnor_number=milnor_number(t),
    )


def maximal_symmetry_elements(t: CuspTriple) -> list[GroupElement]:
    """All diagonal symmetries of f inside SL(3,C); at most gamma'_1 gamma'_2 gamma'_3 of them."""
    p, q, r = t.gamma_prime
    out = []
    for a, b, c in itertools.product(range(p), range(q), range(r)):
        ex = (Q(a, p), Q(b, q), Q(c, r))
        if sum(ex).denominator == 1:
            out.append(GroupElement(ex))
    return sorted(out)


def enumerate_symmetry_groups(t: CuspTriple, max_order: int) -> list[SymmetryGroup]:
    """Every subgroup of the maximal symmetry group with order <= max_order.

    Grows subgroups one generator at a time, so every subgroup is reached
    through a chain of smaller ones.  Exponential in general.
    """
    if max_order < 1:
        raise InputError(f"max_order must be at least 1, got {max_order}")
    ambient = maximal_symmetry_elements(t)
    trivial = frozenset([GroupElement.identity()])
    seen = {trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for H in frontier:
            for g in ambient:
                if g in H:
                    continue
                K = _closure(H, [g])
                if len(K) <= max_order and K not in seen:
                    seen.add(K)
                    new.append(K)
        frontier = new
    groups = [SymmetryGroup(t, tuple(H)) for H in seen]
    return sorted(groups, key=lambda G: (G.order, G.elements))
