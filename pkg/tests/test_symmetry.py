from fractions import Fraction as Q

import pytest

from conftest import element, group
from gabdyn.cusp import CuspTriple, milnor_number
from gabdyn.errors import NotInSLError, NotSymmetryError
from gabdyn.symmetry import (
    age,
    close_generators,
    cohomology_dims,
    compute_stats,
    enumerate_symmetry_groups,
    fixed_dim,
    gabrielov_numbers,
)

from oracles import span_by_combinations, subgroups_by_pairs

ORDER_TRIPLES = [(4, 4, 4), (6, 6, 6), (2, 3, 7), (3, 3, 4)]


class TestClosure:
    def test_cyclic_order_four(self):
        _, G = group((4, 4, 4), (Q(1, 4), Q(3, 4), 0))
        want = span_by_combinations([(Q(1, 4), Q(3, 4), Q(0))])
        assert G.order == 4
        assert {g.exponents for g in G} == want

    def test_two_generators_match_oracle(self):
        gens = [(Q(1, 2), Q(1, 2), Q(0)), (Q(0), Q(1, 2), Q(1, 2))]
        _, G = group((4, 4, 4), *gens)
        assert {g.exponents for g in G} == span_by_combinations(gens, order_cap=4)
        assert G.order == 4

    def test_no_generators(self):
        _, G = group((2, 3, 7))
        assert G.order == 1 and G.elements[0].is_identity

    def test_not_in_sl(self):
        with pytest.raises(NotInSLError, match="not in SL"):
            group((2, 3, 7), (Q(1, 2), Q(1, 3), 0))

    def test_not_a_symmetry(self):
        with pytest.raises(NotSymmetryError, match="not a symmetry"):
            group((2, 3, 7), (Q(1, 3), Q(2, 3), 0))

    def test_lexicographic_order(self):
        _, G = group((6, 6, 6), (Q(2, 3), Q(2, 3), Q(2, 3)))
        assert [str(g) for g in G] == ["(0,0,0)", "(1/3,1/3,1/3)", "(2/3,2/3,2/3)"]


@pytest.mark.parametrize(
    "exps, a, N",
    [
        ((0, 0, 0), 0, 3),
        ((Q(1, 3), Q(1, 3), Q(1, 3)), 1, 0),
        ((Q(2, 3), Q(2, 3), Q(2, 3)), 2, 0),
        ((Q(1, 4), Q(3, 4), 0), 1, 1),
    ],
)
def test_age_and_fixed_dim(exps, a, N):
    g = element(*exps)
    assert age(g) == a
    assert fixed_dim(g) == N


class TestStats:
    def test_case_b(self):
        _, G = group((4, 4, 4), (Q(1, 4), Q(3, 4), 0))
        s = compute_stats(G)
        assert (s.order, s.n, s.j_G) == (4, (1, 1, 4), 0)
        assert s.identity_holds

    def test_case_c(self):
        _, G = group((6, 6, 6), (Q(1, 3), Q(1, 3), Q(1, 3)))
        s = compute_stats(G)
        assert (s.order, s.n, s.j_G) == (3, (1, 1, 1), 1)
        assert [a for _, a, _ in s.age_table] == [0, 1, 2]

    def test_trivial(self):
        _, G = group((2, 3, 7))
        s = compute_stats(G)
        assert (s.order, s.n, s.j_G) == (1, (1, 1, 1), 0)


class TestGabrielov:
    def test_case_b(self):
        t, G = group((4, 4, 4), (Q(1, 4), Q(3, 4), 0))
        assert gabrielov_numbers(t, G) == ((1, 1, 4), (4, 4, 4, 4))

    def test_case_c(self):
        t, G = group((6, 6, 6), (Q(1, 3), Q(1, 3), Q(1, 3)))
        assert gabrielov_numbers(t, G) == ((2, 2, 2), (2, 2, 2))

    def test_half(self):
        t, G = group((4, 4, 4), (Q(1, 2), Q(1, 2), 0))
        assert gabrielov_numbers(t, G) == ((2, 2, 4), (2, 2, 4, 4))

    @pytest.mark.parametrize("gamma", [(2, 3, 7), (4, 4, 4), (5, 6, 7)])
    def test_trivial_group_gives_gamma_prime(self, gamma):
        t, G = group(gamma)
        assert gabrielov_numbers(t, G) == (gamma, gamma)


class TestDims:
    def test_case_b(self):
        t, G = group((4, 4, 4), (Q(1, 4), Q(3, 4), 0))
        d = cohomology_dims(t, G)
        assert (d.h2_y, d.h4_y, d.h3_yz, d.h2_v_invariant) == (3, 0, 14, 5)

    def test_case_c(self):
        t, G = group((6, 6, 6), (Q(1, 3), Q(1, 3), Q(1, 3)))
        d = cohomology_dims(t, G)
        assert (d.h2_y, d.h4_y, d.h3_yz, d.h2_v_invariant) == (1, 1, 5, 5)

    def test_trivial_collapses_to_milnor_number(self):
        t, G = group((2, 3, 7))
        d = cohomology_dims(t, G)
        assert (d.h2_y, d.h4_y, d.h2_yz) == (0, 0, 0)
        assert d.h3_yz == d.h2_v_invariant == milnor_number(t) == 11


class TestEnumeration:
    def test_237_only_trivial(self):
        groups = enumerate_symmetry_groups(CuspTriple((2, 3, 7)), 100)
        assert len(groups) == 1 and groups[0].is_trivial()

    def test_order_one(self):
        groups = enumerate_symmetry_groups(CuspTriple((6, 6, 6)), 1)
        assert len(groups) == 1 and groups[0].is_trivial()

    def test_444_small_groups(self):
        t = CuspTriple((4, 4, 4))
        found = {frozenset(g.exponents for g in G) for G in enumerate_symmetry_groups(t, 4)}
        assert found == subgroups_by_pairs(4, 4, 4, 4)
        assert len(found) == 11
        for gens in [
            [(Q(1, 2), Q(1, 2), Q(0))],
            [(Q(0), Q(1, 2), Q(1, 2))],
            [(Q(1, 4), Q(3, 4), Q(0))],
            [(Q(3, 4), Q(0), Q(1, 4))],
        ]:
            assert frozenset(span_by_combinations(gens)) in found

    @pytest.mark.parametrize(
        "gamma, count", [((4, 4, 4), 15), ((6, 6, 6), 30), ((3, 3, 4), 2), ((2, 3, 7), 1)]
    )
    def test_matches_pair_generated_oracle(self, gamma, count):
        groups = enumerate_symmetry_groups(CuspTriple(gamma), 36)
        found = {frozenset(g.exponents for g in G) for G in groups}
        assert found == subgroups_by_pairs(*gamma, 36)
        assert len(groups) == count

    def test_deterministic(self):
        t = CuspTriple((6, 6, 6))
        assert enumerate_symmetry_groups(t, 12) == enumerate_symmetry_groups(t, 12)


@pytest.mark.parametrize("gamma", ORDER_TRIPLES)
def test_group_invariants_on_every_subgroup(gamma):
    t = CuspTriple(gamma)
    for G in enumerate_symmetry_groups(t, 36):
        s = compute_stats(G)
        assert G.order == 1 + 2 * s.j_G + sum(n - 1 for n in s.n)
        assert s.age_one_count == s.j_G + sum(n - 1 for n in s.n)
        gammas, _ = gabrielov_numbers(t, G, s)
        for i, gi in enumerate(gammas, start=1):
            assert gi >= 1 and t[i] % gi == 0
        ages = {g: a for g, a, _ in s.age_table}
        for g, a, N in s.age_table:
            if not g.is_identity:
                assert a + ages[-g] == 3 - N


def test_closure_rejects_before_building():
    t = CuspTriple((4, 4, 4))
    with pytest.raises(NotSymmetryError):
        close_generators(t, [element(Q(1, 8), Q(7, 8), 0)])
