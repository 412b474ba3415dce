from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gabdyn.errors import InputError
from gabdyn.exact import (
    BilinearSpace,
    LatticeVector,
    arm,
    center,
    exceptional,
    fixed_subspace_dim,
    identity,
    negative_cartan_a,
    nullspace,
    pair,
    radical_basis,
    rank,
    reflect,
)


def a_space(n):
    return BilinearSpace(tuple(exceptional(k) for k in range(1, n + 1)), negative_cartan_a(n))


A2 = a_space(2)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def spaces(draw, max_dim=5):
    n = draw(st.integers(1, max_dim))
    g = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = draw(st.integers(-3, 3).map(Q))
    return BilinearSpace(tuple(exceptional(k) for k in range(1, n + 1)), g)


def vec(space, draw):
    return space.vector(draw(st.lists(rationals, min_size=space.dim, max_size=space.dim)))


class TestPair:
    def test_self_pairing_of_simple_root(self):
        assert pair(A2, A2.e(0), A2.e(0)) == -2

    def test_adjacent_roots(self):
        assert pair(A2, A2.e(0), A2.e(1)) == 1

    def test_zero_vector(self):
        assert pair(A2, A2.vector([Q(3, 2), -7]), A2.zero()) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            pair(A2, A2.e(0), a_space(3).e(0))

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_symmetric_and_bilinear(self, data):
        space = data.draw(spaces())
        u, v, w = (vec(space, data.draw) for _ in range(3))
        a, b = data.draw(rationals), data.draw(rationals)
        assert pair(space, u, v) == pair(space, v, u)
        assert pair(space, a * u + b * w, v) == a * pair(space, u, v) + b * pair(space, w, v)


class TestRadical:
    def test_nondegenerate_a2(self):
        assert radical_basis(A2) == []

    def test_zero_form_on_a_line(self):
        line = BilinearSpace((center(),), [[0]])
        assert radical_basis(line) == [line.e(0)]

    @settings(max_examples=60, deadline=None)
    @given(spaces())
    def test_radical_vectors_pair_to_zero(self, space):
        rad = radical_basis(space)
        assert len(rad) == space.dim - rank(space.gram)
        for r in rad:
            assert all(pair(space, r, space.e(k)) == 0 for k in range(space.dim))


class TestReflect:
    def test_root_reflects_to_negative(self):
        a1 = a_space(1)
        assert reflect(a1, a1.e(0), a1.e(0)) == -a1.e(0)

    def test_fundamental_weight_of_a2(self):
        weight = A2.vector([Q(2, 3), Q(1, 3)])
        assert reflect(A2, A2.e(0), weight).coords == (Q(-1, 3), Q(1, 3))

    def test_orthogonal_vector_is_fixed(self):
        a3 = a_space(3)
        assert reflect(a3, a3.e(0), a3.e(2)) == a3.e(2)

    def test_rejects_non_root(self):
        with pytest.raises(InputError):
            reflect(A2, A2.e(0) + A2.e(1) + A2.e(1), A2.e(0))

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_involution_and_isometry(self, data):
        n = data.draw(st.integers(1, 6))
        space = a_space(n)
        root = space.e(data.draw(st.integers(0, n - 1)))
        u, v = vec(space, data.draw), vec(space, data.draw)
        ru, rv = reflect(space, root, u), reflect(space, root, v)
        assert reflect(space, root, ru) == u
        assert pair(space, ru, rv) == pair(space, u, v)


class TestRankAndFixedSpace:
    def test_identity_rank(self):
        assert rank(identity(3)) == 3

    def test_fixed_space_of_identity(self):
        assert fixed_subspace_dim([identity(4)]) == 4

    def test_fixed_space_of_swap(self):
        swap = ((0, 1, 0), (1, 0, 0), (0, 0, 1))
        assert fixed_subspace_dim([swap]) == 2

    def test_nullspace_solves(self):
        m = [[1, 2, 3], [2, 4, 6]]
        for x in nullspace(m):
            assert all(sum(a * b for a, b in zip(row, x)) == 0 for row in m)
        assert len(nullspace(m)) == 2


@given(st.fractions().filter(lambda x: x != 0))
def test_rational_round_trip(x):
    assert x * (1 / x) == 1
    assert x.denominator > 0


class TestTypes:
    def test_duplicate_labels_rejected(self):
        with pytest.raises(InputError):
            BilinearSpace((center(), center()), [[0, 0], [0, 0]])

    def test_asymmetric_gram_rejected(self):
        with pytest.raises(InputError):
            BilinearSpace((center(), arm(1, 1)), [[0, 1], [2, 0]])

    def test_vector_length_checked(self):
        with pytest.raises(InputError):
            LatticeVector(A2, (Q(1),))

    def test_coordinates_are_normalised(self):
        v = A2.vector([Q(2, 4), 3])
        assert v.coords == (Q(1, 2), Q(3))
        assert all(isinstance(c, Q) for c in v.coords)

    def test_label_names(self):
        assert arm(3, 1, 0).name("hat") == "dhat^3_{1,0}"
        assert arm(2, 5).name() == "d^2_5"
        assert arm(3, 1, 0).slug == "arm_3_1_0"
