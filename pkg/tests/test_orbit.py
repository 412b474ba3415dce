from fractions import Fraction as Q

import pytest

from gabdyn.cusp import CuspTriple, build_milnor_lattice
from gabdyn.exact import arm, center, delta0, pair
from gabdyn.orbit import (
    build_orbit_space,
    orbit_basis,
    orbit_closed_form,
    orbit_pairing,
    verify_orbit_lemma,
)
from gabdyn.symmetry import enumerate_symmetry_groups


def test_case_c_center_is_isotropic(case_c):
    t, lat, G = case_c
    d1 = lat.space.e(center())
    # -2 + 1 + 1 = 0
    assert orbit_pairing(t, lat, G, d1, d1) == 0


def test_case_half_third_arm(case_half):
    t, lat, G = case_half
    d = lat.space.e(arm(3, 1))
    assert orbit_pairing(t, lat, G, d, d) == -4


def test_case_b_gram(case_b):
    t, lat, G = case_b
    W = build_orbit_space(t, lat, G).space
    assert W.basis == (center(), arm(3, 1), arm(3, 2), arm(3, 3), delta0())
    assert W.gram == (
        (-2, 4, 0, 0, 0),
        (4, -8, 4, 0, 0),
        (0, 4, -8, 4, 0),
        (0, 0, 4, -8, 0),
        (0, 0, 0, 0, 0),
    )


def test_case_c_gram(case_c):
    t, lat, G = case_c
    W = build_orbit_space(t, lat, G).space
    assert W.dim == 5
    assert W.entry(center(), center()) == 0
    assert all(W.entry(arm(i, 1), arm(i, 1)) == -2 for i in (1, 2, 3))
    assert all(W.entry(center(), arm(i, 1)) == 1 for i in (1, 2, 3))


def test_delta0_row_vanishes(case_b):
    t, lat, G = case_b
    W = build_orbit_space(t, lat, G).space
    assert all(x == 0 for x in W.gram[W.index(delta0())])


def test_trivial_group_is_milnor_form(case_trivial):
    t, lat, G = case_trivial
    W = build_orbit_space(t, lat, G).space
    s = lat.space
    for a in W.basis:
        for b in W.basis:
            ua = lat.delta0 if a == delta0() else s.e(a)
            ub = lat.delta0 if b == delta0() else s.e(b)
            assert W.entry(a, b) == pair(s, ua, ub)


def test_basis_drops_arms_with_gamma_one(case_b):
    t, _, G = case_b
    assert [b for b in orbit_basis(t, G) if b.indices and b.indices[0] in (1, 2)] == []


@pytest.mark.parametrize("gamma", [(4, 4, 4), (6, 6, 6), (3, 3, 4), (2, 3, 7)])
def test_lemma_on_every_subgroup(gamma):
    t = CuspTriple(gamma)
    lat = build_milnor_lattice(t)
    for G in enumerate_symmetry_groups(t, 12):
        orbit = build_orbit_space(t, lat, G)
        assert orbit.space.gram == orbit_closed_form(t, G).gram
        report = verify_orbit_lemma(t, lat, G, orbit)
        assert report.dim == orbit.space.dim


def test_pairing_is_symmetric(case_half):
    t, lat, G = case_half
    s = lat.space
    for a in range(s.dim):
        for b in range(a, s.dim):
            x = orbit_pairing(t, lat, G, s.e(a), s.e(b))
            assert x == orbit_pairing(t, lat, G, s.e(b), s.e(a))
            assert isinstance(x, Q)
