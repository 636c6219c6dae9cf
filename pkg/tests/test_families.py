from math import gcd

import pytest

from k3mukai.actions import PhiConfig, phi_on_mukai, rank_two_spherical
from k3mukai.errors import AdmissibilityError, InvalidGenus
from k3mukai.families import (
    FamilyInstance,
    build_family_instance,
    enumerate_families,
    family_vector,
    hilbert_scheme_n,
    markman_instances,
)
from k3mukai.lattice import mukai_pairing, n_from_v, square_norm, vec

import oracles


def test_delta_can_be_smaller_than_gcd():
    inst = build_family_instance(11, 1)
    assert inst.delta == 3 and gcd(inst.n - 1, inst.g - 1) == 9


def test_first_family_example():
    inst = build_family_instance(2, 0)
    assert (inst.g, inst.v, inst.n, inst.delta) == (10, vec(1, 1, 7), 3, 1)
    assert inst.dim == 6 and not inst.k3_moduli


def test_rank_three_example():
    inst = build_family_instance(5, 1)
    assert (inst.g, inst.v, inst.n, inst.delta) == (22, vec(3, 2, 27), 4, 3)


def test_inadmissible_raises():
    with pytest.raises(AdmissibilityError) as exc:
        build_family_instance(1, 1)
    assert exc.value.v_squared == -2 and exc.value.g0 == 1 and exc.value.k == 1
    with pytest.raises(ValueError):
        build_family_instance(0, 0)
    with pytest.raises(ValueError):
        build_family_instance(3, -1)


def test_boundary_is_k3():
    inst = build_family_instance(2, 1)
    assert inst.v_squared == 0 and inst.k3_moduli and inst.n == 1


@pytest.mark.parametrize("g, n", [(10, 3), (6, 2), (2, 1), (22, 6)])
def test_hilbert_scheme_n(g, n):
    assert hilbert_scheme_n(g) == n


@pytest.mark.parametrize("g", [8, 7, 12])
def test_hilbert_scheme_n_needs_2_mod_4(g):
    with pytest.raises(InvalidGenus):
        hilbert_scheme_n(g)


def test_hilbert_matches_rank_one_vector():
    # k = 0: v = (1, 1, 3 g0 + 1) on g = 4 g0 + 2; g0 = 0 only through family_vector
    assert square_norm(family_vector(0, 0), 2) == 0
    for g0 in range(1, 200):
        inst = build_family_instance(g0, 0)
        assert hilbert_scheme_n(inst.g) == inst.n == n_from_v(inst.v, inst.g)


@pytest.mark.parametrize("g, r", [(3, 1), (5, 2), (10, 3)])
def test_markman_examples(g, r):
    rows = {m.r: m for m in markman_instances(g)}
    assert rows[r].regular and rows[r].v == vec(r, 1, r)
    assert rows[r].dim == 2 * g - 2 * r * r
    # only one regular r per genus
    assert [m.r for m in rows.values() if m.regular] == [r]


def test_markman_dims_and_fixedness():
    for g in range(2, 120):
        cfg = PhiConfig(vec(1, 0, 1), 0, g)
        for m in markman_instances(g):
            assert m.dim >= 0
            assert phi_on_mukai(cfg, m.v) == m.v


def test_enumerate_examples():
    got = enumerate_families(2, 0)
    assert [(i.g0, i.k) for i in got] == [(1, 0), (2, 0)]
    got = enumerate_families(1, 5)
    assert [(i.g0, i.k) for i in got] == [(1, 0)]
    assert enumerate_families(0, 0) == []
    got = enumerate_families(6, 2)
    assert [(i.g0, i.k) for i in got] == [
        (1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (4, 0), (4, 1), (5, 0), (5, 1), (6, 0), (6, 1), (6, 2)
    ]


def test_family_invariants_on_grid():
    for inst in enumerate_families(60, 7):
        g, v, k = inst.g, inst.v, inst.k
        s = rank_two_spherical(g)
        assert mukai_pairing(s, v, g) == -(2 * k + 1)
        assert oracles.pair(v.as_tuple(), v.as_tuple(), g) == inst.v_squared
        assert inst.v_squared == 2 * (inst.g0 - k * (k + 1))
        # delta = gcd(2k+1, n-1) = gcd(2k+1, g-1); it divides gcd(n-1, g-1) but can be smaller
        assert inst.delta == gcd(2 * k + 1, inst.n - 1) == gcd(2 * k + 1, g - 1)
        assert gcd(inst.n - 1, g - 1) % inst.delta == 0
        assert oracles.is_primitive(v.as_tuple())
        assert phi_on_mukai(PhiConfig(s, 1, g), v) == v
        assert FamilyInstance.from_dict(inst.to_dict()) == inst
