from fractions import Fraction

import pytest

from k3mukai.diophantine import (
    check_slope_monotonicity,
    check_stability_intervals,
    pell_for_moduli,
    pell_minimal,
)
from k3mukai.errors import NoNontrivialSolution

import oracles


def test_interval_examples():
    rep = check_stability_intervals(0)
    assert rep.ok
    kinds = [(c.kind, c.rank) for c in rep.checked_ranges]
    assert kinds == [("quotient", 1), ("extension", 1), ("extension", 2)]
    rep = check_stability_intervals(1)
    assert rep.ok
    first = rep.checked_ranges[0]
    assert (first.lower, first.upper) == (Fraction(1, 2), Fraction(2, 3))
    assert not first.closed_lower and not first.closed_upper


def test_interval_sweep_small():
    for k in range(200):
        rep = check_stability_intervals(k, record_ranges=False)
        assert rep.ok, rep.violations
        assert rep.checked_ranges == []


def test_interval_range_counts():
    rep = check_stability_intervals(4)
    counts = {}
    for c in rep.checked_ranges:
        counts[c.kind] = counts.get(c.kind, 0) + 1
    assert counts == {"quotient": 9, "destabilizer": 8, "extension": 10}


def test_extended_quotient_sweep_is_not_empty():
    # rank 2k+3 quotient slot does hold an integer in (r/2, r(k+1)/(2k+1)) for larger k,
    # which is why the quotient sweep stops at 2k+1
    k = 3
    r = 2 * k + 3
    lo, hi = Fraction(r, 2), Fraction(r * (k + 1), 2 * k + 1)
    assert any(lo < c < hi for c in range(r + 1))


def test_interval_rejects_negative():
    with pytest.raises(ValueError):
        check_stability_intervals(-1)
    with pytest.raises(ValueError):
        check_slope_monotonicity(-1)


def test_slope_monotonicity():
    assert check_slope_monotonicity(10_000)


def test_interval_brute_force_fractions():
    # independent check with Fraction comparisons for small k
    for k in range(30):
        q = 2 * k + 1
        for r in range(1, q + 1):
            assert not [c for c in range(-1, r + 2) if Fraction(r, 2) < c < Fraction(r * (k + 1), q)]
        for p in range(1, q + 2):
            lo, hi = Fraction(k + 2, q + 2), Fraction(k + 1, q)
            assert not [c for c in range(-1, p + 2) if lo <= Fraction(c, p) < hi]


@pytest.mark.parametrize("D, z, y", [(2, 3, 2), (3, 2, 1), (18, 17, 4), (61, 1766319049, 226153980)])
def test_pell_examples(D, z, y):
    sol = pell_minimal(D)
    assert (sol.z, sol.y) == (z, y)
    assert sol.to_dict() == {"D": D, "z": z, "y": y}


@pytest.mark.parametrize("D", [0, 1, 4, 49, -3])
def test_pell_rejects(D):
    with pytest.raises(NoNontrivialSolution):
        pell_minimal(D)


def test_pell_against_oracles():
    for D in range(2, 300):
        if int(D**0.5) ** 2 == D:
            continue
        sol = pell_minimal(D)
        assert sol.z**2 - D * sol.y**2 == 1
        assert (sol.z, sol.y) == oracles.chakravala(D)
        bf = oracles.brute_pell(D, min(sol.y, 5000))
        if sol.y <= 5000:
            assert bf == (sol.z, sol.y)
        else:
            assert bf is None


def test_pell_for_moduli():
    assert pell_for_moduli(10, 3).to_dict() == {"D": 18, "z": 17, "y": 4}
    assert pell_for_moduli(3, 2).D == 2
    with pytest.raises(NoNontrivialSolution):
        pell_for_moduli(5, 2)  # D = 4
