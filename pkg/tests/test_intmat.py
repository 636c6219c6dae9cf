import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from k3mukai.intmat import (
    determinant,
    discriminant_group,
    hermite_kernel,
    hermite_normal_form,
    identity,
    matmul,
    smith_normal_form,
    transpose,
)

import oracles

entries = st.integers(min_value=-60, max_value=60)


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)


def test_kernel_of_pairing_functional():
    # v = (1,1,7) on g = 10 gives the functional [-7, 18, -1] on (r, c, s)
    k = hermite_kernel([[-7, 18, -1]])
    basis = [tuple(col) for col in zip(*k)]
    assert basis == [(1, 0, -7), (0, 1, 18)]


def test_kernel_with_reordered_functional():
    # the same functional written on (c, r, s)
    k = hermite_kernel([[18, -7, -1]])
    basis = {tuple(col) for col in zip(*k)}
    assert len(basis) == 2
    for b in basis:
        assert 18 * b[0] - 7 * b[1] - b[2] == 0


def test_kernel_trivial_cases():
    assert hermite_kernel([[0, 0, 0]]) == identity(3)
    assert hermite_kernel([], ncols=3) == identity(3)
    assert hermite_kernel(identity(3)) == [[], [], []]


def _check_kernel(m):
    n = len(m[0])
    k = hermite_kernel(m)
    cols = list(zip(*k)) if k and k[0] else []
    for col in cols:
        assert all(sum(a * b for a, b in zip(row, col)) == 0 for row in m)
    # rank-nullity over Q
    rank = sum(1 for d in oracles.snf_sympy(m) if d)
    assert len(cols) == n - rank
    # saturated: every invariant factor of the basis matrix is 1
    if cols:
        assert smith_normal_form([list(c) for c in cols]) == (1,) * len(cols)


@settings(max_examples=200)
@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_kernel_properties(nr, nc, data):
    m = data.draw(st.lists(st.lists(entries, min_size=nc, max_size=nc), min_size=nr, max_size=nr))
    _check_kernel(m)


def test_kernel_saturation_on_non_primitive_functional():
    # 6x + 10y + 14z = 0: kernel must be saturated even though the row is not primitive
    _check_kernel([[6, 10, 14]])


@pytest.mark.parametrize(
    "m, expected",
    [
        ([[2]], (2,)),
        ([[2, 10], [10, 14]], (2, 36)),
        (identity(3), (1, 1, 1)),
        ([[0, 0], [0, 0]], (0, 0)),
        ([[2, 4], [4, 8]], (2, 0)),
    ],
)
def test_snf_examples(m, expected):
    assert smith_normal_form(m) == expected


def test_discriminant_group_examples():
    assert discriminant_group([[2]]) == (2,)
    assert discriminant_group([[2, 10], [10, 14]]) == (2, 36)
    assert discriminant_group(identity(3)) == ()
    with pytest.raises(ValueError):
        discriminant_group([[0]])


def _check_snf(m):
    d = smith_normal_form(m)
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    prod = 1
    for x in d:
        prod *= x
    assert prod == abs(determinant(m))
    assert sorted(d) == oracles.snf_sympy(m)


@settings(max_examples=150)
@given(square(2))
def test_snf_random_2x2(m):
    _check_snf(m)


@settings(max_examples=150)
@given(square(3))
def test_snf_random_3x3(m):
    _check_snf(m)


def test_snf_divisibility_chain_randomized():
    rng = random.Random(7)
    for n in (2, 3):
        for _ in range(300):
            m = [[rng.randint(-30, 30) for _ in range(n)] for _ in range(n)]
            d = smith_normal_form(m)
            nz = [x for x in d if x]
            assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
            assert d[: len(nz)] == tuple(nz)


def test_hnf_is_canonical_for_equal_lattices():
    a = [[1, 0, -7], [0, 1, 18]]
    b = [[1, 1, 11], [2, 1, 4]]  # unimodular recombination of a
    assert hermite_normal_form(a) == hermite_normal_form(b) == a


def test_determinant_against_sympy():
    rng = random.Random(3)
    import sympy

    for n in range(1, 5):
        for _ in range(30):
            m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert determinant(m) == sympy.Matrix(m).det()


def test_matmul_and_transpose():
    a = [[1, 2], [3, 4]]
    assert matmul(a, identity(2)) == a
    assert transpose(transpose(a)) == a
    assert list(itertools.chain(*transpose(a))) == [1, 3, 2, 4]
