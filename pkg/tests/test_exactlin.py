import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgeindex.exactlin import (
    Inertia,
    charpoly,
    congruence,
    det,
    inertia_charpoly,
    inertia_ldlt,
    solve_linear,
)


def leibniz_det(m):
    """Brute-force determinant over all permutations."""
    n = len(m)
    total = F(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = F(1)
        for i, p in enumerate(perm):
            prod *= m[i][p]
        total += -prod if inv % 2 else prod
    return total


def identity(n):
    return [[F(int(i == j)) for j in range(n)] for i in range(n)]


def diag(*vals):
    return [[F(vals[i]) if i == j else F(0) for j in range(len(vals))] for i in range(len(vals))]


HYPERBOLIC = [[F(0), F(1, 3)], [F(1, 3), F(0)]]


@pytest.mark.parametrize(
    "m, expected",
    [(identity(3), F(1)), (HYPERBOLIC, F(-1, 9)), ([[F(1, 8)]], F(1, 8))],
)
def test_det_examples(m, expected):
    assert det(m) == expected


@pytest.mark.parametrize(
    "m, expected",
    [([[F(1, 8)]], (1, 0, 0)), (HYPERBOLIC, (1, 1, 0)), (diag(1, -2, 0), (1, 1, 1))],
)
def test_inertia_ldlt_examples(m, expected):
    assert inertia_ldlt(m).as_tuple() == expected


@pytest.mark.parametrize(
    "m, expected",
    [(HYPERBOLIC, (1, 1, 0)), (identity(2), (2, 0, 0)), (diag(5, -1), (1, 1, 0))],
)
def test_inertia_charpoly_examples(m, expected):
    assert inertia_charpoly(m).as_tuple() == expected


def test_inertia_signature_and_dimension():
    i = Inertia(3, 1, 2)
    assert i.signature == 2
    assert i.dimension == 6


def test_ldlt_anti_diagonal_needs_hyperbolic_blocks():
    # all-zero diagonal from the first step on
    m = [[F(int(i + j == 4)) for j in range(5)] for i in range(5)]
    assert inertia_ldlt(m).as_tuple() == (3, 2, 0)
    assert inertia_charpoly(m).as_tuple() == (3, 2, 0)


def test_charpoly_of_companion_like_matrix():
    m = [[F(2), F(1)], [F(1), F(2)]]
    # (t-1)(t-3) = t^2 - 4t + 3
    assert charpoly(m) == [3, -4, 1]


def random_symmetric(rng, n, lo=-4, hi=4, rational=False):
    m = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = F(rng.randint(lo, hi), rng.randint(1, 6) if rational else 1)
            m[i][j] = m[j][i] = v
    return m


@pytest.mark.parametrize("seed", range(40))
def test_ldlt_matches_charpoly_random(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 10)
    m = random_symmetric(rng, n, rational=seed % 2 == 0)
    if seed % 5 == 0:
        # force zeros on the diagonal
        for i in range(n):
            m[i][i] = F(0)
    assert inertia_ldlt(m) == inertia_charpoly(m)


@pytest.mark.parametrize("seed", range(10))
def test_sylvester_law_of_inertia(seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(2, 12)
    m = random_symmetric(rng, n)
    while True:
        p = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if det(p) != 0:
            break
    assert inertia_ldlt(congruence(m, p)) == inertia_ldlt(m)


@given(
    st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), min_size=n, max_size=n), min_size=n, max_size=n)
    )
)
@settings(max_examples=60, deadline=None)
def test_det_matches_leibniz(m):
    assert det(m) == leibniz_det(m)


@given(st.integers(1, 6), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_det_sign_matches_negative_count(n, rng):
    m = random_symmetric(rng, n, rational=True)
    i = inertia_ldlt(m)
    d = det(m)
    if i.zero == 0:
        assert (d > 0) == (i.negative % 2 == 0)
    else:
        assert d == 0


def test_solve_unique():
    sol = solve_linear([[3, 0, 0], [0, 3, 0], [0, 0, 3]], [1, 1, 1])
    assert sol.particular == (F(1, 3),) * 3
    assert sol.kernel == ()
    assert sol.unique


def test_solve_underdetermined():
    sol = solve_linear([[1, 1]], [1])
    x, y = sol.particular
    assert x + y == 1
    assert len(sol.kernel) == 1
    kx, ky = sol.kernel[0]
    assert kx + ky == 0 and (kx, ky) != (0, 0)


def test_solve_inconsistent():
    sol = solve_linear([[0]], [1])
    assert not sol.consistent


@given(st.integers(1, 5), st.integers(1, 5), st.randoms(use_true_random=False))
@settings(max_examples=50, deadline=None)
def test_solve_residual_and_kernel(rows, cols, rng):
    a = [[F(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)]
    x0 = [F(rng.randint(-3, 3)) for _ in range(cols)]
    b = [sum(ai * xi for ai, xi in zip(row, x0)) for row in a]
    sol = solve_linear(a, b)
    assert sol.consistent
    for row, bi in zip(a, b):
        assert sum(ai * xi for ai, xi in zip(row, sol.particular)) == bi
    for k in sol.kernel:
        assert all(sum(ai * ki for ai, ki in zip(row, k)) == 0 for row in a)
