from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from quadcubics.arith import (
    alternating_M,
    double_factorial,
    epsilon,
    lin_prod,
    orientation_constants,
)
from quadcubics.errors import DomainError


@pytest.mark.parametrize("m, want", [(1, 1), (5, 15), (13, 135135)])
def test_double_factorial_examples(m, want):
    assert double_factorial(m) == want


@given(st.integers(0, 60).map(lambda k: 2 * k + 1))
def test_double_factorial_matches_loop(m):
    assert double_factorial(m) == prod(range(1, m + 1, 2))


@pytest.mark.parametrize("m", [0, 2, -1, -3])
def test_double_factorial_rejects(m):
    with pytest.raises(DomainError):
        double_factorial(m)


@pytest.mark.parametrize("a, want", [(1, 1), (3, -1), (35, -1), (5, 1), (-1, -1), (-3, 1)])
def test_epsilon(a, want):
    assert epsilon(a) == want


def test_epsilon_even_raises():
    with pytest.raises(DomainError):
        epsilon(4)


@given(st.integers(-500, 500).map(lambda k: 2 * k + 1), st.integers(-500, 500).map(lambda k: 2 * k + 1))
def test_epsilon_multiplicative(a, b):
    assert epsilon(a * b) == epsilon(a) * epsilon(b)


def test_orientation_constants_examples():
    c5 = orientation_constants(5)
    assert (c5.N, c5.M, c5.K) == (70, 35, 6)
    assert orientation_constants(9).M == 117


@pytest.mark.parametrize("m", range(3, 30))
def test_alternating_sum_matches_closed_form(m):
    # independent binomial evaluation of the defining alternating sum
    N = lambda k: comb(k + 3, 4) if k >= 0 else 0
    assert N(m) - 3 * N(m - 2) + 2 * N(m - 3) == (3 * m - 1) * m // 2 == alternating_M(m)


def test_orientation_constants_domain():
    with pytest.raises(DomainError):
        orientation_constants(2)


def test_lin_prod_empty():
    assert lin_prod([]) == 1
    assert lin_prod(iter([2, 3, 7])) == 42
