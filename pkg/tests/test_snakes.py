from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from oracles import majority_cycle_exists, snakes_by_definition
from rhombus_csd.lambda_core import InversionSet
from rhombus_csd.snakes import (
    LinearOrder, is_compatible_order, is_condorcet_domain, order_inversions, parse_order,
    sigma,
)
from rhombus_csd.tiling import anti_standard, enumerate_all, opposite, restrict, standard


def test_order_inversions_examples():
    assert order_inversions((1, 2, 3, 4, 5)) == frozenset()
    assert len(order_inversions((5, 4, 3, 2, 1))) == 10
    assert order_inversions((3, 4, 2, 1, 5)) == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)}
    with pytest.raises(ValueError):
        order_inversions((1, 1, 2))


def test_linear_order_helpers():
    o = parse_order("3,4,2,1,5")
    assert str(o) == "3,4,2,1,5"
    assert o.reversed().seq == (5, 1, 2, 4, 3)
    assert o.restrict((2, 4, 5)).seq == (2, 1, 3)
    assert LinearOrder.identity(4).pair_inv == frozenset()
    assert len(LinearOrder.reversal(4).pair_inv) == 6
    with pytest.raises(ValueError):
        parse_order("1,x,2")


def test_compatibility_examples():
    for n in (3, 4, 5):
        for T in enumerate_all(n):
            assert is_compatible_order(LinearOrder.identity(n), T)
            assert is_compatible_order(LinearOrder.reversal(n), T)
    assert is_compatible_order((3, 4, 2, 1, 5), standard(5))


def test_anti_standard_three_colors():
    domain = sigma(anti_standard(3))
    assert [o.seq for o in domain] == [(1, 2, 3), (1, 3, 2), (3, 1, 2), (3, 2, 1)]
    inv = sorted((sorted(o.pair_inv) for o in domain), key=len)
    assert inv == [[], [(2, 3)], [(1, 3), (2, 3)], [(1, 2), (1, 3), (2, 3)]]


def test_standard_three_colors():
    assert len(sigma(standard(3))) == 4


@pytest.mark.parametrize("n", [3, 4, 5])
def test_sigma_matches_definition_oracle(n):
    for T in enumerate_all(n):
        expected = snakes_by_definition(n, set(T))
        assert [o.seq for o in sigma(T)] == expected


@pytest.mark.parametrize("n", [3, 4, 5])
def test_sigma_is_condorcet_and_reverses(n):
    for T in enumerate_all(n):
        domain = sigma(T)
        assert is_condorcet_domain(domain)
        assert {o.reversed() for o in domain} == set(sigma(opposite(T)))


@pytest.mark.parametrize("n", [4, 5])
def test_snake_restrictions_are_snakes(n):
    for T in enumerate_all(n):
        for o in sigma(T):
            for K in combinations(range(1, n + 1), 3):
                assert is_compatible_order(o.restrict(K), restrict(T, K))


def test_condorcet_examples():
    v = is_condorcet_domain([(1, 2, 3), (2, 3, 1), (3, 1, 2)])
    assert not v
    cand, trio = v.witness
    assert cand == (1, 2, 3) and len(trio) == 3
    assert is_condorcet_domain([(1, 2, 3)])
    assert is_condorcet_domain([(1, 2, 3), (3, 2, 1)])
    assert is_condorcet_domain([])


@given(st.lists(st.permutations([1, 2, 3, 4]), min_size=1, max_size=7))
def test_condorcet_check_matches_brute_force(orders):
    assert bool(is_condorcet_domain(orders)) == (not majority_cycle_exists(orders))


def test_sigma_cap():
    with pytest.raises(ValueError):
        sigma(InversionSet(10, 0))
