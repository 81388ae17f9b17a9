from collections import Counter
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import lex_triples
from rhombus_csd.lambda_core import (
    InversionSet, Triple, lambda_space, max_n, parse_triple, restriction_map, sticks,
    triple_rank, triple_unrank,
)


@pytest.mark.parametrize("t, n, expected", [
    ((1, 2, 3), 4, 0),
    ((2, 3, 4), 4, 3),
    ((1, 3, 5), 5, 4),
])
def test_triple_rank_examples(t, n, expected):
    assert triple_rank(t, n) == expected


@pytest.mark.parametrize("n", range(3, 9))
def test_rank_matches_lex_listing_and_round_trips(n):
    listing = lex_triples(n)
    assert len(listing) == comb(n, 3) == n * (n - 1) * (n - 2) // 6
    for r, t in enumerate(listing):
        assert triple_rank(t, n) == r
        assert triple_unrank(r, n) == t


@pytest.mark.parametrize("bad", [(0, 1, 2), (1, 1, 2), (3, 2, 1), (1, 2, 9)])
def test_rank_rejects_invalid(bad):
    with pytest.raises(ValueError):
        triple_rank(bad, 5)


def test_triple_properties():
    assert Triple(2, 3, 4).is_dense
    assert not Triple(1, 3, 4).is_dense
    assert Triple(1, 3, 6).amplitude == 5
    assert str(Triple(1, 2, 10)) == "1.2.10"
    assert parse_triple("1.2.10") == (1, 2, 10)
    assert parse_triple("245") == (2, 4, 5)


def test_sticks_examples():
    (only,) = sticks(4)
    assert [str(t) for t in only.members] == ["123", "124", "134", "234"]
    assert len(sticks(5)) == 5
    assert sticks(3) == []
    holders = [s.quadruple for s in sticks(5) if (1, 3, 4) in s.members]
    assert holders == [(1, 2, 3, 4), (1, 3, 4, 5)]


@pytest.mark.parametrize("n", range(4, 9))
def test_each_triple_in_n_minus_3_sticks(n):
    counts = Counter(t for s in sticks(n) for t in s.members)
    assert len(sticks(n)) == comb(n, 4)
    assert set(counts) == set(lambda_space(n).triples)
    assert set(counts.values()) == {n - 3}
    for s in sticks(n):
        assert list(s.members) == sorted(s.members)


def test_restriction_map_examples():
    assert restriction_map((1, 2, 3, 4), 4) == (0, 1, 2, 3)
    assert restriction_map((1, 2, 4), 4) == (triple_rank((1, 2, 4), 4),)
    assert restriction_map((2, 3, 5), 5) == (lex_triples(5).index((2, 3, 5)),)
    with pytest.raises(ValueError):
        restriction_map((1, 2), 4)


@given(st.integers(5, 8).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.integers(1, n), min_size=4, max_size=n),
    st.integers(0, (1 << comb(n, 3)) - 1))), st.data())
def test_restriction_composes(case, data):
    n, K, bits = case
    K = tuple(sorted(K))
    Kp_local = tuple(sorted(data.draw(st.sets(st.integers(1, len(K)), min_size=3, max_size=len(K)))))
    P = InversionSet(n, bits)
    preimage = tuple(K[c - 1] for c in Kp_local)
    assert P.restrict(K).restrict(Kp_local) == P.restrict(preimage)


def test_inversion_set_formats_and_algebra():
    P = InversionSet.parse("1110")
    assert P == InversionSet.parse("123,124,134", n=4)
    assert P.to_triple_list() == "123,124,134"
    assert str(~P) == "0001"
    Q = InversionSet.parse("0111")
    assert str(P & Q) == "0110" and str(P | Q) == "1111" and str(P ^ Q) == "1001"
    assert str(P - Q) == "1000"
    assert (P & Q) <= P and not P <= Q
    assert P.rank == len(P) == 3
    assert (1, 2, 4) in P and (2, 3, 4) not in P
    assert InversionSet.parse("-", n=4) == InversionSet.empty(4)
    assert InversionSet.full(5).rank == 10


@pytest.mark.parametrize("text, n", [("0120", None), ("111", None), ("12", 4), ("125", 4)])
def test_parse_rejects_malformed(text, n):
    with pytest.raises(ValueError):
        InversionSet.parse(text, n)


def test_mixed_n_rejected():
    with pytest.raises(ValueError):
        InversionSet(4, 1) & InversionSet(5, 1)


def test_cap_env_override(monkeypatch):
    assert max_n() == 12
    monkeypatch.setenv("RHOMBUS_CSD_MAX_N", "20")
    assert max_n() == 20
    monkeypatch.setenv("RHOMBUS_CSD_MAX_N", "nope")
    with pytest.raises(ValueError):
        max_n()


def test_cap_enforced():
    with pytest.raises(ValueError):
        lambda_space(max_n() + 1)


@given(st.integers(0, 1023), st.integers(0, 1023))
def test_set_algebra_is_pointwise(a, b):
    A, B = InversionSet(5, a), InversionSet(5, b)
    ta, tb = set(A), set(B)
    assert set(A & B) == ta & tb
    assert set(A | B) == ta | tb
    assert set(A ^ B) == ta ^ tb
    assert set(~A) == set(lambda_space(5).triples) - ta
    assert (A <= B) == (ta <= tb)
    assert InversionSet.parse(A.to_bitstring()) == A
    assert InversionSet.parse(A.to_triple_list() or "-", n=5) == A
