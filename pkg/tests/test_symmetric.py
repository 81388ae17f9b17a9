from itertools import combinations, permutations

import pytest

from rhombus_csd.csd import is_clique, is_closed, is_csd, is_maximal_csd, is_normal
from rhombus_csd.lambda_core import InversionSet, Triple, lambda_space
from rhombus_csd.symmetric import (
    LambdaPartition, boolean_csd, max_partition_size, parse_sequence, straddle_part,
    symmetric_partition,
)
from rhombus_csd.tiling import anti_standard, basis, is_tiling, standard


def sequences(n):
    return list(permutations(range(2, n)))


def test_straddle_examples():
    assert str(straddle_part(3, 1, 4, 4)) == "0111"
    assert str(straddle_part(2, 1, 4, 4)) == "1110"
    assert str(straddle_part(2, 1, 3, 3)) == "1"
    with pytest.raises(ValueError):
        straddle_part(4, 1, 4, 4)


def test_partition_examples():
    P = symmetric_partition((3, 2))
    assert {j: str(T) for j, T in P.parts.items()} == {2: "1000", 3: "0111"}
    P = symmetric_partition((2, 3))
    assert {j: str(T) for j, T in P.parts.items()} == {2: "1110", 3: "0001"}
    P = symmetric_partition((3, 2, 4))
    assert P.parts[3].to_triple_list() == "124,125,134,135,145,234,235,245"
    assert P.parts[2].to_triple_list() == "123"
    assert P.parts[4].to_triple_list() == "345"
    assert P == symmetric_partition((3, 4, 2))
    assert P.to_text().splitlines()[0] == "2: 123"


def test_partition_rejects_bad_input():
    for seq in [(2, 2), (1, 2), (2, 3, 5)]:
        with pytest.raises(ValueError):
            symmetric_partition(seq)
    with pytest.raises(ValueError):
        LambdaPartition(4, {2: InversionSet.parse("1000")})
    with pytest.raises(ValueError):
        LambdaPartition(4, {2: InversionSet.parse("1100"), 3: InversionSet.parse("1111")})
    assert parse_sequence("4, 5,6,2,3") == (4, 5, 6, 2, 3)
    with pytest.raises(ValueError):
        parse_sequence("4,x")


def test_boolean_csd_example_n4():
    d = boolean_csd(symmetric_partition((3, 2)))
    assert [str(T) for T in d] == ["0000", "1000", "0111", "1111"]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_every_sequence_gives_a_boolean_csd(n):
    full = lambda_space(n).full
    for seq in sequences(n):
        P = symmetric_partition(seq)
        assert list(P.parts) == list(range(2, n))
        assert all(T.bits for T in P.parts.values())
        d = boolean_csd(P)
        assert len(d) == 2 ** (n - 2)
        assert standard(n) in d and anti_standard(n) in d and is_normal(d)
        for S in (set(S) for k in range(n - 1) for S in combinations(P.parts, k)):
            TS = P.union(S)
            assert is_tiling(InversionSet(n, TS.bits))
            assert TS.bits ^ full == P.union(set(P.parts) - S).bits
        assert is_clique(d) and is_closed(d) and is_csd(d)


@pytest.mark.parametrize("n", [4, 5])
def test_boolean_csds_are_maximal(n):
    for seq in sequences(n):
        assert is_maximal_csd(boolean_csd(symmetric_partition(seq)))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_each_part_has_basis_ext_j(n):
    for seq in sequences(n):
        for j, T in symmetric_partition(seq).parts.items():
            assert basis(T) == {Triple(j - 1, j, j + 1)}


@pytest.mark.parametrize("n, best", [(4, 2), (5, 3), (6, 4)])
def test_no_partition_beyond_n_minus_2(n, best):
    assert max_partition_size(n) == best == n - 2


def test_seven_color_fixture():
    # computed once and pinned; no independent source exists for this figure
    P = symmetric_partition(parse_sequence("4,5,6,2,3"))
    assert P.to_text() == (
        "2: 123,124,134\n"
        "3: 234\n"
        "4: 125,126,127,135,136,137,145,146,147,156,157,167,235,236,237,245,246,247,"
        "256,257,267,345,346,347,356,357,367\n"
        "5: 456,457,467\n"
        "6: 567\n"
    )
