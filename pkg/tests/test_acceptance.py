"""Acceptance criteria 1 to 9, one test each.

Each test requests the ``criterion`` fixture, so the terminal summary ends
with one PASS/FAIL line per criterion.
"""

import random
import subprocess
import sys
from itertools import combinations, permutations, product
from math import comb, factorial
from pathlib import Path

from cli_suite import transcript
from oracles import brute_force_tilings
from rhombus_csd.aggregation import (
    MajoritySystem, aggregate_with_system, simple_majority, union_of_intersections,
)
from rhombus_csd.csd import (
    SuperDomain, is_clique, is_closed, is_csd, is_csd_via_quadruples, is_maximal_csd,
    is_normal,
)
from rhombus_csd.cubillage import (
    StickOrientations, acyclic_orientations, chain_from_linear, cubillage_csd,
)
from rhombus_csd.gallery import five_color_median_domain, octagon_wheel
from rhombus_csd.lambda_core import InversionSet, lambda_space
from rhombus_csd.snakes import LinearOrder, is_condorcet_domain, sigma
from rhombus_csd.symmetric import boolean_csd, symmetric_partition
from rhombus_csd.tiling import (
    anti_standard, basis, dense_triple, enumerate_all, interval_tiling, is_tiling, median3,
    opposite, standard,
)


def P(text, n=None):
    return InversionSet.parse(text, n)


def test_criterion_1_tiling_counts(criterion):
    """Tiling counts 2, 8, 62 and agreement with the brute-force filter."""
    assert [len(enumerate_all(n)) for n in (3, 4, 5)] == [2, 8, 62]
    for n in (3, 4, 5):
        assert sorted(T.bits for T in enumerate_all(n)) == brute_force_tilings(n)


def test_criterion_2_majority_paradox(criterion):
    """Majority paradox: 0110 from the profile, and the quoted median 0100."""
    sm = simple_majority([P("1110"), P("0000"), P("0111")])
    assert str(sm) == "0110" and not is_tiling(sm)
    m = median3(P("1100"), P("0111"), P("0001"))
    assert not is_tiling(m)
    # The quoted value; the pointwise majority of these three is 0101.
    assert str(m) == "0100"


def _consecutive_five(d, wheel):
    idx = sorted(wheel.index(W) for W in d)
    return len(idx) == 5 and any(sorted((s + i) % 8 for i in range(5)) == idx for s in range(8))


def _two_opposite_pairs(d):
    return len(d) == 4 and all(opposite(W) in d for W in d)


def test_criterion_3_n4_classification(criterion):
    """Every maximal CSD on four colors is class I or class II; aggregates equal a voter."""
    wheel = octagon_wheel()
    csd_masks = [m for m in range(1, 1 << 8)
                 if is_csd(SuperDomain(4, [W for i, W in enumerate(wheel) if m >> i & 1]))]
    maximal = [m for m in csd_masks if not any(o != m and o & m == m for o in csd_masks)]
    domains = [SuperDomain(4, [W for i, W in enumerate(wheel) if m >> i & 1]) for m in maximal]
    one = [d for d in domains if _consecutive_five(d, wheel)]
    two = [d for d in domains if _two_opposite_pairs(d)]
    assert len(one) + len(two) == len(domains)
    assert (len(one), len(two)) == (8, 6)
    for d in domains:
        for size in (1, 3, 5):
            for prof in product(d.members, repeat=size):
                assert simple_majority(prof) in prof


def test_criterion_4_five_color_example(criterion):
    """The five-color example: median value, Ziegler witness, and the 16-tiling domain."""
    T1, T2, T3 = P("234,235,245", 5), P("234,134,124", 5), P("234,235,134,135", 5)
    assert median3(T1, T2, T3) == P("234,134,235", 5)
    v = is_tiling(T1 | T2)
    assert not v and [str(t) for t in v.witness.members] == ["124", "125", "145", "245"]
    d = five_color_median_domain()
    assert len(d) == 16 and is_csd(d) and is_closed(d)
    assert is_maximal_csd(d).holds is True  # pinned from the first computation


def test_criterion_5_snakes(criterion):
    """Snake domains: the n=3 example, the five-color snake, Condorcet for all tilings."""
    assert [o.seq for o in sigma(anti_standard(3))] == [(1, 2, 3), (1, 3, 2), (3, 1, 2), (3, 2, 1)]
    assert LinearOrder((3, 4, 2, 1, 5)) in sigma(standard(5))
    checked = 0
    for n in (3, 4, 5):
        for T in enumerate_all(n):
            assert is_condorcet_domain(sigma(T))
            checked += 1
    assert checked == 2 + 8 + 62


def test_criterion_6_equivalences(criterion):
    """Two CSD routes agree; clique iff CSD on normal domains; the aggregation formula."""
    rng = random.Random(20240601)
    tilings = list(enumerate_all(5))
    ends = [standard(5), anti_standard(5)]
    for _ in range(1000):
        d = SuperDomain(5, rng.sample(tilings, rng.randint(2, 10)))
        assert bool(is_csd(d)) == bool(is_csd_via_quadruples(d))
        normal = d | ends
        assert is_normal(normal)
        assert bool(is_clique(normal)) == bool(is_csd(normal))
    systems = [MajoritySystem.simple(5), MajoritySystem.weighted([3, 1, 1, 1, 1]),
               MajoritySystem.dictatorship(5, 2)]
    for i in range(1000):
        votes = [rng.choice(tilings) for _ in range(5)]
        F = systems[i % len(systems)]
        assert aggregate_with_system(votes, F) == union_of_intersections(votes, F.big)


def test_criterion_7_cubillage(criterion):
    """Every acyclic orientation gives a normal maximal closed clique CSD; lex chains."""
    for n in (4, 5):
        orientations = acyclic_orientations(n)
        assert len(orientations) <= 2 ** comb(n, 4)
        for o in orientations:
            d = cubillage_csd(o)
            assert is_csd(d) and is_normal(d) and is_clique(d) and is_closed(d)
            assert is_maximal_csd(d)
        chain = chain_from_linear(list(lambda_space(n).triples))
        assert len(chain) == comb(n, 3) + 1
        assert all(is_tiling(InversionSet(n, T.bits)) for T in chain)
        assert StickOrientations.all_direct(n) in orientations


def test_criterion_8_symmetric(criterion):
    """Symmetric construction for all sequences; dense-triple lemmas up to six colors."""
    for n in (4, 5, 6):
        full = lambda_space(n).full
        seqs = list(permutations(range(2, n)))
        assert len(seqs) == factorial(n - 2)
        for seq in seqs:
            parts = symmetric_partition(seq).parts
            seen = 0
            for T in parts.values():
                assert is_tiling(InversionSet(n, T.bits)) and not seen & T.bits
                seen |= T.bits
            assert seen == full
            d = boolean_csd(symmetric_partition(seq))
            assert len(d) == 2 ** (n - 2)
            if n <= 5:
                assert is_maximal_csd(d)
    for n in (3, 4, 5, 6):
        for T in enumerate_all(n):
            B = basis(T)
            assert bool(B) == bool(T.rank)
            for i, _, k in T:
                assert any(i < j < k for (_, j, _) in B)
            js = sorted(j for (_, j, _) in B)
            for a, b in combinations(range(len(js) + 1), 2):
                run = js[a:b]
                if run and run[-1] - run[0] == len(run) - 1:
                    assert interval_tiling(run[0] - 1, run[-1] + 1, n) <= T
                    assert all(dense_triple(j) in T for j in run)


def test_criterion_9_determinism(criterion, tmp_path):
    """Two runs of the CLI suite, in this process and in a fresh one, are byte-identical."""
    first, second = tmp_path / "first", tmp_path / "second"
    first.mkdir()
    second.mkdir()
    a, b = transcript(first), transcript(second)
    assert a == b
    script = ("import sys, pathlib; sys.path.insert(0, sys.argv[1]);"
              "from cli_suite import transcript;"
              "sys.stdout.write(transcript(pathlib.Path(sys.argv[2])))")
    third = tmp_path / "third"
    third.mkdir()
    here = str(Path(__file__).parent)
    proc = subprocess.run([sys.executable, "-c", script, here, str(third)],
                          capture_output=True, check=True)
    assert proc.stdout == a.encode()
