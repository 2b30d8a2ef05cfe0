import random
from itertools import product

import pytest

from helpers import (
    ball_vectors,
    capability_by_splits,
    diff_profiles_by_pairs,
    vector_weight_direct,
)
from whmetric.errors import ParameterError
from whmetric.metric import WeightedSpace, profile_leq


def test_space_validation():
    with pytest.raises(ParameterError):
        WeightedSpace(2, (3, 3), (2, 1))  # unsorted scales
    with pytest.raises(ParameterError):
        WeightedSpace(2, (3, 0), (1, 2))
    with pytest.raises(ParameterError):
        WeightedSpace(2, (3, 3), (1, 0))
    with pytest.raises(ParameterError):
        WeightedSpace(2, (3,), (1, 2))


def test_block_profile():
    sp = WeightedSpace(2, (3, 3), (1, 2))
    assert sp.block_profile((1, 1, 1, 0, 0, 0)) == (3, 0)
    assert sp.block_profile((0,) * 6) == (0, 0)
    single = WeightedSpace(2, (6,), (1,))
    assert single.block_profile((1, 0, 1, 0, 0, 1)) == (3,)
    with pytest.raises(ParameterError):
        sp.block_profile((1, 0))


def test_weighted_weight():
    sp = WeightedSpace(2, (3, 3, 3), (1, 2, 3))
    assert sp.weighted_weight((3, 0, 0)) == 3
    assert sp.weighted_weight((0, 2, 0)) == 4
    assert sp.weighted_weight((0, 0, 1)) == 3
    assert WeightedSpace(2, (3, 3), (1, 2)).weighted_weight((2, 3)) == 8
    assert WeightedSpace(2, (5,), (1,)).weighted_weight((4,)) == 4


def test_profile_order():
    assert profile_leq((1, 0), (2, 1))
    assert not profile_leq((2, 0), (1, 3))
    assert profile_leq((2, 0), (2, 0))


def test_capability_examples():
    sp33 = WeightedSpace(2, (3, 3), (1, 2))
    assert sp33.profile_capability((3, 0)) == 1
    assert sp33.profile_capability((0, 1)) == 1
    assert sp33.profile_capability((0, 0)) == -1
    sp77 = WeightedSpace(2, (7, 7), (1, 2))
    assert sp77.profile_capability((7, 1)) == 4


def test_capability_matches_split_enumeration_randomized():
    rng = random.Random(20240911)
    cases = 0
    while cases < 1200:
        q = rng.choice((2, 3, 7))
        m = rng.randint(1, 3)
        blocks = tuple(rng.randint(1, 4) for _ in range(m))
        if sum(blocks) > 12:
            continue
        scales = tuple(sorted(rng.randint(1, 4) for _ in range(m)))
        sp = WeightedSpace(q, blocks, scales)
        v = tuple(rng.randrange(q) for _ in range(sp.n))
        assert sp.vector_capability(v) == capability_by_splits(sp, v)
        cases += 1


def test_capability_bracket_for_nonzero_profiles():
    sp = WeightedSpace(3, (3, 2, 2), (1, 2, 4))
    for prof in product(range(4), range(3), range(3)):
        if not any(prof):
            continue
        w = sp.weighted_weight(prof)
        t = sp.profile_capability(prof)
        assert (w - 1) // 2 <= t <= (w + sp.scales[-1]) // 2 - 1


def test_monotone_under_profile_order():
    sp = WeightedSpace(2, (3, 3, 3), (1, 2, 3))
    profiles = list(product(range(4), repeat=3))
    for a in profiles:
        for b in profiles:
            if profile_leq(a, b):
                assert sp.weighted_weight(a) <= sp.weighted_weight(b)
                assert sp.profile_capability(a) <= sp.profile_capability(b)


def test_ball_profiles():
    sp = WeightedSpace(2, (7, 7), (1, 2))
    assert sp.ball_profiles(0) == [(0, 0)]
    assert set(sp.ball_profiles(1)) == {(0, 0), (1, 0)}
    assert set(sp.ball_profiles(2)) == {(0, 0), (1, 0), (2, 0), (0, 1)}
    profs = sp.ball_profiles(5)
    assert profs == sorted(profs)


def test_diff_ball_profiles():
    sp = WeightedSpace(2, (7, 7), (1, 2))
    assert set(sp.diff_ball_profiles(1)) == {(0, 0), (1, 0), (2, 0)}
    expected = {(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (0, 1), (0, 2), (1, 1), (2, 1)}
    assert set(sp.diff_ball_profiles(2)) == expected
    for t in (1, 2, 5):
        assert (0, 0) in sp.diff_ball_profiles(t)


def test_ball_sizes():
    sp = WeightedSpace(2, (7, 7), (1, 2))
    assert sp.ball_size(0) == 1
    assert sp.ball_size(1) == 8
    assert sp.diff_ball_size(1) == 29


def test_ball_size_matches_ambient_enumeration():
    spaces = [
        WeightedSpace(2, (5, 5), (1, 2)),
        WeightedSpace(2, (4, 3, 3), (1, 1, 3)),
        WeightedSpace(3, (4, 4), (1, 2)),
        WeightedSpace(3, (3, 3, 3), (1, 2, 3)),
    ]
    for sp in spaces:
        for t in range(sp.max_weight + 1):
            assert sp.ball_size(t) == len(ball_vectors(sp, t))


def test_diff_ball_membership_matches_pair_enumeration():
    spaces = {
        WeightedSpace(2, (4, 4), (1, 2)): None,
        WeightedSpace(2, (3, 2, 3), (1, 2, 2)): None,
        WeightedSpace(3, (3, 2), (1, 3)): None,
        WeightedSpace(7, (2, 2), (1, 2)): 3,  # cap the radius to keep pairs small
    }
    for sp, t_cap in spaces.items():
        top = sp.max_weight if t_cap is None else t_cap
        for t in range(1, top + 1):
            assert set(sp.diff_ball_profiles(t)) == diff_profiles_by_pairs(sp, t)


def test_diff_ball_size_matches_pair_counts():
    sp = WeightedSpace(2, (4, 4), (1, 2))
    for t in (1, 2, 3):
        ball = ball_vectors(sp, t)
        diffs = {
            tuple((a - b) % 2 for a, b in zip(x, y)) for x in ball for y in ball
        }
        assert sp.diff_ball_size(t) == len(diffs)


def test_single_block_reduces_to_hamming_ball():
    from math import comb

    sp = WeightedSpace(3, (7,), (1,))
    for t in range(8):
        assert sp.ball_size(t) == sum(comb(7, i) * 2**i for i in range(t + 1))


def test_weight_agrees_with_direct_sum():
    rng = random.Random(7)
    sp = WeightedSpace(3, (3, 4), (2, 5))
    for _ in range(200):
        v = tuple(rng.randrange(3) for _ in range(7))
        assert sp.vector_weight(v) == vector_weight_direct(sp, v)
