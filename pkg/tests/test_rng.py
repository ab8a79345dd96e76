from collections import Counter

import pytest

from impressionist.rng import RngStream, from_seed, next_int_inclusive

from reference import reference_int, splitmix64


def test_same_seed_same_sequence():
    a, b = from_seed(42), from_seed(42)
    assert [a.next_u64() for _ in range(100)] == [b.next_u64() for _ in range(100)]


def test_seed_zero_known_value():
    assert from_seed(0).next_u64() == 0xE220A8397B1DCDAF


def test_matches_reference_generator():
    g = from_seed(123456789)
    ref = splitmix64(123456789)
    assert [g.next_u64() for _ in range(50)] == [next(ref) for _ in range(50)]


def test_negative_seed_is_reduced():
    assert [from_seed(-1).next_u64() for _ in range(1)] == [next(splitmix64(2 ** 64 - 1))]


@pytest.mark.parametrize('seed', [2 ** 64, 2 ** 64 + 1, -(2 ** 63) - 1, 1.5, True, '7'])
def test_invalid_seed_rejected(seed):
    with pytest.raises(ValueError):
        from_seed(seed)


def test_seed_range_ends():
    assert from_seed(2 ** 64 - 1).next_u64() == next(splitmix64(2 ** 64 - 1))
    assert from_seed(-(2 ** 63)).next_u64() == next(splitmix64(2 ** 63))


def test_different_seeds_differ():
    a, b = from_seed(1), from_seed(2)
    assert [a.next_u64() for _ in range(8)] != [b.next_u64() for _ in range(8)]


def test_singleton_range():
    g = from_seed(3)
    assert all(next_int_inclusive(g, 4, 4) == 4 for _ in range(20))


def test_bounds():
    g = from_seed(9)
    assert all(2 <= g.next_int_inclusive(2, 6) <= 6 for _ in range(1000))
    assert all(-3 <= g.next_int_inclusive(-3, 3) <= 3 for _ in range(1000))


def test_matches_reference_bounded_draws():
    g = RngStream.from_seed(77)
    ref = splitmix64(77)
    for lo, hi in [(0, 9), (2, 6), (-2, 2), (0, 0), (1, 1000)] * 20:
        assert g.next_int_inclusive(lo, hi) == reference_int(ref, lo, hi)


def test_empty_range_rejected():
    with pytest.raises(ValueError):
        from_seed(0).next_int_inclusive(5, 4)


def test_uniform_histogram():
    g = from_seed(2024)
    counts = Counter(g.next_int_inclusive(0, 9) for _ in range(100_000))
    assert sorted(counts) == list(range(10))
    assert all(9_000 <= n <= 11_000 for n in counts.values())
