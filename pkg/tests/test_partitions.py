from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from nakajima_fock.symcore import (
    Composition,
    Partition,
    compositions,
    enumerate_partitions,
    partitions_in_box,
)


def brute_partitions(n):
    """All multisets of positive integers summing to n, by exhaustive search."""
    found = set()
    for length in range(n + 1):
        for combo in combinations_with_replacement(range(1, n + 1), length):
            if sum(combo) == n:
                found.add(tuple(sorted(combo, reverse=True)))
    return found


def partition_count(n):
    # p(n, k) = partitions of n with parts <= k
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        table[0][k] = 1
    for m in range(1, n + 1):
        for k in range(1, n + 1):
            table[m][k] = table[m][k - 1] + (table[m - k][k] if k <= m else 0)
    return table[n][n]


def test_partition_normalizes_and_validates():
    assert Partition([1, 3, 2]) == Partition([3, 2, 1])
    assert Partition([3, 2, 1]).weight == 6
    assert Partition([3, 2, 1]).length == 3
    assert Partition().weight == 0
    with pytest.raises(ValueError):
        Partition([2, 0])
    with pytest.raises(ValueError):
        Partition([-1])


def test_text_format_round_trip():
    assert str(Partition([3, 2, 1])) == "[3,2,1]"
    assert str(Partition()) == "[]"
    assert Partition.parse("[3,2,1]") == Partition([3, 2, 1])
    assert Partition.parse("[]") == Partition()


def test_enumerate_small_cases():
    assert enumerate_partitions(0) == [Partition()]
    assert enumerate_partitions(4) == [
        Partition([4]), Partition([3, 1]), Partition([2, 2]), Partition([2, 1, 1]), Partition([1, 1, 1, 1]),
    ]
    assert len(enumerate_partitions(10)) == 42


@pytest.mark.parametrize("n", range(0, 13))
def test_enumerate_matches_brute_force_and_count(n):
    parts = enumerate_partitions(n)
    assert len(parts) == len(set(parts))
    assert {tuple(p) for p in parts} == brute_partitions(n)
    assert len(parts) == partition_count(n)


def test_enumerate_is_reverse_lexicographic():
    for n in range(1, 11):
        parts = [tuple(p) for p in enumerate_partitions(n)]
        assert parts == sorted(parts, reverse=True)


def test_conjugate_and_multiplicities():
    lam = Partition([4, 2, 2, 1])
    assert lam.conjugate() == Partition([4, 3, 1, 1])
    assert lam.conjugate().conjugate() == lam
    assert lam.multiplicities() == {4: 1, 2: 2, 1: 1}
    assert lam.add_part(2) == Partition([4, 2, 2, 2, 1])
    assert lam.remove_part(2) == Partition([4, 2, 1])


def test_box():
    assert partitions_in_box(2, 2) == [
        Partition(), Partition([1]), Partition([2]), Partition([1, 1]), Partition([2, 1]), Partition([2, 2]),
    ]
    assert partitions_in_box(2, 2, 2) == [Partition([2]), Partition([1, 1])]
    assert partitions_in_box(0, 5) == [Partition()]


def test_compositions():
    assert list(compositions(2, 2)) == [Composition([2, 0]), Composition([1, 1]), Composition([0, 2])]
    assert list(compositions(0, 3)) == [Composition([0, 0, 0])]
    assert list(compositions(3, 0)) == []
    with pytest.raises(ValueError):
        Composition([1, -1])


@given(st.integers(0, 8), st.integers(1, 4))
def test_composition_count_is_stars_and_bars(n, q):
    from math import comb

    comps = list(compositions(n, q))
    assert len(comps) == comb(n + q - 1, q - 1)
    assert all(c.weight == n and len(c) == q for c in comps)


@given(st.lists(st.integers(1, 9), max_size=8))
def test_conjugate_is_involution(parts):
    lam = Partition(parts)
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().weight == lam.weight
