from itertools import product

import pytest
from hypothesis import given, strategies as st

from vmconn.partitions import all_set_partitions, blocks, set_partitions, stirling2


def canonical(labels):
    seen = {}
    return tuple(seen.setdefault(c, len(seen)) for c in labels)


@pytest.mark.parametrize("n", range(0, 7))
def test_matches_brute_force_canonicalisation(n):
    expected = {}
    for labels in product(range(n), repeat=n):
        rgs = canonical(labels)
        expected.setdefault(len(set(rgs)), set()).add(rgs)
    for k in range(0, n + 1):
        got = list(set_partitions(n, k))
        assert len(got) == len(set(got))
        assert set(got) == expected.get(k, set() if n else {()})


@pytest.mark.parametrize("n,k,count", [(4, 2, 7), (5, 3, 25), (8, 7, 28), (9, 3, 3025), (10, 5, 42525)])
def test_counts_are_stirling_numbers(n, k, count):
    assert stirling2(n, k) == count
    assert sum(1 for _ in set_partitions(n, k)) == count


def test_bell_numbers():
    assert [sum(1 for _ in all_set_partitions(n)) for n in range(1, 9)] == [1, 2, 5, 15, 52, 203, 877, 4140]


@given(st.integers(1, 7), st.integers(1, 7))
def test_lexicographic_order(n, k):
    seq = list(set_partitions(n, k))
    assert seq == sorted(seq)


def test_blocks():
    assert blocks((0, 1, 0, 2)) == [[0, 2], [1], [3]]


def test_edge_cases():
    assert list(set_partitions(0, 0)) == [()]
    assert list(set_partitions(3, 0)) == []
    assert list(set_partitions(2, 3)) == []
    with pytest.raises(ValueError):
        list(set_partitions(-1, 1))
