"""Unit tests for integer vector enumeration."""

import itertools

import pytest

from curvecensus.utils import bounded_partitions, bounded_vectors, orbit_size


def test_bounded_vectors_match_brute_force() -> None:
    expected = [
        v
        for v in itertools.product(range(-1, 4), repeat=4)
        if sum(v) == 5 and sum(x * x for x in v) == 11
    ]
    found = list(bounded_vectors(4, 5, 11, low=-1, high=3))
    assert found == sorted(expected)


def test_bounded_vectors_non_increasing() -> None:
    found = list(bounded_vectors(6, 17, 49, low=0, high=5, non_increasing=True))
    assert (3, 3, 3, 3, 3, 2) in found
    assert all(list(v) == sorted(v, reverse=True) for v in found)


def test_bounded_vectors_empty() -> None:
    assert list(bounded_vectors(0, 0, 0, low=0, high=1)) == [()]
    assert list(bounded_vectors(2, 5, 1, low=0, high=5)) == []
    with pytest.raises(ValueError):
        list(bounded_vectors(-1, 0, 0, low=0, high=1))


def test_bounded_partitions() -> None:
    assert list(bounded_partitions(4, 3, 2)) == [(2, 2, 0), (2, 1, 1)]
    assert list(bounded_partitions(0, 2, 3)) == [(0, 0)]
    assert list(bounded_partitions(7, 2, 3)) == []


def test_bounded_partitions_count() -> None:
    expected = {
        tuple(sorted(v, reverse=True))
        for v in itertools.product(range(5), repeat=4)
        if sum(v) == 9
    }
    found = list(bounded_partitions(9, 4, 4))
    assert len(found) == len(set(found))
    assert set(found) == expected


def test_orbit_size() -> None:
    assert orbit_size((3, 3, 3, 3, 3, 2)) == 6
    assert orbit_size((4, 4, 3, 3, 3, 3)) == 15
    assert orbit_size((1, 1, 1)) == 1
    assert orbit_size(()) == 1
