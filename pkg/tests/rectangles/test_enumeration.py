"""Tests for partition, cube-class and edge-set enumeration."""

from __future__ import annotations

from math import comb

import pytest

import core.config as config
from core.cubes import cube_validate
from core.exceptions import BoundExceededError
from core.rectangles import (
    bigrassmannian_scan,
    catalan,
    edge_set,
    edge_set_from_orbits,
    enumerate_cube_classes,
    enumerate_partitions,
    sorted_elements,
)
from core.typea import from_word, identity


CATALAN = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


@pytest.mark.parametrize("rank", range(1, 11))
def test_partition_counts(rank: int) -> None:
    partitions = enumerate_partitions(rank)
    assert len(partitions) == catalan(rank) == CATALAN[rank - 1]
    assert len(set(partitions)) == len(partitions)
    assert all(partition.is_valid() for partition in partitions)


@pytest.mark.parametrize("rank, count", [(1, 1), (2, 1), (3, 2), (4, 3), (5, 6)])
def test_cube_class_counts(rank: int, count: int) -> None:
    classes = enumerate_cube_classes(rank)
    assert classes.count == count
    assert classes.flip_orbit_count == count
    assert len(classes.representatives) == count
    assert all(cube_validate(cube) for cube in classes.representatives)


def test_cross_check_can_be_skipped() -> None:
    classes = enumerate_cube_classes(6, cross_check=False)
    assert classes.count == 11
    assert classes.flip_orbit_count is None


@pytest.mark.parametrize("rank", range(1, 9))
def test_edge_set_size(rank: int) -> None:
    assert len(edge_set(rank)) == comb(rank + 2, 3)


@pytest.mark.parametrize("rank", range(1, 8))
def test_edge_set_growth(rank: int) -> None:
    assert len(edge_set(rank + 1)) - len(edge_set(rank)) == (rank + 1) * (rank + 2) // 2


@pytest.mark.parametrize("rank", [1, 2, 3, 4, 5])
def test_edge_set_routes_agree(rank: int) -> None:
    edges = edge_set(rank)
    assert edges == bigrassmannian_scan(rank)
    assert edges == edge_set_from_orbits(rank)


def test_sorted_elements() -> None:
    elements = {from_word(2, [2, 1]), from_word(2, [2]), from_word(2, [1])}
    assert sorted_elements(elements) == [
        from_word(2, [2]),
        from_word(2, [1]),
        from_word(2, [2, 1]),
    ]
    assert sorted_elements({identity(2)}) == [identity(2)]


def test_enumeration_bound(
    monkeypatch: pytest.MonkeyPatch, reset_config_state: None
) -> None:
    monkeypatch.setenv(config.ENUMERATION_BOUND_KEY, "3")
    assert len(enumerate_partitions(3)) == 5
    with pytest.raises(BoundExceededError) as excinfo:
        enumerate_partitions(4)
    assert excinfo.value.bound == 3
    with pytest.raises(BoundExceededError):
        edge_set(4)


def test_bigrassmannian_scan_bound(
    monkeypatch: pytest.MonkeyPatch, reset_config_state: None
) -> None:
    monkeypatch.setenv(config.EXHAUSTIVE_RANK_KEY, "2")
    with pytest.raises(BoundExceededError):
        bigrassmannian_scan(3)
