"""Tests for exhaustive square and cube searches."""

from __future__ import annotations

from math import comb

import pytest

import core.config as config
from core.cubes import (
    CoxeterCube,
    CoxeterSquare,
    brute_force_cubes,
    cube_canonical,
    cube_from_terminal_edges,
    is_product_square,
    one_cube,
    orbit_edge_elements,
    product_cube,
)
from core.exceptions import BoundExceededError
from core.rectangles import enumerate_cube_classes
from core.typea import from_word, is_bigrassmannian


def test_rank_one_and_two() -> None:
    assert brute_force_cubes(1) == [(from_word(1, [1]),)]
    assert brute_force_cubes(2) == [(from_word(2, [2]), from_word(2, [1, 2]))]


def test_rank_three_has_two_classes(
    left_a3_cube: CoxeterCube, right_a3_cube: CoxeterCube
) -> None:
    classes = brute_force_cubes(3)
    assert len(classes) == 2
    assert set(classes) == {cube_canonical(left_a3_cube), cube_canonical(right_a3_cube)}


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_brute_force_matches_partition_classes(rank: int) -> None:
    classes = enumerate_cube_classes(rank)
    expected = {cube_canonical(cube) for cube in classes.representatives}
    found = brute_force_cubes(rank)
    assert len(found) == classes.count
    assert set(found) == expected


def test_no_three_cube_in_a2() -> None:
    assert brute_force_cubes(2, 3) == []


def test_lower_dimension_search() -> None:
    squares = brute_force_cubes(3, 2)
    assert squares
    for terminals in squares:
        assert cube_from_terminal_edges(terminals) is not None


def test_search_respects_exhaustive_bound(
    monkeypatch: pytest.MonkeyPatch, reset_config_state: None
) -> None:
    monkeypatch.setenv(config.EXHAUSTIVE_RANK_KEY, "2")
    with pytest.raises(BoundExceededError):
        brute_force_cubes(3)


def test_orbit_edges_are_bigrassmannian(
    left_a3_cube: CoxeterCube, right_a3_cube: CoxeterCube
) -> None:
    elements = orbit_edge_elements([left_a3_cube, right_a3_cube])
    assert all(is_bigrassmannian(x) for x in elements)
    assert len(elements) == comb(5, 3)


def test_product_square() -> None:
    cube = product_cube(one_cube(from_word(3, [1])), one_cube(from_word(3, [3])))
    [(_, _, _, square)] = list(cube.faces())
    assert isinstance(square, CoxeterSquare)
    assert is_product_square(square, {1}, {3})
    assert not is_product_square(square, {1}, {2})


def test_a2_square_is_not_a_product(a2_square: CoxeterSquare) -> None:
    assert not is_product_square(a2_square, {1}, {2})
