"""Tests for the numeric engine over arbitrary Coxeter matrices."""

from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.cubes import enumerate_squares
from core.exceptions import MalformedMatrixError, RootCapExceededError
from core.generic import (
    CoxeterMatrix,
    bounded_square_search,
    build_system,
    cocycle_identity_holds,
    evaluate_word,
    generate_roots,
    inversion_set_generic,
    length_additivity_matches,
    reflection_cocycle,
    transfer_check_generic,
)
from core.typea import from_word, inversion_set, length
from core.types import CoxeterMatrixDocument

H3 = [[1, 5, 2], [5, 1, 3], [2, 3, 1]]
AFFINE_A2 = [[1, 3, 3], [3, 1, 3], [3, 3, 1]]


def _typea_keys(rank: int, word: list[int]) -> set[tuple[float, ...]]:
    return {
        tuple(float(c) for c in root.coefficients(rank))
        for root in inversion_set(from_word(rank, word))
    }


class TestCoxeterMatrix:
    """Validation of Coxeter matrices."""

    @pytest.mark.parametrize(
        "rows",
        [
            [[1, 3], [2, 1]],
            [[2, 3], [3, 1]],
            [[1, 1], [1, 1]],
            [[1, 3, 2], [3, 1]],
            [],
        ],
    )
    def test_malformed(self, rows: list[list[int]]) -> None:
        with pytest.raises(MalformedMatrixError):
            CoxeterMatrix.from_rows(rows)

    def test_named_families(self) -> None:
        assert CoxeterMatrix.type_a(3).entries == ((1, 3, 2), (3, 1, 3), (2, 3, 1))
        assert CoxeterMatrix.type_b(3).order(1, 2) == 4
        assert CoxeterMatrix.dihedral(0).order(1, 2) == 0

    def test_from_document(self) -> None:
        document = CoxeterMatrixDocument(size=2, m=[[1, 4], [4, 1]])
        assert CoxeterMatrix.from_document(document) == CoxeterMatrix.type_b(2)
        with pytest.raises(MalformedMatrixError):
            CoxeterMatrix.from_document(CoxeterMatrixDocument(size=3, m=[[1, 4], [4, 1]]))

    def test_infinite_bond_gives_minus_one(self) -> None:
        system = build_system(CoxeterMatrix.dihedral(0))
        assert system.form_value(1, 2) == pytest.approx(-1.0)
        assert system.form_value(1, 1) == pytest.approx(1.0)


class TestRootGeneration:
    """Positive roots of finite and infinite systems."""

    @pytest.mark.parametrize("order", range(2, 10))
    def test_dihedral_has_m_roots(self, order: int) -> None:
        assert len(generate_roots(build_system(CoxeterMatrix.dihedral(order)))) == order

    @pytest.mark.parametrize(
        "matrix, count",
        [
            (CoxeterMatrix.type_a(3), 6),
            (CoxeterMatrix.type_a(4), 10),
            (CoxeterMatrix.type_b(3), 9),
            (CoxeterMatrix.from_rows(H3), 15),
        ],
    )
    def test_finite_root_counts(self, matrix: CoxeterMatrix, count: int) -> None:
        assert len(generate_roots(build_system(matrix))) == count

    @pytest.mark.parametrize("rows", [[[1, 0], [0, 1]], AFFINE_A2])
    def test_infinite_systems_hit_the_cap(self, rows: list[list[int]]) -> None:
        with pytest.raises(RootCapExceededError) as excinfo:
            generate_roots(build_system(rows), cap=50)
        assert excinfo.value.cap == 50

    def test_cap_counts_positive_roots(self) -> None:
        assert len(generate_roots(build_system(CoxeterMatrix.type_a(2)), cap=3)) == 3
        with pytest.raises(RootCapExceededError) as excinfo:
            generate_roots(build_system(CoxeterMatrix.type_a(3)), cap=5)
        assert excinfo.value.cap == 5
        assert len(generate_roots(build_system(CoxeterMatrix.type_a(3)), cap=6)) == 6

    def test_roots_are_positive(self) -> None:
        for root in generate_roots(build_system(CoxeterMatrix.type_b(3))):
            assert root.is_positive
            assert not root.is_negative


class TestAgainstTypeA:
    """The numeric engine agrees with exact type-A arithmetic."""

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(min_value=1, max_value=3), max_size=8))
    def test_inversion_sets_match(self, word: list[int]) -> None:
        system = build_system(CoxeterMatrix.type_a(3))
        element = evaluate_word(system, word)
        keys = {root.key() for root in inversion_set_generic(system, element)}
        assert keys == _typea_keys(3, word)
        assert system.length(element) == length(from_word(3, word))

    def test_squares_match_over_a2(self) -> None:
        system = build_system(CoxeterMatrix.type_a(2))
        generic = {
            tuple(from_word(2, element.defining_word) for element in square)
            for square in bounded_square_search(system, 3)
        }
        exact = {square.as_tuple() for square in enumerate_squares(2)}
        assert generic == exact
        assert generic

    def test_transfer_of_a2_square(self) -> None:
        system = build_system(CoxeterMatrix.type_a(2))
        w = evaluate_word(system, [1, 2])
        x = evaluate_word(system, [1])
        y = evaluate_word(system, [2])
        assert transfer_check_generic(system, w, x, y)
        assert not transfer_check_generic(system, x, x, x)


class TestCocycle:
    """Cocycle identities on random words."""

    @pytest.mark.parametrize(
        "matrix",
        [
            CoxeterMatrix.type_a(3),
            CoxeterMatrix.type_b(3),
            CoxeterMatrix.from_rows(H3),
            CoxeterMatrix.dihedral(5),
            CoxeterMatrix.dihedral(7),
        ],
    )
    def test_random_word_pairs(self, matrix: CoxeterMatrix) -> None:
        system = build_system(matrix)
        rng = random.Random(2024)
        for _ in range(1000):
            first = [rng.randint(1, system.size) for _ in range(rng.randint(0, 6))]
            second = [rng.randint(1, system.size) for _ in range(rng.randint(0, 6))]
            x, y = system.evaluate_word(first), system.evaluate_word(second)
            assert cocycle_identity_holds(system, x, y)
            assert length_additivity_matches(system, x, y)

    @pytest.mark.parametrize("word", [[], [1], [1, 2], [2, 1, 2], [1, 2, 3, 1]])
    def test_reflection_cocycle_is_inversion_set(self, word: list[int]) -> None:
        system = build_system(CoxeterMatrix.type_b(3))
        element = system.evaluate_word(word)
        assert reflection_cocycle(system, element) == inversion_set_generic(system, element)

    def test_elements_compare_numerically(self) -> None:
        system = build_system(CoxeterMatrix.type_a(2))
        assert system.evaluate_word([1, 2, 1]) == system.evaluate_word([2, 1, 2])
        assert system.evaluate_word([1, 1]).is_identity()
        inverse = system.inverse(system.evaluate_word([1, 2]))
        assert np.allclose(inverse.matrix, system.evaluate_word([2, 1]).matrix)


class TestBoundedSearch:
    """Square searches by word length."""

    def test_infinite_dihedral_has_no_squares(self) -> None:
        system = build_system(CoxeterMatrix.dihedral(0))
        assert bounded_square_search(system, 8) == []
