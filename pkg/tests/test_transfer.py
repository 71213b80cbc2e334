"""Tests for the transfer equation w(Phi_x) = Phi_y in A_n."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import core.config as config
from core.exceptions import BoundExceededError
from core.transfer import (
    TransferTriple,
    cocycle_conjugate,
    dual_transfer,
    near_longest_rigidity,
    right_divisor_check,
    solve_transfers,
    swap_transfer_check,
    transfer_check,
    transfer_image,
    w0_transfer,
)
from core.typea import (
    Permutation,
    PositiveRoot,
    all_permutations,
    compose,
    from_word,
    identity,
    inversion_set,
    length,
    longest_element,
)

A3 = all_permutations(3)


def s(*word: int) -> Permutation:
    return from_word(2, list(word))


class TestTransferCheck:
    """Checking and computing transfers."""

    def test_a2_square_triple(self) -> None:
        assert transfer_check(s(1, 2), s(1), s(2))

    def test_identity_edges(self) -> None:
        assert transfer_check(s(1, 2), identity(2), identity(2))
        assert not transfer_check(s(1), s(1), s(1))

    def test_image(self) -> None:
        assert transfer_image(s(1, 2), s(1)) == s(2)
        assert transfer_image(identity(2), s(2, 1)) == s(2, 1)
        assert transfer_image(s(1), s(2, 1)) == s(2, 1)

    def test_image_not_an_inversion_set(self) -> None:
        assert transfer_image(s(1), s(2)) is None

    def test_image_with_negative_root(self) -> None:
        assert transfer_image(s(1), s(1)) is None

    def test_cocycle_conjugate(self) -> None:
        assert cocycle_conjugate(s(1, 2), s(1)) == frozenset({PositiveRoot(2, 3)})
        assert cocycle_conjugate(s(1), s(1)) == frozenset({PositiveRoot(1, 2)})
        assert cocycle_conjugate(identity(2), s(2, 1)) == inversion_set(s(2, 1))

    def test_right_divisor(self) -> None:
        assert right_divisor_check(s(1, 2), s(1, 2))
        assert right_divisor_check(s(2), s(1, 2))
        assert not right_divisor_check(s(1), s(1, 2))

    def test_triple_holds(self) -> None:
        assert TransferTriple(s(1, 2), s(1), s(2)).holds


class TestSolve:
    """Solving for w given x and y."""

    def test_examples(self) -> None:
        assert solve_transfers(s(1), s(2)) == {s(1, 2)}
        assert solve_transfers(s(1), s(1)) == {identity(2)}
        assert solve_transfers(s(1), s(1, 2)) == set()

    @pytest.mark.parametrize("x", A3[::5])
    def test_matches_brute_force(self, x: Permutation) -> None:
        for y in A3:
            expected = {w for w in A3 if transfer_check(w, x, y)}
            assert solve_transfers(x, y) == expected

    @settings(max_examples=50, deadline=None)
    @given(st.sampled_from(A3))
    def test_always_contains_identity_for_equal_pair(self, x: Permutation) -> None:
        assert identity(3) in solve_transfers(x, x)


class TestExhaustiveA3:
    """Identities over every triple of A_3."""

    def test_transfer_implies_additivity_and_conjugation(self) -> None:
        for w in A3:
            for x in A3:
                additive = length(compose(w, x)) == length(w) + length(x)
                conjugate = cocycle_conjugate(w, x)
                for y in A3:
                    holds = transfer_check(w, x, y)
                    assert holds == (conjugate == inversion_set(y) and additive)
                    if holds:
                        assert right_divisor_check(
                            w, compose(longest_element(3), x.inverse())
                        )

    def test_swap_equivalence(self) -> None:
        for w in A3:
            for x in A3:
                wx = compose(w, x)
                for y in A3:
                    z = compose(y.inverse(), wx)
                    forward, backward = swap_transfer_check(w, x, y, z)
                    assert forward == backward

    def test_swap_requires_matching_products(self) -> None:
        with pytest.raises(ValueError):
            swap_transfer_check(s(1), s(1), s(2), s(1))


class TestLongestElement:
    """Transfers built from w0."""

    def test_w0_transfer_example(self) -> None:
        triple = w0_transfer(s(1))
        assert triple.w == s(1, 2)
        assert triple.y == s(2)
        assert triple.holds

    def test_w0_transfer_degenerate(self) -> None:
        triple = w0_transfer(identity(2))
        assert triple.w == longest_element(2)
        assert triple.y == identity(2)
        top = w0_transfer(longest_element(2))
        assert top.w == identity(2) and top.y == longest_element(2)

    def test_w0_transfer_over_a4(self) -> None:
        for x in all_permutations(4):
            assert w0_transfer(x).holds

    def test_dual_transfer_over_a3(self) -> None:
        for w in A3:
            for x in A3:
                y = transfer_image(w, x)
                if y is None:
                    continue
                assert dual_transfer(TransferTriple(w, x, y)).holds

    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    def test_near_longest_rigidity(self, rank: int) -> None:
        assert near_longest_rigidity(rank)

    def test_rigidity_respects_exhaustive_bound(
        self, monkeypatch: pytest.MonkeyPatch, reset_config_state: None
    ) -> None:
        monkeypatch.setenv(config.EXHAUSTIVE_RANK_KEY, "3")
        with pytest.raises(BoundExceededError):
            near_longest_rigidity(4)
