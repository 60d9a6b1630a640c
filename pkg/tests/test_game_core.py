import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from disaster_games.game_core import (
    CostGame,
    GameError,
    InvalidProfileError,
    MixedProfile,
    StrategyProfile,
    expected_cost,
    find_msne,
    find_msne_2x2_plus,
    find_psne,
    is_psne,
)
from oracles import brute_force_psne, deviation_check

P = StrategyProfile

PENNIES = CostGame((0, 1), (0, 1), [[-1, 1], [1, -1]], [[1, -1], [-1, 1]])


@st.composite
def integer_games(draw, max_size=5):
    m = draw(st.integers(1, max_size))
    n = draw(st.integers(1, max_size))
    elems = st.integers(-6, 6)
    c1 = draw(arrays(np.int64, (m, n), elements=elems))
    c2 = draw(arrays(np.int64, (m, n), elements=elems))
    return CostGame(tuple(range(m)), tuple(range(n)), c1, c2)


class TestCostGame:
    def test_shape_mismatch(self):
        with pytest.raises(GameError):
            CostGame((0, 1), (0,), [[1.0], [2.0], [3.0]], [[1.0], [2.0]])

    def test_non_finite(self):
        with pytest.raises(GameError):
            CostGame((0,), (0,), [[np.nan]], [[0.0]])

    def test_empty_strategies(self):
        with pytest.raises(GameError):
            CostGame((), (0,), np.zeros((0, 1)), np.zeros((0, 1)))

    def test_repeated_strategy(self):
        with pytest.raises(GameError):
            CostGame((1, 1), (0,), [[0.0], [0.0]], [[0.0], [0.0]])

    def test_matrices_are_read_only(self, rs1_case1):
        with pytest.raises(ValueError):
            rs1_case1.cost_p1[0, 0] = 5.0


class TestIsPsne:
    def test_kerala_rs1_equilibrium(self, rs1_case1):
        assert is_psne(rs1_case1, P(3, 5))

    def test_kerala_rs1_zero_demands_not_equilibrium(self, rs1_case1):
        assert not is_psne(rs1_case1, P(0, 0))
        # both players gain by raising demand
        c1, c2 = rs1_case1.costs(P(0, 0))
        assert rs1_case1.costs(P(1, 0))[0] < c1
        assert rs1_case1.costs(P(0, 1))[1] < c2

    def test_one_by_one(self):
        game = CostGame((4,), (2,), [[3.0]], [[7.0]])
        assert is_psne(game, P(4, 2))

    def test_out_of_range(self, rs1_case1):
        with pytest.raises(InvalidProfileError):
            is_psne(rs1_case1, P(9, 0))

    def test_tie_within_tolerance_is_stable(self):
        game = CostGame((0, 1), (0,), [[1.0], [1.0 - 5e-10]], [[0.0], [0.0]])
        assert is_psne(game, P(0, 0))
        assert is_psne(game, P(1, 0))


class TestFindPsne:
    def test_kerala_rs1_case1(self, rs1_case1):
        assert find_psne(rs1_case1) == [P(1, 7), P(2, 6), P(3, 5)]

    def test_kerala_rs2_case2(self, rs2_case2):
        assert find_psne(rs2_case2) == [P(5, 4), P(7, 2)]

    def test_matching_pennies_has_none(self):
        assert find_psne(PENNIES) == []

    @given(integer_games(max_size=6))
    def test_matches_brute_force(self, game):
        expected = brute_force_psne(game.strategies_p1, game.strategies_p2,
                                    game.cost_p1.tolist(), game.cost_p2.tolist())
        assert [tuple(p) for p in find_psne(game)] == expected

    @given(integer_games(), st.sampled_from([0.25, 0.5, 2.0, 3.0, 10.0]), st.integers(-50, 50))
    def test_affine_invariance(self, game, scale, shift):
        assert find_psne(game.transformed(scale, shift)) == find_psne(game)

    @given(integer_games())
    def test_sorted_without_duplicates(self, game):
        found = find_psne(game)
        assert all(a < b for a, b in zip(found, found[1:]))

    def test_non_monotone_strategy_labels_sorted_by_value(self):
        game = CostGame((3, 1), (0,), [[0.0], [0.0]], [[0.0], [0.0]])
        assert find_psne(game) == [P(1, 0), P(3, 0)]


class TestExpectedCost:
    def test_degenerate_at_kerala_equilibrium(self, rs1_case1):
        mixed = MixedProfile.pure(rs1_case1, P(3, 5))
        assert expected_cost(rs1_case1, mixed, 1) == pytest.approx(0.30006, abs=1e-4)

    def test_constant_matrix(self):
        game = CostGame((0, 1, 2), (0, 1), np.full((3, 2), 4.5), np.zeros((3, 2)))
        uniform = MixedProfile(np.full(3, 1 / 3), np.full(2, 0.5))
        assert expected_cost(game, uniform, 1) == pytest.approx(4.5)

    def test_arithmetic_mean(self):
        game = CostGame((0, 1), (0, 1), [[0, 1], [2, 3]], np.zeros((2, 2)))
        uniform = MixedProfile([0.5, 0.5], [0.5, 0.5])
        assert expected_cost(game, uniform, 1) == 1.5

    def test_dimension_mismatch(self, rs1_case1):
        with pytest.raises(GameError):
            expected_cost(rs1_case1, MixedProfile([0.5, 0.5], [1.0]), 1)

    def test_bad_player(self):
        with pytest.raises(GameError):
            expected_cost(PENNIES, MixedProfile([0.5, 0.5], [0.5, 0.5]), 3)

    def test_weights_must_sum_to_one(self):
        with pytest.raises(GameError):
            MixedProfile([0.5, 0.6], [1.0])


class TestMsne:
    def test_matching_pennies(self):
        (eq,) = find_msne(PENNIES)
        np.testing.assert_allclose(eq.p1_weights, [0.5, 0.5])
        np.testing.assert_allclose(eq.p2_weights, [0.5, 0.5])

    def test_hand_solved_2x2(self):
        # Player 2 indifferent: 2p = 2(1-p) -> p = 1/2; player 1 likewise q = 1/2.
        game = CostGame((0, 1), (0, 1), [[0, 2], [2, 0]], [[2, 0], [0, 2]])
        (eq,) = find_msne(game)
        np.testing.assert_allclose(eq.p1_weights, [0.5, 0.5])
        np.testing.assert_allclose(eq.p2_weights, [0.5, 0.5])
        assert not eq.degenerate

    def test_alias(self):
        assert find_msne_2x2_plus is find_msne

    def test_kerala_pure_equilibria_included(self, rs1_case1):
        found = find_msne(rs1_case1)
        pure = sorted(m.most_probable(rs1_case1) for m in found if m.is_pure())
        assert pure == [P(1, 7), P(2, 6), P(3, 5)]
        for m in found:
            assert deviation_check(rs1_case1.cost_p1.tolist(), rs1_case1.cost_p2.tolist(),
                                   m.p1_weights.tolist(), m.p2_weights.tolist()) == []

    def test_continuum_flagged_degenerate(self):
        # Player 1 is indifferent everywhere, so any mix of its rows that keeps
        # player 2 on column 0 is an equilibrium.
        game = CostGame((0, 1), (0, 1), np.zeros((2, 2)), [[0, 1], [0, 1]])
        found = find_msne(game)
        assert any(m.degenerate for m in found)
        for m in found:
            assert deviation_check(game.cost_p1.tolist(), game.cost_p2.tolist(),
                                   m.p1_weights.tolist(), m.p2_weights.tolist()) == []

    @settings(max_examples=60, deadline=None)
    @given(integer_games(max_size=4))
    def test_indifference_conditions(self, game):
        found = find_msne(game)
        assert found
        for m in found:
            assert deviation_check(game.cost_p1.tolist(), game.cost_p2.tolist(),
                                   m.p1_weights.tolist(), m.p2_weights.tolist()) == []

    @settings(max_examples=60, deadline=None)
    @given(integer_games(max_size=4))
    def test_pure_part_matches_psne(self, game):
        pure = sorted(m.most_probable(game) for m in find_msne(game) if m.is_pure())
        assert pure == find_psne(game)
