"""Exact center-game oracle: kernel enumeration against known games."""

import random
from fractions import Fraction as F

import pytest

from fuzzygame import (
    CenterGame,
    GameTooLargeError,
    PayoffMatrix,
    col_dominates,
    oracle_check,
    oracle_value,
    row_dominates,
    solve_pipeline,
    submatrix,
)
from fuzzygame.solver import Solution, SolutionKind


def game(rows):
    return CenterGame.of(rows)


class TestOracleValue:
    def test_mixed_2x2(self):
        sol = oracle_value(game([[15, 16], [20, 5]]))
        assert sol.value == F(245, 16)
        assert sol.x == (F(15, 16), F(1, 16))
        assert sol.y == (F(11, 16), F(5, 16))

    def test_single_strategy(self):
        sol = oracle_value(game([[7]]))
        assert sol.value == 7
        assert sol.x == (1,)
        assert sol.y == (1,)

    def test_pure_saddle(self):
        sol = oracle_value(game([[19, 16], [0, 5]]))
        assert sol.value == 16
        assert sol.x == (1, 0)
        assert sol.y == (0, 1)

    def test_guarantees_are_exact(self):
        rng = random.Random(5150)
        for _ in range(200):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            g = game([[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)])
            sol = oracle_value(g)
            for j in range(n):
                assert sum(sol.x[i] * g.grid[i][j] for i in range(m)) >= sol.value
            for i in range(m):
                assert sum(g.grid[i][j] * sol.y[j] for j in range(n)) <= sol.value

    def test_size_cap(self):
        with pytest.raises(GameTooLargeError):
            oracle_value(game([[0] * 9] * 2))


class TestOracleProperties:
    def test_role_swap_negates_value(self):
        rng = random.Random(808)
        for _ in range(100):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
            swapped = [[-rows[i][j] for i in range(m)] for j in range(n)]
            assert oracle_value(game(swapped)).value == -oracle_value(game(rows)).value

    def test_monotone_in_single_entries(self):
        rng = random.Random(909)
        for _ in range(100):
            m, n = rng.randint(1, 3), rng.randint(1, 3)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
            before = oracle_value(game(rows)).value
            i, j = rng.randrange(m), rng.randrange(n)
            rows[i][j] += rng.randint(1, 5)
            assert oracle_value(game(rows)).value >= before

    def test_weak_dominance_deletion_preserves_value(self):
        rng = random.Random(1010)
        checked = 0
        while checked < 60:
            m, n = rng.randint(2, 4), rng.randint(2, 4)
            pm = PayoffMatrix.of(
                [[(rng.randint(-5, 5), 0.1) for _ in range(n)] for _ in range(m)]
            )
            full = oracle_value(CenterGame.from_payoff(pm)).value
            for r in range(m):
                for i in range(m):
                    if i != r and row_dominates(pm, i, r) is not None:
                        rest = submatrix(pm, [k for k in range(m) if k != r], range(n))
                        assert oracle_value(CenterGame.from_payoff(rest)).value == full
                        checked += 1
            for s in range(n):
                for j in range(n):
                    if j != s and col_dominates(pm, j, s) is not None:
                        rest = submatrix(pm, range(m), [k for k in range(n) if k != s])
                        assert oracle_value(CenterGame.from_payoff(rest)).value == full
                        checked += 1

    def test_agrees_with_2x2_closed_form(self):
        # spot check; the full 10k sweep lives in the acceptance suite
        rng = random.Random(1111)
        from fuzzygame import solve_2x2

        count = 0
        while count < 200:
            rows = [[rng.randint(-20, 20) for _ in range(2)] for _ in range(2)]
            pm = PayoffMatrix.of([[(c, 0.1) for c in row] for row in rows])
            sol = solve_2x2(pm)
            if sol.kind is not SolutionKind.MIXED_2X2:
                continue
            oracle = oracle_value(CenterGame.of(rows))
            assert F(sol.value.center) == oracle.value
            assert sol.x == oracle.x and sol.y == oracle.y
            count += 1


class TestOracleCheck:
    def test_simulation_pipeline_passes(self, simulation_3x4):
        report = oracle_check(simulation_3x4, solve_pipeline(simulation_3x4))
        assert report.passed
        assert report.oracle_center == F(245, 16)

    def test_printed_y_variant_fails_guarantee(self, simulation_3x4):
        # A column mix of (0, 1/16, 0, 15/16) concedes 255/16 > 245/16 on row 2.
        good = solve_pipeline(simulation_3x4)
        bad = Solution(
            x=good.x,
            y=(F(0), F(1, 16), F(0), F(15, 16)),
            value=good.value,
            kind=good.kind,
            trace=(),
        )
        report = oracle_check(simulation_3x4, bad)
        assert not report.y_guarantee
        assert report.y_ceiling == F(255, 16)
        assert report.value_match  # only the guarantee is broken
        assert not report.passed

    def test_saddle_game_passes(self, saddle_2x2):
        report = oracle_check(saddle_2x2, solve_pipeline(saddle_2x2))
        assert report.passed
        assert report.oracle_center == 16
