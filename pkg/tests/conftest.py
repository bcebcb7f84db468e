"""Worked example matrices shared across the suite."""

import pytest

from fuzzygame import PayoffMatrix


@pytest.fixture
def dominance_3x3():
    # 3x3 where the second row dominates the third, then the first column
    # dominates the third.
    return PayoffMatrix.of([
        [(1, 0.2), (7, 0.3), (2, 0.1)],
        [(6, 0.2), (2, 0.1), (7, 0.3)],
        [(0, 0.2), (1, 0.2), (6, 0.2)],
    ])


@pytest.fixture
def convex_3x3():
    # 3x3 reducible only through convex combinations (rows 2+3 beat row 1,
    # then columns 1+2 beat column 3).
    return PayoffMatrix.of([
        [(1, 0.4), (2, 0.1), (-1, 0.1)],
        [(3, 0.5), (1, 0.3), (2, 0.2)],
        [(-1, 0.2), (3, 0.4), (2, 0.4)],
    ])


@pytest.fixture
def subgame_2x3():
    # 2x3 with no saddle and no dominance; solved by sub-game enumeration.
    return PayoffMatrix.of([
        [(19, 0.2), (15, 0.4), (16, 0.1)],
        [(0, 0.2), (20, 0.4), (5, 0.4)],
    ])


@pytest.fixture
def simulation_3x4():
    # Full 3x4 pipeline exercise: one row deletion, one column deletion,
    # then sub-game selection.
    return PayoffMatrix.of([
        [(8, 0.3), (15, 0.4), (-4, 0.1), (-2, 0.4)],
        [(19, 0.1), (15, 0.5), (17, 0.4), (16, 0.1)],
        [(0, 0.3), (20, 0.2), (15, 0.5), (5, 0.4)],
    ])


@pytest.fixture
def saddle_2x2():
    # 2x2 with a pure saddle at (row 1, col 2).
    return PayoffMatrix.of([
        [(19, 0.2), (16, 0.1)],
        [(0, 0.2), (5, 0.4)],
    ])


@pytest.fixture
def irreducible_4x4():
    # Matching-pennies style: full-support optimum, no saddle, no dominance.
    return PayoffMatrix.of([
        [(3, 0.1) if i == j else (-1, 0.1) for j in range(4)] for i in range(4)
    ])
