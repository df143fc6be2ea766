"""
Shared fixtures for the queens domination tests
"""

import numpy as np
import pytest

from board import BoardDims, CenteredFrame, QueenSet
from solution_store import Table1Store


@pytest.fixture(scope="session")
def table():
    return Table1Store()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def eleven_set():
    """The 5-queen dominating set of 11 x 11: (0,0), +-(2,4), +-(4,-2) about the center."""
    return CenteredFrame(BoardDims(11, 11), 1).queen_set([(0, 0), (2, 4), (-2, -4), (4, -2), (-4, 2)])


@pytest.fixture
def example1_set():
    """10-queen 0-cover of 13 x 19 in the centered unit frame."""
    points = [(9, 0), (-9, 0), (7, -6), (-7, 6), (5, 2), (-5, -2), (3, 2), (-3, -2), (1, -4), (-1, 4)]
    return CenteredFrame(BoardDims(13, 19), 1).queen_set(points)


EXAMPLE2_POINTS = [(1, -6), (-1, 6), (3, 4), (-3, -4), (3, 0), (-3, 0), (3, -2), (-3, 2)]
NINE_SIX_TWO_POINTS = [(-5, 0), (5, 0), (-3, 4), (3, -4), (-1, 8), (1, -8), (1, 2), (-1, -2), (3, 6), (-3, -6)]


@pytest.fixture
def example2_set():
    """8-queen centrally strong set on 13 x 16 (doubled frame)."""
    return CenteredFrame(BoardDims(13, 16), 2).queen_set(EXAMPLE2_POINTS)


def column_set(m: int, n: int) -> QueenSet:
    x = (n + 1) // 2
    return QueenSet.of((m, n), [(x, y) for y in range(1, m + 1)])
