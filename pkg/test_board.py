"""
Board model tests: attacks, coverage, centered frames
"""

import pytest

from board import (
    BoardDims,
    CenteredFrame,
    LineId,
    LineKind,
    QueenSet,
    Square,
    attacks,
    coverage_grid,
    geometry,
    is_dominating,
    is_independent,
    lines_of,
    render_board,
    transpose,
    uncovered_squares,
)
from errors import DuplicateSquare, OffBoard, OutOfBounds


def test_attacks_along_all_four_lines():
    """A queen attacks its row, column and both diagonals, never itself"""
    q = Square(3, 3)
    assert attacks(q, (3, 7))
    assert attacks(q, (8, 3))
    assert attacks(q, (5, 5))
    assert attacks(q, (1, 5))
    assert not attacks(q, (4, 5))
    assert not attacks(q, q)


def test_lines_of_uses_difference_and_sum():
    col, row, diff, summ = lines_of((2, 5))
    assert col == LineId(LineKind.COLUMN, 2)
    assert row == LineId(LineKind.ROW, 5)
    assert diff == LineId(LineKind.DIFF_DIAG, 3)
    assert summ == LineId(LineKind.SUM_DIAG, 7)


def test_center_queen_dominates_three_by_three():
    assert is_dominating([(2, 2)], (3, 3))
    assert geometry(BoardDims(3, 3)).max_cover == 9


def test_corner_queen_leaves_knight_squares_uncovered():
    assert uncovered_squares([(1, 1)], (3, 3)) == [Square(3, 2), Square(2, 3)]


def test_coverage_grid_shape_and_values():
    s = QueenSet.of((3, 3), [(1, 1)])
    grid = coverage_grid(s)
    assert grid.shape == (3, 3)
    assert grid.sum() == 7
    assert not grid[1, 2]


def test_four_by_four_center_queen_covers_twelve():
    s = QueenSet.of((4, 4), [(2, 2)])
    assert s.coverage.bit_count() == 12
    assert geometry(BoardDims(4, 4)).max_cover == 12


def test_out_of_bounds_and_duplicates_are_rejected():
    with pytest.raises(OutOfBounds):
        QueenSet.of((3, 4), [(5, 1)])
    with pytest.raises(DuplicateSquare):
        QueenSet.of((3, 4), [(1, 1), (1, 1)])
    with pytest.raises(ValueError):
        BoardDims(0, 4)


def test_index_round_trip_is_row_major():
    dims = BoardDims(3, 5)
    assert dims.index(Square(1, 1)) == 0
    assert dims.index(Square(5, 1)) == 4
    assert dims.index(Square(1, 2)) == 5
    assert all(dims.square_at(dims.index(sq)) == sq for sq in dims.squares())


def test_transpose_swaps_coordinates():
    dims, squares = transpose((3, 6), [(2, 2), (5, 2)])
    assert dims == BoardDims(6, 3)
    assert squares == [Square(2, 2), Square(2, 5)]
    assert is_dominating(squares, dims)


def test_three_by_six_witness():
    s = QueenSet.of((3, 6), [(2, 2), (5, 2)])
    assert s.dominates
    assert s.transposed().dominates


def test_unit_frame_origin_is_board_center():
    frame = CenteredFrame((13, 19), 1)
    assert frame.to_corner(0, 0) == Square(10, 7)
    assert frame.to_corner(9, 0) == Square(19, 7)
    assert frame.from_corner((1, 1)) == (-9, -6)


def test_doubled_frame_on_even_width():
    frame = CenteredFrame((13, 16), 2)
    assert frame.to_corner(1, -6) == Square(9, 4)
    assert frame.from_corner((9, 4)) == (1, -6)
    with pytest.raises(OffBoard):
        frame.to_corner(0, 0)
    with pytest.raises(OffBoard):
        frame.to_corner(17, 0)


def test_independence(eleven_set):
    assert is_independent(eleven_set)
    assert not is_independent(QueenSet.of((4, 4), [(1, 1), (4, 4)]))


def test_render_marks_queens_and_gaps():
    text = render_board(QueenSet.of((3, 3), [(1, 1)]))
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[-1].split() == ["1", "Q", ".", "."]
    assert lines[1].split() == ["2", ".", ".", "x"]


def test_interior_queen_covers_eight_edge_squares():
    dims = BoardDims(8, 8)
    edge = [sq for sq in dims.squares() if sq.x in (1, 8) or sq.y in (1, 8)]
    for q in dims.squares():
        if q in edge:
            continue
        assert sum(1 for sq in edge if attacks(q, sq)) == 8, q


@pytest.mark.parametrize("m,n", [(1, 1), (3, 3), (4, 7), (8, 11), (6, 2)])
def test_every_line_family_is_counted(m, n):
    """n columns, m rows and m+n-1 diagonals in each direction"""
    dims = BoardDims(m, n)
    lines = {line for sq in dims.squares() for line in lines_of(sq)}
    assert len(lines) == m + n + 2 * (m + n - 1)
    by_kind = {kind: sum(1 for line in lines if line.kind is kind) for kind in LineKind}
    assert by_kind == {LineKind.COLUMN: n, LineKind.ROW: m, LineKind.DIFF_DIAG: m + n - 1, LineKind.SUM_DIAG: m + n - 1}


@pytest.mark.slow
@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 7) for n in range(1, 7)])
def test_domination_agrees_with_pairwise_attacks(m, n, rng):
    """Bitmask domination test against a square-by-square scan, on random sets"""
    dims = BoardDims(m, n)
    squares = list(dims.squares())
    for _ in range(200):
        size = int(rng.integers(1, len(squares) + 1))
        picked = [squares[i] for i in rng.choice(len(squares), size=size, replace=False)]
        expected = all(any(q == sq or attacks(q, sq) for q in picked) for sq in squares)
        assert is_dominating(picked, dims) == expected, picked
