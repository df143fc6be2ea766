"""
Queens Graph Board
Squares, line families, attack relations, coverage bitmasks and domination tests for Q(m x n)

Coordinates are 1-based with the origin at the lower-left corner: column x runs 1..n,
row y runs 1..m. Internally square (x, y) owns bit (y-1)*n + (x-1), so bit order is row-major.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache, total_ordering
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

import numpy as np

from errors import DuplicateSquare, OffBoard, OutOfBounds


@total_ordering
@dataclass(frozen=True)
class Square:
    """One board cell: column x, row y"""
    x: int
    y: int

    def __lt__(self, other: "Square") -> bool:
        if not isinstance(other, Square):
            return NotImplemented
        return (self.y, self.x) < (other.y, other.x)

    def as_pair(self) -> Tuple[int, int]:
        return (self.x, self.y)


SquareLike = Union[Square, Tuple[int, int], Sequence[int]]


def as_square(value: SquareLike) -> Square:
    """Accept a Square or an (x, y) pair."""
    if isinstance(value, Square):
        return value
    x, y = value
    return Square(int(x), int(y))


@dataclass(frozen=True)
class BoardDims:
    """An m-row, n-column board"""
    m: int
    n: int

    def __post_init__(self):
        if int(self.m) < 1 or int(self.n) < 1:
            raise ValueError(f"board needs at least one row and one column, got {self.m}x{self.n}")

    @property
    def size(self) -> int:
        return self.m * self.n

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    def contains(self, sq: Square) -> bool:
        return 1 <= sq.x <= self.n and 1 <= sq.y <= self.m

    def require(self, sq: Square) -> Square:
        if not self.contains(sq):
            raise OutOfBounds(f"square ({sq.x},{sq.y}) is outside the {self.m}x{self.n} board")
        return sq

    def index(self, sq: Square) -> int:
        return (sq.y - 1) * self.n + (sq.x - 1)

    def square_at(self, index: int) -> Square:
        y, x = divmod(index, self.n)
        return Square(x + 1, y + 1)

    def squares(self) -> Iterator[Square]:
        """All squares in row-major order."""
        for y in range(1, self.m + 1):
            for x in range(1, self.n + 1):
                yield Square(x, y)

    def transposed(self) -> "BoardDims":
        return BoardDims(self.n, self.m)

    def normalized(self) -> "BoardDims":
        """The same board with m <= n."""
        return self if self.m <= self.n else self.transposed()

    def label(self) -> str:
        return f"{self.m}x{self.n}"


def as_dims(value: Union[BoardDims, Tuple[int, int]]) -> BoardDims:
    if isinstance(value, BoardDims):
        return value
    m, n = value
    return BoardDims(int(m), int(n))


class LineKind(Enum):
    """The four line families"""
    COLUMN = "column"
    ROW = "row"
    DIFF_DIAG = "diff"
    SUM_DIAG = "sum"


@dataclass(frozen=True)
class LineId:
    """A line: its family and number (x, y, y-x or y+x)"""
    kind: LineKind
    number: int


def lines_of(sq: SquareLike) -> Tuple[LineId, LineId, LineId, LineId]:
    """Column, row, difference diagonal and sum diagonal through a square."""
    sq = as_square(sq)
    return (
        LineId(LineKind.COLUMN, sq.x),
        LineId(LineKind.ROW, sq.y),
        LineId(LineKind.DIFF_DIAG, sq.y - sq.x),
        LineId(LineKind.SUM_DIAG, sq.y + sq.x),
    )


def attacks(a: SquareLike, b: SquareLike) -> bool:
    """True iff the squares are distinct and share a row, column or diagonal."""
    a, b = as_square(a), as_square(b)
    if a == b:
        return False
    return a.x == b.x or a.y == b.y or a.y - a.x == b.y - b.x or a.y + a.x == b.y + b.x


class BoardGeometry:
    """Precomputed line and attack masks for one board size"""

    def __init__(self, dims: BoardDims):
        m, n = dims.m, dims.n
        self.dims = dims
        self.full = (1 << (m * n)) - 1
        self.row_masks: List[int] = [((1 << n) - 1) << (y * n) for y in range(m)]
        self.col_masks: List[int] = [0] * n
        diff: Dict[int, int] = {}
        summ: Dict[int, int] = {}
        for y in range(m):
            for x in range(n):
                bit = 1 << (y * n + x)
                self.col_masks[x] |= bit
                diff[y - x] = diff.get(y - x, 0) | bit
                summ[y + x] = summ.get(y + x, 0) | bit
        self.attack: List[int] = []
        for y in range(m):
            for x in range(n):
                self.attack.append(self.row_masks[y] | self.col_masks[x] | diff[y - x] | summ[y + x])
        self.max_cover = max(mask.bit_count() for mask in self.attack)


@lru_cache(maxsize=128)
def geometry(dims: BoardDims) -> BoardGeometry:
    return BoardGeometry(dims)


def coverage_mask(queens: Iterable[SquareLike], dims: Union[BoardDims, Tuple[int, int]]) -> int:
    """Bitmask of squares that are occupied or attacked by a member of queens."""
    dims = as_dims(dims)
    geo = geometry(dims)
    mask = 0
    for raw in queens:
        sq = dims.require(as_square(raw))
        mask |= geo.attack[dims.index(sq)]
    return mask


def is_dominating(queens: Iterable[SquareLike], dims: Union[BoardDims, Tuple[int, int]]) -> bool:
    dims = as_dims(dims)
    return coverage_mask(queens, dims) == geometry(dims).full


def uncovered_squares(queens: Iterable[SquareLike], dims: Union[BoardDims, Tuple[int, int]]) -> List[Square]:
    dims = as_dims(dims)
    missing = geometry(dims).full & ~coverage_mask(queens, dims)
    return mask_squares(missing, dims)


def mask_squares(mask: int, dims: BoardDims) -> List[Square]:
    """Squares whose bits are set, row-major."""
    squares = []
    while mask:
        low = mask & -mask
        squares.append(dims.square_at(low.bit_length() - 1))
        mask ^= low
    return squares


@dataclass(frozen=True)
class QueenSet:
    """A set of queen squares on a board, kept sorted row-major"""
    squares: Tuple[Square, ...]
    dims: BoardDims

    def __post_init__(self):
        dims = as_dims(self.dims)
        ordered = tuple(sorted(as_square(s) for s in self.squares))
        for first, second in zip(ordered, ordered[1:]):
            if first == second:
                raise DuplicateSquare(f"square ({first.x},{first.y}) given twice")
        for sq in ordered:
            dims.require(sq)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "squares", ordered)

    @classmethod
    def of(cls, dims: Union[BoardDims, Tuple[int, int]], squares: Iterable[SquareLike]) -> "QueenSet":
        return cls(tuple(as_square(s) for s in squares), as_dims(dims))

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self) -> Iterator[Square]:
        return iter(self.squares)

    def __contains__(self, sq: object) -> bool:
        return sq in self.squares

    @cached_property
    def coverage(self) -> int:
        return coverage_mask(self.squares, self.dims)

    @cached_property
    def occupied_lines(self) -> Counter:
        """Multiset of LineIds, four per member."""
        counts: Counter = Counter()
        for sq in self.squares:
            counts.update(lines_of(sq))
        return counts

    @property
    def line_set(self) -> frozenset:
        return frozenset(self.occupied_lines)

    @property
    def dominates(self) -> bool:
        return self.coverage == geometry(self.dims).full

    @property
    def key(self) -> Tuple[Tuple[int, int], ...]:
        """Row-major comparison key, (y, x) per member."""
        return tuple((sq.y, sq.x) for sq in self.squares)

    def pairs(self) -> List[List[int]]:
        return [[sq.x, sq.y] for sq in self.squares]

    def uncovered(self) -> List[Square]:
        return mask_squares(geometry(self.dims).full & ~self.coverage, self.dims)

    def transposed(self) -> "QueenSet":
        return QueenSet(tuple(Square(sq.y, sq.x) for sq in self.squares), self.dims.transposed())

    def __str__(self) -> str:
        body = ", ".join(f"({sq.x},{sq.y})" for sq in self.squares)
        return f"{self.dims.label()} {{{body}}}"


def transpose(dims: Union[BoardDims, Tuple[int, int]], queens: Iterable[SquareLike]) -> Tuple[BoardDims, List[Square]]:
    """Swap rows and columns: m<->n and (x, y)<->(y, x)."""
    dims = as_dims(dims)
    return dims.transposed(), [Square(sq.y, sq.x) for sq in map(as_square, queens)]


def is_independent(s: QueenSet) -> bool:
    """No two members attack each other."""
    members = s.squares
    return not any(attacks(a, b) for i, a in enumerate(members) for b in members[i + 1:])


class CenteredFrame:
    """
    Centered coordinates on a board.

    scale=1: unit squares, (0, 0) at the board center (needs odd sides for integer squares).
    scale=2: squares of edge length 2, so every square center has integer coordinates.
    """

    def __init__(self, dims: Union[BoardDims, Tuple[int, int]], scale: int = 1):
        if scale not in (1, 2):
            raise ValueError(f"scale must be 1 or 2, got {scale}")
        self.dims = as_dims(dims)
        self.scale = scale

    def to_corner(self, X: int, Y: int) -> Square:
        factor = 2 // self.scale
        x2 = factor * X + self.dims.n + 1
        y2 = factor * Y + self.dims.m + 1
        if x2 % 2 or y2 % 2:
            raise OffBoard(f"({X},{Y}) is not a square center on {self.dims.label()} (scale {self.scale})")
        sq = Square(x2 // 2, y2 // 2)
        if not self.dims.contains(sq):
            raise OffBoard(f"({X},{Y}) lies outside {self.dims.label()}")
        return sq

    def from_corner(self, sq: SquareLike) -> Tuple[int, int]:
        sq = as_square(sq)
        x2 = 2 * sq.x - self.dims.n - 1
        y2 = 2 * sq.y - self.dims.m - 1
        if self.scale == 2:
            return (x2, y2)
        if x2 % 2 or y2 % 2:
            raise OffBoard(f"{self.dims.label()} has no unit-frame square at its center")
        return (x2 // 2, y2 // 2)

    def queen_set(self, points: Iterable[Tuple[int, int]]) -> QueenSet:
        return QueenSet(tuple(self.to_corner(X, Y) for X, Y in points), self.dims)


def coverage_grid(s: QueenSet) -> np.ndarray:
    """Boolean m x n array, grid[y-1, x-1] true when (x, y) is covered."""
    dims = s.dims
    bits = [(s.coverage >> i) & 1 for i in range(dims.size)]
    return np.array(bits, dtype=bool).reshape(dims.m, dims.n)


def render_board(s: QueenSet) -> str:
    """Text diagram, top row first: Q queen, . covered, x uncovered."""
    grid = coverage_grid(s)
    occupied = set(s.squares)
    rows = []
    for y in range(s.dims.m, 0, -1):
        cells = []
        for x in range(1, s.dims.n + 1):
            if Square(x, y) in occupied:
                cells.append("Q")
            else:
                cells.append("." if grid[y - 1, x - 1] else "x")
        rows.append(f"{y:>3} " + " ".join(cells))
    return "\n".join(rows)


if __name__ == "__main__":
    demo = QueenSet.of((11, 11), [(6, 6), (8, 10), (4, 2), (2, 8), (10, 4)])
    print(demo)
    print(render_board(demo))
    print(f"dominates: {demo.dominates}")
