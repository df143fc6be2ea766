"""
Board Symmetry
Isometries, canonical forms, equivalence classes, foursomes and the flip partition of minimum dominating sets
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from board import BoardDims, QueenSet, Square
from errors import InvalidIsometry, MixedDims, NotASubset, OffBoard

LOGGER = logging.getLogger(__name__)


class Isometry(Enum):
    """The dihedral operations on a board; the last four need m == n"""
    IDENTITY = "identity"
    FLIP_HORIZONTAL = "flip_h"          # x -> n+1-x
    FLIP_VERTICAL = "flip_v"            # y -> m+1-y
    ROTATE_180 = "rot180"
    TRANSPOSE = "transpose"             # (x, y) -> (y, x)
    ANTI_TRANSPOSE = "anti_transpose"   # (x, y) -> (n+1-y, n+1-x)
    ROTATE_90 = "rot90"                 # counterclockwise
    ROTATE_270 = "rot270"

    @property
    def needs_square_board(self) -> bool:
        return self in _SQUARE_ONLY

    def map_square(self, sq: Square, dims: BoardDims) -> Square:
        m, n = dims.m, dims.n
        x, y = sq.x, sq.y
        if self is Isometry.IDENTITY:
            return sq
        if self is Isometry.FLIP_HORIZONTAL:
            return Square(n + 1 - x, y)
        if self is Isometry.FLIP_VERTICAL:
            return Square(x, m + 1 - y)
        if self is Isometry.ROTATE_180:
            return Square(n + 1 - x, m + 1 - y)
        if self is Isometry.TRANSPOSE:
            return Square(y, x)
        if self is Isometry.ANTI_TRANSPOSE:
            return Square(n + 1 - y, n + 1 - x)
        if self is Isometry.ROTATE_90:
            return Square(n + 1 - y, x)
        return Square(y, n + 1 - x)


_SQUARE_ONLY = frozenset({Isometry.TRANSPOSE, Isometry.ANTI_TRANSPOSE, Isometry.ROTATE_90, Isometry.ROTATE_270})
_RECTANGLE_GROUP = (Isometry.IDENTITY, Isometry.FLIP_HORIZONTAL, Isometry.FLIP_VERTICAL, Isometry.ROTATE_180)


def valid_isometries(dims: BoardDims) -> Tuple[Isometry, ...]:
    """4 isometries on a rectangle, all 8 on a square board."""
    if dims.is_square:
        return tuple(Isometry)
    return _RECTANGLE_GROUP


def apply(iso: Isometry, s: QueenSet) -> QueenSet:
    """Image of s under iso."""
    if iso.needs_square_board and not s.dims.is_square:
        raise InvalidIsometry(f"{iso.value} is not an isometry of the {s.dims.label()} board")
    return QueenSet(tuple(iso.map_square(sq, s.dims) for sq in s.squares), s.dims)


def compose(g: Isometry, h: Isometry, dims: BoardDims) -> Isometry:
    """The isometry acting as g after h on this board."""
    for iso in (g, h):
        if iso.needs_square_board and not dims.is_square:
            raise InvalidIsometry(f"{iso.value} is not an isometry of the {dims.label()} board")
    sample = list(dims.squares())
    image = [g.map_square(h.map_square(sq, dims), dims) for sq in sample]
    for candidate in valid_isometries(dims):
        if all(candidate.map_square(sq, dims) == img for sq, img in zip(sample, image)):
            return candidate
    raise InvalidIsometry(f"composition of {g.value} and {h.value} left the group")


def canonical(s: QueenSet) -> QueenSet:
    """Lexicographically smallest row-major image over the board group."""
    best = s
    for iso in valid_isometries(s.dims):
        image = apply(iso, s)
        if image.key < best.key:
            best = image
    return best


def stabilizer(s: QueenSet) -> List[Isometry]:
    return [iso for iso in valid_isometries(s.dims) if apply(iso, s) == s]


def symmetry_descriptor(s: QueenSet) -> str:
    """Names of the non-identity isometries fixing s, or 'none'."""
    names = [iso.value for iso in stabilizer(s) if iso is not Isometry.IDENTITY]
    return "+".join(names) if names else "none"


def orbit(s: QueenSet) -> List[QueenSet]:
    """Distinct images of s, sorted by key."""
    images = {apply(iso, s) for iso in valid_isometries(s.dims)}
    return sorted(images, key=lambda q: q.key)


@dataclass
class EquivClass:
    """Queen sets sharing one canonical form"""
    representative: QueenSet
    members: List[QueenSet] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def orbit_size(self) -> int:
        return len(valid_isometries(self.representative.dims)) // len(stabilizer(self.representative))


def classes(sets: Iterable[QueenSet]) -> List[EquivClass]:
    """Group sets by canonical form; classes sorted by representative."""
    sets = list(sets)
    if not sets:
        return []
    dims = sets[0].dims
    grouped: Dict[QueenSet, set] = {}
    for s in sets:
        if s.dims != dims:
            raise MixedDims(f"got {s.dims.label()} and {dims.label()} in one call")
        grouped.setdefault(canonical(s), set()).add(s)
    result = [EquivClass(rep, sorted(members, key=lambda q: q.key)) for rep, members in grouped.items()]
    result.sort(key=lambda c: c.representative.key)
    return result


# ---------------------------------------------------------------------
# Foursomes
# ---------------------------------------------------------------------

def _half(value: int) -> Union[int, Fraction]:
    return value // 2 if value % 2 == 0 else Fraction(value, 2)


@dataclass(frozen=True)
class Foursome:
    """
    Four squares (x+a, y+b), (x-a, y-b), (x-b, y+a), (x+b, y-a) about center (x, y).

    Everything is stored doubled so half-integer centers and offsets stay integral;
    the parameters are normalized to a > 0 and a > |b|.
    """
    cx2: int
    cy2: int
    a2: int
    b2: int

    @property
    def center(self) -> Tuple[Union[int, Fraction], Union[int, Fraction]]:
        return (_half(self.cx2), _half(self.cy2))

    @property
    def a(self) -> Union[int, Fraction]:
        return _half(self.a2)

    @property
    def b(self) -> Union[int, Fraction]:
        return _half(self.b2)

    def members(self) -> Tuple[Square, Square, Square, Square]:
        offsets = ((self.a2, self.b2), (-self.a2, -self.b2), (-self.b2, self.a2), (self.b2, -self.a2))
        return tuple(Square((self.cx2 + dx) // 2, (self.cy2 + dy) // 2) for dx, dy in offsets)

    def flipped_members(self) -> Tuple[Square, Square, Square, Square]:
        """Members reflected across the horizontal line through the center."""
        return tuple(Square(sq.x, self.cy2 - sq.y) for sq in self.members())

    def flipped(self) -> "Foursome":
        """The foursome formed by the flipped members (same center)."""
        return _match_foursome(self.flipped_members())

    def describe(self) -> Dict[str, object]:
        return {"center2": [self.cx2, self.cy2], "offset2": [self.a2, self.b2]}


def _match_foursome(quad: Sequence[Square]) -> Optional[Foursome]:
    sx = sum(sq.x for sq in quad)
    sy = sum(sq.y for sq in quad)
    if sx % 2 or sy % 2:
        return None
    cx2, cy2 = sx // 2, sy // 2
    vectors = {(2 * sq.x - cx2, 2 * sq.y - cy2) for sq in quad}
    u, v = next(iter(vectors))
    if {(u, v), (-u, -v), (-v, u), (v, -u)} != vectors:
        return None
    if abs(u) == abs(v) or u == 0 or v == 0:
        return None
    # the four parameterizations of one square pattern; keep a > |b|, a > 0
    for a2, b2 in ((u, v), (-u, -v), (-v, u), (v, -u)):
        if a2 > 0 and a2 > abs(b2):
            return Foursome(cx2, cy2, a2, b2)
    return None


def foursomes_of(s: QueenSet) -> List[Foursome]:
    found = []
    for quad in combinations(s.squares, 4):
        match = _match_foursome(quad)
        if match is not None:
            found.append(match)
    return found


def flip(s: QueenSet, f: Foursome) -> QueenSet:
    """Replace the foursome by its mirror image about the horizontal line through its center."""
    members = set(f.members())
    if not members.issubset(s.squares):
        raise NotASubset(f"foursome centered at {f.center} is not contained in {s}")
    images = f.flipped_members()
    for sq in images:
        if not s.dims.contains(sq):
            raise OffBoard(f"flip of foursome centered at {f.center} leaves the {s.dims.label()} board")
    rest = [sq for sq in s.squares if sq not in members]
    return QueenSet(tuple(rest) + images, s.dims)


def foursome_census(equiv: Iterable[EquivClass]) -> Dict[int, int]:
    """How many classes have 0, 1, 2, ... foursomes."""
    counts = Counter(len(foursomes_of(c.representative)) for c in equiv)
    return dict(sorted(counts.items()))


# ---------------------------------------------------------------------
# Partition
# ---------------------------------------------------------------------

class UnionFind:
    """Disjoint sets with path compression and union by rank."""

    def __init__(self):
        self.parent: Dict[int, int] = {}
        self.rank: Counter = Counter()

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        px, py = self.find(x), self.find(y)
        if px == py:
            return
        if self.rank[px] < self.rank[py]:
            px, py = py, px
        self.parent[py] = px
        if self.rank[px] == self.rank[py]:
            self.rank[px] += 1


def partition(equiv: Sequence[EquivClass]) -> List[List[QueenSet]]:
    """Transitive closure of 'equivalent or one foursome flip apart', as cells of representatives."""
    reps = [c.representative for c in equiv]
    if not reps:
        return []
    dims = reps[0].dims
    index = {rep: i for i, rep in enumerate(reps)}
    uf = UnionFind()
    for i, rep in enumerate(reps):
        if rep.dims != dims:
            raise MixedDims(f"got {rep.dims.label()} and {dims.label()} in one partition")
        uf.find(i)
        for f in foursomes_of(rep):
            try:
                flipped = flip(rep, f)
            except OffBoard:
                LOGGER.debug("skipping off-board flip of %s at %s", rep, f.center)
                continue
            j = index.get(canonical(flipped))
            if j is None:
                LOGGER.debug("flip of %s lands outside the given classes", rep)
                continue
            uf.union(i, j)
    cells: Dict[int, List[QueenSet]] = {}
    for i, rep in enumerate(reps):
        cells.setdefault(uf.find(i), []).append(rep)
    result = [sorted(cell, key=lambda q: q.key) for cell in cells.values()]
    result.sort(key=lambda cell: cell[0].key)
    return result


def cell_size_histogram(cells: Iterable[List[QueenSet]]) -> Dict[int, int]:
    counts = Counter(len(cell) for cell in cells)
    return dict(sorted(counts.items()))
