"""
Dominating Set Constructions
0-covers built from line plans, centrally strong sets around a central sub-board, and the explicit families

Two centered frames are used. 0-covers live in the unit frame (origin on the board's center square).
Centrally strong sets live in the doubled frame, where squares have edge length two so every square
center is an integer point. Everything is converted to the corner frame only when a QueenSet is built.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

from board import BoardDims, CenteredFrame, LineId, LineKind, QueenSet, Square, as_dims, lines_of
from errors import InfeasiblePlan, InvalidM1, InvalidParams, InvalidParity, NegativeAuxCount, OffBoard

LOGGER = logging.getLogger(__name__)

Point = Tuple[int, int]


# ---------------------------------------------------------------------
# Orthodox sets and 0-covers
# ---------------------------------------------------------------------

def _nearest_center(length: int, parity: int) -> Optional[int]:
    """Coordinate in 1..length with the given parity closest to the middle (ties to the smaller)."""
    options = [v for v in range(1, length + 1) if v % 2 == parity]
    if not options:
        return None
    return min(options, key=lambda v: (abs(2 * v - length - 1), v))


def _origins(dims: BoardDims) -> List[Square]:
    """One origin per parity class, the one nearest the board center."""
    origins = []
    for px in (0, 1):
        for py in (0, 1):
            x, y = _nearest_center(dims.n, px), _nearest_center(dims.m, py)
            if x is not None and y is not None:
                origins.append(Square(x, y))
    origins.sort(key=lambda o: (abs(2 * o.x - dims.n - 1) + abs(2 * o.y - dims.m - 1), o.y, o.x))
    return origins


def _orthodox_at(s: QueenSet, origin: Square) -> bool:
    columns = {sq.x for sq in s.squares}
    rows = {sq.y for sq in s.squares}
    n, m = s.dims.n, s.dims.m
    if any((x - origin.x) % 2 == 0 and x not in columns for x in range(1, n + 1)):
        return False
    return all((y - origin.y) % 2 or y in rows for y in range(1, m + 1))


def is_orthodox(s: QueenSet, origin: Optional[Union[Square, Point]] = None) -> bool:
    """
    Every even column and every even row (relative to origin) holds a member.

    Without an origin every placement is tried; only its parity matters.
    """
    if origin is not None:
        o = origin if isinstance(origin, Square) else Square(*origin)
        return _orthodox_at(s, o)
    return any(_orthodox_at(s, o) for o in _origins(s.dims))


def _odd_odd_covered(s: QueenSet, origin: Square) -> bool:
    diffs = {sq.y - sq.x for sq in s.squares}
    sums = {sq.y + sq.x for sq in s.squares}
    for y in range(1, s.dims.m + 1):
        if (y - origin.y) % 2 == 0:
            continue
        for x in range(1, s.dims.n + 1):
            if (x - origin.x) % 2 == 0:
                continue
            if y - x not in diffs and y + x not in sums:
                return False
    return True


def is_zero_cover(s: QueenSet) -> Optional[Square]:
    """
    An origin making s orthodox with every odd-odd square on an occupied diagonal, or None.

    The returned origin is the square of the winning parity class nearest the board center.
    """
    for origin in _origins(s.dims):
        if _orthodox_at(s, origin) and _odd_odd_covered(s, origin):
            assert s.dominates, f"0-cover {s} does not dominate"
            return origin
    return None


# ---------------------------------------------------------------------
# Line plans
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class LinePlan:
    """
    Line numbers a construction must realize, in the frame's centered coordinates.

    For each of the four families the required lines plus the auxiliary multiset give the
    exact multiset of that family's numbers over the placed queens.
    """
    frame: CenteredFrame
    size: int
    required_lines: FrozenSet[LineId]
    auxiliary_lines: Tuple[LineId, ...] = ()

    def numbers(self, kind: LineKind) -> List[int]:
        values = [line.number for line in self.required_lines if line.kind is kind]
        values += [line.number for line in self.auxiliary_lines if line.kind is kind]
        return sorted(values)

    def counts(self) -> Dict[LineKind, int]:
        return {kind: len(self.numbers(kind)) for kind in LineKind}


def linear_residuals(plan: LinePlan) -> Tuple[int, int]:
    """(sum d - (sum y - sum x), sum s - (sum y + sum x)); both zero for a realizable plan."""
    cols = sum(plan.numbers(LineKind.COLUMN))
    rows = sum(plan.numbers(LineKind.ROW))
    diffs = sum(plan.numbers(LineKind.DIFF_DIAG))
    sums = sum(plan.numbers(LineKind.SUM_DIAG))
    return (diffs - (rows - cols), sums - (rows + cols))


def quadratic_residual(plan: LinePlan) -> int:
    """sum d^2 + sum s^2 - 2(sum x^2 + sum y^2), zero for a realizable plan."""
    def squares(kind: LineKind) -> int:
        return sum(v * v for v in plan.numbers(kind))

    return (squares(LineKind.DIFF_DIAG) + squares(LineKind.SUM_DIAG)
            - 2 * (squares(LineKind.COLUMN) + squares(LineKind.ROW)))


def check_plan(plan: LinePlan) -> None:
    """Raise InfeasiblePlan unless every family has size numbers and both constraints hold."""
    for kind, count in plan.counts().items():
        if count != plan.size:
            raise InfeasiblePlan(f"{kind.value} lines: {count} numbers for {plan.size} queens")
    linear = linear_residuals(plan)
    if linear != (0, 0):
        raise InfeasiblePlan(f"linear line-number constraints fail (residuals {linear})")
    quadratic = quadratic_residual(plan)
    if quadratic:
        raise InfeasiblePlan(f"quadratic line-number constraint fails (residual {quadratic})")


def realized_plan(s: QueenSet, frame: CenteredFrame) -> LinePlan:
    """The plan a placed set actually realizes: every line of every queen, all as auxiliary lines."""
    lines = tuple(line for sq in s.squares for line in lines_of(frame.from_corner(sq)))
    return LinePlan(frame, len(s), frozenset(), lines)


def _lines(kind: LineKind, numbers: Iterable[int]) -> List[LineId]:
    return [LineId(kind, v) for v in numbers]


EXAMPLE1_DIMS = BoardDims(13, 19)
EXAMPLE1_REQUIRED_DIAGONALS = (-9, -5, -3, -1, 1, 3, 5, 9)
EXAMPLE1_REQUIRED_ROWS = (-6, -4, -2, 0, 2, 4, 6)
EXAMPLE1_COLUMNS = (-9, -7, -5, -3, -1, 1, 3, 5, 7, 9)


def example1_plan(d1: int = 13, s1: int = 7, r2: int = 2) -> LinePlan:
    """
    Half-turn-symmetric plan on 13 x 19 seen as two overlapping 13 x 13 boards centered at (+-3, 0).

    Auxiliary lines: difference diagonals +-d1, sum diagonals +-s1, rows 0 and +-r2.
    """
    required = set(_lines(LineKind.DIFF_DIAG, EXAMPLE1_REQUIRED_DIAGONALS))
    required |= set(_lines(LineKind.SUM_DIAG, EXAMPLE1_REQUIRED_DIAGONALS))
    required |= set(_lines(LineKind.ROW, EXAMPLE1_REQUIRED_ROWS))
    required |= set(_lines(LineKind.COLUMN, EXAMPLE1_COLUMNS))
    auxiliary = (
        _lines(LineKind.DIFF_DIAG, (d1, -d1))
        + _lines(LineKind.SUM_DIAG, (s1, -s1))
        + _lines(LineKind.ROW, (0, r2, -r2))
    )
    return LinePlan(CenteredFrame(EXAMPLE1_DIMS, 1), 10, frozenset(required), tuple(auxiliary))


def example1_aux_options() -> List[Tuple[int, int, int]]:
    """All (d1, s1, r2), d1 and s1 odd, r2 even, with d1^2 + s1^2 = 210 + 2 r2^2 on the 13 x 19 board."""
    max_diag = (EXAMPLE1_DIMS.m - 1) // 2 + (EXAMPLE1_DIMS.n - 1) // 2
    max_row = (EXAMPLE1_DIMS.m - 1) // 2
    options = []
    for r2 in range(0, max_row + 1, 2):
        for d1 in range(1, max_diag + 1, 2):
            for s1 in range(1, max_diag + 1, 2):
                if d1 * d1 + s1 * s1 == 210 + 2 * r2 * r2:
                    options.append((d1, s1, r2))
    return sorted(options)


def _point_fits(frame: CenteredFrame, point: Point) -> bool:
    try:
        frame.to_corner(*point)
    except OffBoard:
        return False
    return True


class _PlanRealizer:
    """Pairs difference numbers with sum numbers under the column and row quotas of a plan"""

    def __init__(self, plan: LinePlan, limit: Optional[int]):
        self.plan = plan
        self.limit = limit
        self.diffs = sorted(plan.numbers(LineKind.DIFF_DIAG), key=lambda v: (-abs(v), v))
        self.sums = Counter(plan.numbers(LineKind.SUM_DIAG))
        self.cols = Counter(plan.numbers(LineKind.COLUMN))
        self.rows = Counter(plan.numbers(LineKind.ROW))
        self.found: List[FrozenSet[Point]] = []
        self.seen: Set[FrozenSet[Point]] = set()

    def _full(self) -> bool:
        return self.limit is not None and len(self.found) >= self.limit

    def _point(self, d: int, s: int) -> Optional[Point]:
        if (s - d) % 2:
            return None
        point = ((s - d) // 2, (s + d) // 2)
        if self.cols[point[0]] <= 0 or self.rows[point[1]] <= 0:
            return None
        return point if _point_fits(self.plan.frame, point) else None

    def _take(self, counter: Counter, values: Sequence[int]) -> bool:
        need = Counter(values)
        if any(counter[v] < c for v, c in need.items()):
            return False
        counter.subtract(need)
        return True

    def _record(self, placed: List[Point]) -> None:
        key = frozenset(placed)
        if len(key) == len(placed) and key not in self.seen:
            self.seen.add(key)
            self.found.append(key)

    def run_all(self, placed: List[Point], index: int) -> None:
        if self._full():
            return
        if index == len(self.diffs):
            self._record(placed)
            return
        d = self.diffs[index]
        for s in sorted(v for v, c in self.sums.items() if c > 0):
            point = self._point(d, s)
            if point is None or point in placed:
                continue
            self.sums[s] -= 1
            self.cols[point[0]] -= 1
            self.rows[point[1]] -= 1
            placed.append(point)
            self.run_all(placed, index + 1)
            placed.pop()
            self.sums[s] += 1
            self.cols[point[0]] += 1
            self.rows[point[1]] += 1

    def run_symmetric(self, placed: List[Point], diffs: Counter) -> None:
        if self._full():
            return
        remaining = [v for v, c in diffs.items() if c > 0]
        if not remaining:
            self._record(placed)
            return
        d = max(remaining, key=lambda v: (abs(v), v))
        for s in sorted(v for v, c in self.sums.items() if c > 0):
            point = self._point(d, s)
            if point is None or point in placed:
                continue
            pair = [point] if point == (0, 0) else [point, (-point[0], -point[1])]
            taken = []
            ok = True
            for counter, values in (
                (diffs, [p[1] - p[0] for p in pair]),
                (self.sums, [p[1] + p[0] for p in pair]),
                (self.cols, [p[0] for p in pair]),
                (self.rows, [p[1] for p in pair]),
            ):
                if not self._take(counter, values):
                    ok = False
                    break
                taken.append((counter, values))
            if ok and not any(p in placed for p in pair) and all(_point_fits(self.plan.frame, p) for p in pair):
                placed.extend(pair)
                self.run_symmetric(placed, diffs)
                del placed[-len(pair):]
            for counter, values in taken:
                counter.update(values)


def zero_cover_search(
    dims: Union[BoardDims, Tuple[int, int]],
    size: int,
    line_plan: LinePlan,
    half_turn_first: bool = True,
    exhaustive: bool = True,
    limit: Optional[int] = None,
) -> List[QueenSet]:
    """
    Every placement of size queens realizing the plan that is a 0-cover.

    Half-turn-symmetric placements come first; with exhaustive=False the general search only
    runs when the symmetric one finds nothing.
    """
    board = as_dims(dims)
    if line_plan.frame.dims != board or line_plan.size != size:
        raise InfeasiblePlan(f"plan is for {line_plan.size} queens on {line_plan.frame.dims.label()}")
    check_plan(line_plan)
    realizer = _PlanRealizer(line_plan, limit)
    if half_turn_first:
        realizer.run_symmetric([], Counter(line_plan.numbers(LineKind.DIFF_DIAG)))
        LOGGER.debug("%d half-turn-symmetric realizations", len(realizer.found))
    if exhaustive or not realizer.found:
        realizer.run_all([], 0)
    results = []
    for points in realizer.found:
        s = line_plan.frame.queen_set(sorted(points))
        realized = realized_plan(s, line_plan.frame)
        assert all(realized.numbers(kind) == line_plan.numbers(kind) for kind in LineKind), \
            f"{s} does not realize the plan"
        if is_zero_cover(s) is not None:
            results.append(s)
    LOGGER.info("%s: %d 0-covers realize the plan", board.label(), len(results))
    return results


# ---------------------------------------------------------------------
# Centrally strong sets
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class CentralParams:
    """Central m1 x n1 sub-board with k diagonals omitted at each end of both diagonal families"""
    m1: int
    n1: int
    k: int

    @property
    def m(self) -> int:
        return self.m1 + 2 * self.n1 - 2 * self.k

    @property
    def n(self) -> int:
        return 2 * self.m1 + self.n1 - 2 * self.k

    @property
    def g(self) -> int:
        return self.m1 + self.n1 - 2 * self.k - 1

    @property
    def dims(self) -> BoardDims:
        return BoardDims(self.m, self.n)

    @property
    def max_diagonal(self) -> int:
        return self.m1 + self.n1 - 2 * self.k - 2

    def required_diagonals(self) -> List[int]:
        """Doubled-frame numbers of the diagonals that must hold exactly one queen."""
        return list(range(-self.max_diagonal, self.max_diagonal + 1, 2))

    def columns(self) -> List[int]:
        return list(range(1 - self.n1, self.n1, 2))

    def rows(self) -> List[int]:
        return list(range(1 - self.m1, self.m1, 2))

    def as_dict(self) -> Dict[str, int]:
        return {"m1": self.m1, "n1": self.n1, "k": self.k, "m": self.m, "n": self.n, "g": self.g}


def central_params(m1: int, n1: int, k: int) -> CentralParams:
    if n1 < 1 or m1 < n1:
        raise InvalidParams(f"need m1 >= n1 >= 1, got m1={m1}, n1={n1}")
    if m1 % 2 == 0 and n1 % 2 == 0:
        raise InvalidParity(f"m1={m1} and n1={n1} are both even")
    if k < 0:
        raise InvalidParams(f"k must be nonnegative, got {k}")
    if n1 - 2 * k - 1 < 0 or m1 - 2 * k - 1 < 0:
        raise NegativeAuxCount(f"k={k} is too large for a {m1} x {n1} sub-board")
    return CentralParams(m1, n1, k)


def sum_orth(params: CentralParams) -> int:
    """Sum of squares of the auxiliary column and row numbers forced by the quadratic constraint."""
    return 2 * (comb(params.g + 1, 3) - comb(params.m1 + 1, 3) - comb(params.n1 + 1, 3))


def _auxiliary(values: Iterable[int], required: Iterable[int]) -> List[int]:
    extra = Counter(values)
    extra.subtract(Counter(required))
    return sorted(v for v, c in extra.items() for _ in range(max(c, 0)))


def strong_violations(points: Sequence[Point], params: CentralParams) -> List[str]:
    """Every way the doubled-frame points fail to be a centrally strong set (empty when they are one)."""
    problems = []
    if len(points) != params.g:
        problems.append(f"{len(points)} queens, expected {params.g}")
    required = params.required_diagonals()
    for label, values in (("difference", [y - x for x, y in points]), ("sum", [y + x for x, y in points])):
        if sorted(values) != required:
            problems.append(f"{label} diagonals {sorted(values)} differ from {required}")
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    if any((x - params.n1 + 1) % 2 for x in xs) or any((y - params.m1 + 1) % 2 for y in ys):
        problems.append("a point is not a square center of the doubled frame")
    if not set(params.columns()) <= set(xs):
        problems.append("a column of the central sub-board is empty")
    if not set(params.rows()) <= set(ys):
        problems.append("a row of the central sub-board is empty")
    if not problems:
        aux_cols = _auxiliary(xs, params.columns())
        aux_rows = _auxiliary(ys, params.rows())
        if len(aux_cols) != params.m1 - 2 * params.k - 1 or len(aux_rows) != params.n1 - 2 * params.k - 1:
            problems.append("auxiliary line counts are off")
        if sum(aux_cols) or sum(aux_rows):
            problems.append("auxiliary line numbers do not sum to zero")
        if sum(v * v for v in aux_cols + aux_rows) != sum_orth(params):
            problems.append("auxiliary squared sum differs from the quadratic constraint")
    return problems


@dataclass(frozen=True)
class StrongSet:
    """A centrally strong set: doubled-frame points plus the queens they give on the (m, n) board"""
    points: Tuple[Point, ...]
    params: CentralParams
    strict: bool
    queens: QueenSet = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.points)

    def unit_points(self) -> List[Point]:
        """Points with the doubling undone (only integral when both sides of C are odd)."""
        return [(x // 2, y // 2) for x, y in self.points]


def make_strong_set(points: Iterable[Point], params: CentralParams) -> StrongSet:
    ordered = tuple(sorted(points, key=lambda p: (p[1], p[0])))
    strict = all(abs(x) <= params.n1 - 1 and abs(y) <= params.m1 - 1 for x, y in ordered)
    queens = CenteredFrame(params.dims, 2).queen_set(ordered)
    return StrongSet(ordered, params, strict, queens)


class _StrongSearch:
    """Assigns each required difference diagonal a distinct sum diagonal, keeping every C line reachable"""

    def __init__(self, params: CentralParams, strict_only: bool, limit: Optional[int]):
        self.params = params
        self.limit = limit
        self.diffs = sorted(params.required_diagonals(), key=lambda v: (-abs(v), v))
        self.sums = set(params.required_diagonals())
        if strict_only:
            self.x_max, self.y_max = params.n1 - 1, params.m1 - 1
        else:
            self.x_max, self.y_max = params.n - 1, params.m - 1
        self.col_count = Counter()
        self.row_count = Counter()
        self.columns = set(params.columns())
        self.rows = set(params.rows())
        self.found: List[Tuple[Point, ...]] = []

    def run(self, placed: List[Point], index: int) -> None:
        if self.limit is not None and len(self.found) >= self.limit:
            return
        remaining = len(self.diffs) - index
        empty_cols = sum(1 for c in self.columns if not self.col_count[c])
        empty_rows = sum(1 for r in self.rows if not self.row_count[r])
        if empty_cols > remaining or empty_rows > remaining:
            return
        if not remaining:
            self.found.append(tuple(placed))
            return
        d = self.diffs[index]
        parity = (self.params.n1 - 1) % 2
        for s in sorted(self.sums):
            if (s - d) % 2:
                continue
            x, y = (s - d) // 2, (s + d) // 2
            if x % 2 != parity or abs(x) > self.x_max or abs(y) > self.y_max:
                continue
            self.sums.discard(s)
            self.col_count[x] += 1
            self.row_count[y] += 1
            placed.append((x, y))
            self.run(placed, index + 1)
            placed.pop()
            self.col_count[x] -= 1
            self.row_count[y] -= 1
            self.sums.add(s)


def centrally_strong_search(
    params: CentralParams,
    strict_only: bool = False,
    limit: Optional[int] = None,
) -> List[StrongSet]:
    """All centrally strong sets for the parameters (up to limit), each checked to dominate its board."""
    if sum_orth(params) < 0:
        LOGGER.debug("%s: negative auxiliary squared sum, nothing to search", params)
        return []
    search = _StrongSearch(params, strict_only, limit)
    search.run([], 0)
    results = []
    for points in search.found:
        strong = make_strong_set(points, params)
        problems = strong_violations(strong.points, params)
        assert not problems, f"search produced {strong.points}: {'; '.join(problems)}"
        assert strong.queens.dominates, f"centrally strong set {strong.points} misses part of {params.dims.label()}"
        results.append(strong)
    results.sort(key=lambda ss: ss.queens.key)
    LOGGER.info("(m1, n1, k) = (%d, %d, %d): %d centrally strong sets", params.m1, params.n1, params.k, len(results))
    return results


def largest_feasible_k(m1: int, n1: int, k_max_search: Optional[int] = None) -> Optional[int]:
    """Largest k with at least one centrally strong set for (m1, n1), or None."""
    top = (min(m1, n1) - 1) // 2
    if k_max_search is not None:
        top = min(top, k_max_search)
    for k in range(top, -1, -1):
        try:
            params = central_params(m1, n1, k)
        except NegativeAuxCount:
            continue
        if sum_orth(params) < 0:
            continue
        if centrally_strong_search(params, limit=1):
            return k
    return None


def prefer_wider(params: CentralParams) -> CentralParams:
    """(m1, n1 + 2, k + 1) when feasible: same queen count on a board two rows taller."""
    try:
        wider = central_params(params.m1, params.n1 + 2, params.k + 1)
    except InvalidParams:
        return params
    if sum_orth(wider) >= 0 and centrally_strong_search(wider, limit=1):
        return wider
    return params


def detect_centrally_strong(s: QueenSet) -> Optional[CentralParams]:
    """
    Parameters for which s, on its own board, is centrally strong.

    The board and |s| fix m1 + n1 = m + n - 2|s| - 2 and m1 - n1 = n - m, which leaves one candidate.
    """
    m, n, size = s.dims.m, s.dims.n, len(s)
    if m > n:
        return None
    total = m + n - 2 * size - 2
    if total < 2 or (total + n - m) % 2 or (total - size - 1) % 2:
        return None
    m1, n1, k = (total + n - m) // 2, (total - n + m) // 2, (total - size - 1) // 2
    try:
        params = central_params(m1, n1, k)
    except InvalidParams:
        return None
    if params.dims != s.dims:
        return None
    frame = CenteredFrame(s.dims, 2)
    points = [frame.from_corner(sq) for sq in s.squares]
    return params if not strong_violations(points, params) else None


# ---------------------------------------------------------------------
# Boards covered by one set
# ---------------------------------------------------------------------

@dataclass
class BoardRange:
    """Every (m', n') a set was checked to dominate"""
    pairs: List[Tuple[int, int]]

    @property
    def m_range(self) -> Tuple[int, int]:
        ms = [m for m, _ in self.pairs]
        return (min(ms), max(ms))

    @property
    def n_range(self) -> Tuple[int, int]:
        ns = [n for _, n in self.pairs]
        return (min(ns), max(ns))

    def is_full_rectangle(self) -> bool:
        (m_lo, m_hi), (n_lo, n_hi) = self.m_range, self.n_range
        return len(set(self.pairs)) == (m_hi - m_lo + 1) * (n_hi - n_lo + 1)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs


def _window_offset(low: int, high: int, size: int, length: int) -> int:
    """Offset of a size-long window inside 1..length containing low..high, as centered as possible."""
    options = range(max(0, high - size), min(length - size, low - 1) + 1)
    return min(options, key=lambda o: (abs(2 * o - (length - size)), o))


def place_in_window(s: QueenSet, m: int, n: int) -> QueenSet:
    """The set moved onto an m x n board cut from its own board around it."""
    xs = [sq.x for sq in s.squares]
    ys = [sq.y for sq in s.squares]
    if n < max(xs) - min(xs) + 1 or m < max(ys) - min(ys) + 1 or m > s.dims.m or n > s.dims.n:
        raise OffBoard(f"{s} does not fit a {m}x{n} window")
    ox = _window_offset(min(xs), max(xs), n, s.dims.n)
    oy = _window_offset(min(ys), max(ys), m, s.dims.m)
    return QueenSet(tuple(Square(sq.x - ox, sq.y - oy) for sq in s.squares), BoardDims(m, n))


def applicable_boards(ss: Union[StrongSet, QueenSet]) -> BoardRange:
    """Every smaller board (down to the set's bounding box) that the set, recentered, dominates."""
    s = ss.queens if isinstance(ss, StrongSet) else ss
    m_min = max(sq.y for sq in s.squares) - min(sq.y for sq in s.squares) + 1
    n_min = max(sq.x for sq in s.squares) - min(sq.x for sq in s.squares) + 1
    pairs = []
    for m in range(m_min, s.dims.m + 1):
        for n in range(n_min, s.dims.n + 1):
            if place_in_window(s, m, n).dominates:
                pairs.append((m, n))
    return BoardRange(pairs)


def family_bounds(ss: Union[StrongSet, QueenSet], augment_steps: int = 0) -> Dict[Tuple[int, int], int]:
    """Upper bounds on gamma from one set: its applicable boards, then one more queen per corner augmentation."""
    s = ss.queens if isinstance(ss, StrongSet) else ss
    bounds: Dict[Tuple[int, int], int] = {}
    for m, n in applicable_boards(s).pairs:
        for step in range(augment_steps + 1):
            pair = (m + step, n + step)
            bounds[pair] = min(bounds.get(pair, len(s) + step), len(s) + step)
    return dict(sorted(bounds.items()))


def below_half_width(s: QueenSet) -> bool:
    """True when |s| < floor(n/2) on its board (m <= n orientation); neither scheme produces such sets."""
    n = max(s.dims.m, s.dims.n)
    return len(s) < n // 2


# ---------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------

def family_prop5(m: int) -> QueenSet:
    """m - 2 queens filling the central column of Q(m x (2m - 3))."""
    if m < 3:
        raise InvalidM1(f"the central-column family needs m >= 3, got {m}")
    dims = BoardDims(m, 2 * m - 3)
    return QueenSet(tuple(Square(m - 1, y) for y in range(2, m)), dims)


def _symmetric(points: Iterable[Point]) -> List[Point]:
    result: List[Point] = []
    for x, y in points:
        result.append((x, y))
        result.append((-x, -y))
    return result


def _from_unit(points: Iterable[Point], params: CentralParams) -> StrongSet:
    doubled = {(2 * x, 2 * y) for x, y in points}
    return make_strong_set(doubled, params)


def family_n1_5(m1: int) -> StrongSet:
    """Strict centrally strong sets for n1 = 5, k = 1 and odd m1 >= 5."""
    if m1 < 5 or m1 % 2 == 0:
        raise InvalidM1(f"n1 = 5 family needs odd m1 >= 5, got {m1}")
    points: List[Point] = [(0, 0)]
    if m1 % 4 == 1:
        points += _symmetric([(-1, (m1 - 1) // 2)])
        for i in range(1, (m1 - 1) // 4 + 1):
            points += _symmetric([(0, 2 * i), (2, (m1 + 5) // 2 - 4 * i)])
    else:
        points += _symmetric([(1, (m1 - 1) // 2), (-1, (m1 - 1) // 2), (-1, (m1 - 3) // 2)])
        for i in range(1, (m1 - 7) // 4 + 1):
            points += _symmetric([(0, 2 * i)])
        for i in range(1, (m1 - 3) // 4 + 1):
            points += _symmetric([(2, (m1 + 3) // 2 - 4 * i)])
    return _from_unit(points, central_params(m1, 5, 1))


def family_n1_7(m1: int) -> StrongSet:
    """Strict centrally strong sets for n1 = 7, k = 2 and odd m1 >= 7."""
    if m1 < 7 or m1 % 2 == 0:
        raise InvalidM1(f"n1 = 7 family needs odd m1 >= 7, got {m1}")
    params = central_params(m1, 7, 2)
    if m1 == 7:
        points = [(i + 2 * j, 2 * i - j) for i in (-1, 0, 1) for j in (-1, 0, 1)]
        return _from_unit(points, params)
    if m1 == 9:
        points = [(0, 0)] + _symmetric([(1, 4), (2, -3)])
        points += _symmetric([(1 + 2 * j, 2 - j) for j in (-1, 0, 1)])
        return _from_unit(points, params)
    l1 = (m1 - 11) // 4
    l2 = (m1 - 11 + 3) // 4
    points = [(0, 0)] + _symmetric([
        (1, 2),
        (2, -3),
        (3, -1),
        ((-1) ** l1, -2 * l1 - 5),
        ((-1) ** (l2 + 1), -2 * l2 - 4),
    ])
    for j in range(1, (l2 + 1) // 2 + 1):
        points += _symmetric([(2, 4 * j), (2, 4 * j + 1)])
    for j in range(1, l2 // 2 + 1):
        points += _symmetric([(2, -4 * j - 2), (2, -4 * j - 3)])
    if l2 == l1:
        points += _symmetric([(2, (-1) ** l1 * (2 * l1 + 4))])
    return _from_unit(points, params)


if __name__ == "__main__":
    from board import render_board

    example1 = zero_cover_search(EXAMPLE1_DIMS, 10, example1_plan(), exhaustive=False)
    print(f"Example plan on 13x19: {len(example1)} 0-cover(s)")
    if example1:
        print(render_board(example1[0]))
    for ss in centrally_strong_search(central_params(7, 4, 1), strict_only=True)[:1]:
        print(f"\n(7,4,1) -> {ss.queens}")
        print(render_board(ss.queens))
